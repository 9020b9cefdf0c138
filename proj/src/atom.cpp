#include "unruh/atom.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace unruh::atom {

namespace {

using Complex = std::complex<double>;

// Basis index 0 = |->, 1 = |+>.
using Operator2 = std::array<std::array<Complex, 2>, 2>;

Operator2 r2_operator() {
    // R+ = |+><-|, R- = |-><+|, R2 = i (R- - R+) / 2
    const Complex half_i{0.0, 0.5};
    Operator2 r2{};
    r2[0][1] = half_i;   // <-|R2|+>
    r2[1][0] = -half_i;  // <+|R2|->
    return r2;
}

int index_of(Level level) {
    return level == Level::ground ? 0 : 1;
}

double energy(int index, double omega0) {
    return index == 0 ? -0.5 * omega0 : 0.5 * omega0;
}

} // namespace

void TwoLevelAtom::validate() const {
    if (!(omega0 > 0.0))
        throw std::invalid_argument("transition frequency omega0 must be positive");
}

std::vector<TransitionChannel> channels(const TwoLevelAtom& atom) {
    atom.validate();
    const Operator2 r2 = r2_operator();
    const int b = index_of(atom.level);
    std::vector<TransitionChannel> out;
    for (int d = 0; d < 2; ++d) {
        const double weight = std::norm(r2[b][d]);
        if (weight == 0.0) continue;
        out.push_back({energy(b, atom.omega0) - energy(d, atom.omega0), weight});
    }
    return out;
}

std::complex<double> susceptibility_c(const TwoLevelAtom& atom, double dtau) {
    const Complex i{0.0, 1.0};
    Complex sum{0.0, 0.0};
    for (const auto& ch : channels(atom))
        sum += ch.weight * (std::exp(i * ch.omega_bd * dtau) + std::exp(-i * ch.omega_bd * dtau));
    return 0.5 * sum;
}

std::complex<double> susceptibility_chi(const TwoLevelAtom& atom, double dtau) {
    const Complex i{0.0, 1.0};
    Complex sum{0.0, 0.0};
    for (const auto& ch : channels(atom))
        sum += ch.weight * (std::exp(i * ch.omega_bd * dtau) - std::exp(-i * ch.omega_bd * dtau));
    return 0.5 * sum;
}

Level parse_level(std::string_view name) {
    if (name == "ground") return Level::ground;
    if (name == "excited") return Level::excited;
    throw std::invalid_argument("unknown atomic level '" + std::string(name) +
                                "' (expected ground or excited)");
}

std::string_view to_string(Level level) {
    return level == Level::ground ? "ground" : "excited";
}

} // namespace unruh::atom
