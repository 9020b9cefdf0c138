// atom.hpp - two-level atom with levels -/+ omega0/2 coupled through
// R2 = i (R- - R+)/2.

#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace unruh::atom {

enum class Level { ground, excited };

struct TwoLevelAtom {
    double omega0{1.0};
    Level level{Level::ground};

    // Throws std::invalid_argument unless omega0 > 0.
    void validate() const;
};

// One term of the sum over intermediate states d: omega_bd = omega_b - omega_d
// and weight = |<b|R2(0)|d>|^2.
struct TransitionChannel {
    double omega_bd{0.0};
    double weight{0.0};
};

std::vector<TransitionChannel> channels(const TwoLevelAtom& atom);

// Symmetric and antisymmetric atomic two-time functions of R2 in the initial
// level, as functions of dtau = tau - tau'.
std::complex<double> susceptibility_c(const TwoLevelAtom& atom, double dtau);
std::complex<double> susceptibility_chi(const TwoLevelAtom& atom, double dtau);

Level parse_level(std::string_view name);
std::string_view to_string(Level level);

} // namespace unruh::atom
