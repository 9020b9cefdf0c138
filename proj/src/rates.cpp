#include "unruh/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruh::rates {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxExponent = 745.0;

void check_accel(double a) {
    if (!(a >= 0.0) || !std::isfinite(a))
        throw std::invalid_argument("acceleration must be finite and non-negative");
}

// mu^2/(120 pi^3) W w^6 f with mu = 1
double channel_scale(const atom::TransitionChannel& ch, double a) {
    const double w = std::abs(ch.omega_bd);
    return ch.weight * std::pow(w, 6) * polynomial_factor(w, a) / (120.0 * std::pow(kPi, 3));
}

} // namespace

double polynomial_factor(double omega, double a) {
    if (omega == 0.0)
        throw std::invalid_argument("polynomial factor needs a non-zero frequency");
    check_accel(a);
    const double r2 = (a * a) / (omega * omega);
    return 1.0 + 5.0 * r2 + 4.0 * r2 * r2;
}

double planck_number(double omega, double a) {
    if (!(omega > 0.0) || !(a > 0.0))
        throw std::invalid_argument("planck number needs positive frequency and acceleration");
    const double x = 2.0 * kPi * omega / a;
    if (x > kMaxExponent) return 0.0;
    return 1.0 / std::expm1(x);
}

double thermal_occupation(double omega, double a) {
    check_accel(a);
    return a == 0.0 ? 0.0 : planck_number(std::abs(omega), a);
}

double channel_rate_vf(const atom::TransitionChannel& ch, double a) {
    const double n = thermal_occupation(ch.omega_bd, a);
    const double magnitude = channel_scale(ch, a) * (1.0 + 2.0 * n);
    return ch.omega_bd > 0.0 ? -magnitude : magnitude;
}

double channel_rate_cross(const atom::TransitionChannel& ch, double a) {
    return -channel_scale(ch, a);
}

double rate_vf(const atom::TwoLevelAtom& atom, double a, double mu) {
    double sum = 0.0;
    for (const auto& ch : atom::channels(atom)) sum += channel_rate_vf(ch, a);
    return mu * mu * sum;
}

double rate_cross(const atom::TwoLevelAtom& atom, double a, double mu) {
    double sum = 0.0;
    for (const auto& ch : atom::channels(atom)) sum += channel_rate_cross(ch, a);
    return mu * mu * sum;
}

RateBreakdown rate_total(const atom::TwoLevelAtom& atom, double a, double mu) {
    RateBreakdown out;
    out.coupling = mu;
    out.accel = a;
    out.vf = rate_vf(atom, a, mu);
    out.cross = rate_cross(atom, a, mu);

    double total = 0.0;
    for (const auto& ch : atom::channels(atom)) {
        const double n = thermal_occupation(ch.omega_bd, a);
        // 1/(60 pi^3) = 2/(120 pi^3)
        const double scale = 2.0 * channel_scale(ch, a);
        total += ch.omega_bd > 0.0 ? -scale * (1.0 + n) : scale * n;
        out.channels.push_back({ch.omega_bd, polynomial_factor(ch.omega_bd, a), n});
    }
    out.total = mu * mu * total;
    return out;
}

double detailed_balance_ratio(double omega0, double a) {
    if (!(omega0 > 0.0) || !(a > 0.0))
        throw std::invalid_argument("detailed balance needs positive omega0 and acceleration");
    const double up = rate_total({omega0, atom::Level::ground}, a, 1.0).total;
    const double down = rate_total({omega0, atom::Level::excited}, a, 1.0).total;
    return up / std::abs(down);
}

double effective_temperature(double omega0, double a) {
    const double ratio = detailed_balance_ratio(omega0, a);
    if (ratio <= 0.0)
        throw std::domain_error("Boltzmann factor underflows; temperature not resolvable");
    return omega0 / std::log(1.0 / ratio);
}

double si_acceleration_to_natural(double a_si) {
    if (!(a_si >= 0.0))
        throw std::invalid_argument("SI acceleration must be non-negative");
    return a_si / kSpeedOfLight;
}

} // namespace unruh::rates
