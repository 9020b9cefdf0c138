// rates.hpp - closed-form long-time rates of change of the atomic energy,
// <dH_A/dtau>, for an atom on a uniformly accelerated worldline with proper
// acceleration a, quadratically coupled (strength mu) to the massless Dirac
// vacuum. Natural units; a = 0 is the inertial atom.
//
// Per transition channel with frequency w = |omega_bd| and weight W:
//   vf    = -/+ mu^2/(120 pi^3) W w^6 f (1 + 2 n)   (- for omega_bd > 0)
//   cross = -   mu^2/(120 pi^3) W w^6 f             (both signs)
//   total = -   mu^2/(60 pi^3)  W w^6 f (1 + n)     (omega_bd > 0)
//         = +   mu^2/(60 pi^3)  W w^6 f n           (omega_bd < 0)
// with f = 1 + 5 a^2/w^2 + 4 a^4/w^4 and n = 1/(e^{2 pi w/a} - 1).
// The radiation-reaction part is O(mu^3) and reported as zero.

#pragma once

#include <string>
#include <vector>

#include "unruh/atom.hpp"

namespace unruh::rates {

inline constexpr double kSpeedOfLight = 2.99792458e8; // m/s
inline constexpr const char* kRadiationReactionNote = "order mu^3, neglected";

struct ChannelAnnotation {
    double omega_bd{0.0};
    double poly_factor{0.0};
    double planck_n{0.0};
};

struct RateBreakdown {
    double vf{0.0};
    double cross{0.0};
    double rr{0.0};
    double total{0.0};
    double coupling{0.0};
    double accel{0.0};
    std::vector<ChannelAnnotation> channels;
};

// 1 + 5 a^2/omega^2 + 4 a^4/omega^4. Throws for omega = 0 or a < 0.
double polynomial_factor(double omega, double a);

// 1/(e^{2 pi omega/a} - 1); returns 0 once the exponent exceeds 745.
// Throws for non-positive arguments.
double planck_number(double omega, double a);

// Thermal occupation allowing a = 0 (returns 0 there).
double thermal_occupation(double omega, double a);

double rate_vf(const atom::TwoLevelAtom& atom, double a, double mu);
double rate_cross(const atom::TwoLevelAtom& atom, double a, double mu);
RateBreakdown rate_total(const atom::TwoLevelAtom& atom, double a, double mu);

// Per-channel closed forms (mu = 1 scaling applied by the caller).
double channel_rate_vf(const atom::TransitionChannel& ch, double a);
double channel_rate_cross(const atom::TransitionChannel& ch, double a);

// Upward over downward total rate; equals e^{-2 pi omega0 / a}.
double detailed_balance_ratio(double omega0, double a);

// omega0 / ln(1/ratio); equals a / (2 pi).
double effective_temperature(double omega0, double a);

// a / c in s^-1. Throws for negative input.
double si_acceleration_to_natural(double a_si);

} // namespace unruh::rates
