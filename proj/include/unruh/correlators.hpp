// correlators.hpp - massless Dirac vacuum correlators along the Rindler
// worldline t = sinh(a tau)/a, x = cosh(a tau)/a.
//
// The i-epsilon prescription is a dimensionless shift inside the hyperbolic
// sine: z(dtau) = i (2/a) sinh(a dtau/2 -/+ i eps). The field mass is fixed
// to zero everywhere in this module.

#pragma once

#include <complex>

#include "unruh/clifford.hpp"

namespace unruh::correlators {

using clifford::Complex;
using clifford::FourVector;
using clifford::Matrix4C;

inline constexpr double kDefaultEpsilon = 1e-4;

struct WorldlineParams {
    double accel{1.0};
    double epsilon{kDefaultEpsilon};

    // accel > 0 and 0 <= epsilon < 0.1, otherwise std::invalid_argument.
    // epsilon = 0 is allowed for evaluations away from dtau = 0.
    void validate() const;
};

enum class Branch { minus, plus };

struct StatFunctionPair {
    Complex c_f;
    Complex chi_f;
};

FourVector rindler_event(double tau, double a);

Complex interval_z(double dtau, const WorldlineParams& params, Branch branch);

// Massless scalar Wightman function 1/(4 pi^2 z^2) and its z-derivative.
// Both throw SingularityError at z = 0.
Complex wightman_massless(Complex z);
Complex dwightman_dz(Complex z);

// g(dtau) = -gamma^0 dG+/dz at z = z_-(dtau); the m S_dtau term vanishes.
Matrix4C g_matrix(double dtau, const WorldlineParams& params);

// Same object evaluated on the branch selected by `branch`.
Matrix4C g_matrix(double dtau, const WorldlineParams& params, Branch branch);

// Massless S_n^+(x(tau), x(tau')) = i gamma^mu d_mu G+ evaluated from the
// Minkowski displacement of two Rindler events, without regulator.
// Requires tau != tau'.
Matrix4C two_point_on_worldline(double tau, double tau_prime, double a);

// S_tau S_n^+(x(tau), x(tau')) S_tau'^{-1}; stationary in tau - tau'.
Matrix4C fermi_walker_two_point(double tau, double tau_prime, double a);

// Tr[S_n^+ S_n^-] on the chosen branch, computed as the matrix trace
// Tr[g g] = 4 (dG+/dz)^2.
Complex trace_pair(double dtau, const WorldlineParams& params, Branch branch);

// C^F and chi^F from the sinh^-6 closed forms.
StatFunctionPair stat_functions_closed(double dtau, const WorldlineParams& params);

// C^F and chi^F from the half-sum / half-difference of trace_pair branches.
StatFunctionPair stat_functions_trace(double dtau, const WorldlineParams& params);

} // namespace unruh::correlators
