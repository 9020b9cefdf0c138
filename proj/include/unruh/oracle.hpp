// oracle.hpp - independent numerical check of the closed-form rates.
//
// The vf and cross rates per transition channel are
//
//   (a^6 / 128 pi^4) W omega_bd  Int_0^inf d(dtau) B_-/+(dtau) (e^{i omega_bd dtau} +/- e^{-i omega_bd dtau})
//
// with B_-/+ = sinh^-6(a dtau/2 - i eps) +/- sinh^-6(a dtau/2 + i eps). B_+ is even
// and B_- odd in dtau, so both become the full-line transform
// Int_R B(dtau) e^{i omega_bd dtau} d(dtau). In u = a dtau/2 each branch is
//
//   F_branch(k, eps) = Int_R sinh^-6(u -/+ i eps) e^{i k u} du,  k = 2 omega_bd / a,
//
// which is integrated numerically at finite eps along a horizontal line
// Im u = c placed inside the pole-free strip of that branch (poles at
// u = +/- i eps + i pi n). Moving the line within the strip leaves the
// integral unchanged; it keeps the integrand at O(1) instead of eps^-6 near
// dtau = 0. The eps -> 0 limit is taken by polynomial extrapolation over the
// configured eps schedule.

#pragma once

#include <complex>
#include <vector>

#include "unruh/atom.hpp"
#include "unruh/correlators.hpp"

namespace unruh::oracle {

using Complex = std::complex<double>;

struct QuadratureConfig {
    // Strictly decreasing, at least three entries.
    std::vector<double> epsilons{4e-3, 2e-3, 1e-3, 5e-4};
    // Integrate |dtau| <= T with 64 e^{-3 a T} = truncation_tol.
    double truncation_tol{1e-12};
    // Gauss-Legendre nodes per unit of a*dtau.
    int nodes_per_unit{200};
    // Target relative tolerance for extrapolation residual and comparison.
    double tol{1e-4};

    void validate() const;
};

struct Extrapolation {
    double value{0.0};
    double residual{0.0};
};

// Neville interpolation of (eps_i, values_i) evaluated at eps = 0. The
// residual is the last correction added to the tableau.
Extrapolation extrapolate_epsilon(const std::vector<double>& values,
                                  const std::vector<double>& epsilons);

struct EpsilonSample {
    double epsilon{0.0};
    Complex value;
};

struct IntegralResult {
    double value{0.0};          // extrapolated, real part
    double residual{0.0};       // absolute extrapolation residual
    double imag_residue{0.0};   // max |Im| over the schedule
    std::vector<EpsilonSample> samples;
};

// Horizontal contour used for one branch: Im u = offset, and the half-width
// of the truncated line in u.
struct ContourLine {
    double offset{0.0};
    double half_width{0.0};
    double panel_width{0.0};
};

ContourLine contour_for(correlators::Branch branch, double k, double eps,
                        const QuadratureConfig& cfg);

// sinh^-6(u -/+ i eps) e^{i k u} at the complex point u.
Complex branch_integrand(correlators::Branch branch, double k, double eps, Complex u);

// F_branch(k, eps) by Gauss-Legendre panels along the shifted line.
Complex branch_transform(correlators::Branch branch, double k, double eps,
                         const QuadratureConfig& cfg);

// Per-channel rates for mu = 1. Throw ConvergenceError when the relative
// extrapolation residual exceeds cfg.tol, std::invalid_argument for a <= 0.
IntegralResult vf_integral_numeric(const atom::TransitionChannel& channel, double a,
                                   const QuadratureConfig& cfg);
IntegralResult cross_integral_numeric(const atom::TransitionChannel& channel, double a,
                                      const QuadratureConfig& cfg);

struct OracleReport {
    atom::TwoLevelAtom atom;
    double accel{0.0};
    double coupling{0.0};
    double tol{0.0};
    double numeric_vf{0.0};
    double numeric_cross{0.0};
    double closed_vf{0.0};
    double closed_cross{0.0};
    double rel_err_vf{0.0};
    double rel_err_cross{0.0};
    double residual_vf{0.0};
    double residual_cross{0.0};
    std::vector<double> epsilons;
    std::vector<double> per_epsilon_vf;
    std::vector<double> per_epsilon_cross;
    bool pass{false};
};

OracleReport verify_rates(const atom::TwoLevelAtom& atom, double a, double mu,
                          const QuadratureConfig& cfg);

} // namespace unruh::oracle
