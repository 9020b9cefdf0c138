// clifford.hpp - Dirac-representation gamma matrices, spinors and the
// Fermi-Walker spin boost along a uniformly accelerated worldline.
//
// Conventions: natural units, metric signature (+,-,-,-),
//   gamma^0 = [[I, 0], [0, -I]],  gamma^i = [[0, sigma_i], [-sigma_i, 0]].

#pragma once

#include <complex>

#include <Eigen/Core>

namespace unruh::clifford {

using Complex = std::complex<double>;
using Matrix4C = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;

struct FourVector {
    double t{0.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};

    double operator[](int mu) const;
};

// Minkowski metric component g^{mu nu} (diagonal +1,-1,-1,-1).
double metric(int mu, int nu);

// a.b with signature (+,-,-,-).
double minkowski_dot(const FourVector& a, const FourVector& b);

// Throws std::invalid_argument unless mu is 0..3.
Matrix4C gamma_matrix(int mu);

Matrix4C anticommutator(const Matrix4C& a, const Matrix4C& b);

// k^mu gamma_mu.
Matrix4C slash(const FourVector& k);

// S_tau = cosh(a tau/2) + gamma_0 gamma_1 sinh(a tau/2), with the lowered
// product gamma_0 gamma_1 = -gamma^0 gamma^1. This sign makes
// S_tau S_n^+(tau,tau') S_tau'^{-1} depend on tau - tau' only.
// Throws std::invalid_argument for a <= 0.
Matrix4C boost_matrix(double a, double tau);

// Positive/negative energy spinors for mass m > 0 and on-shell k, normalised
// so that ubar u = 1 and vbar v = -1. Spin index s is 1 or 2; the rest-frame
// spinors are the unit vectors e_{s-1} (u) and e_{s+1} (v).
Spinor spinor_u(const FourVector& k, int s, double m);
Spinor spinor_v(const FourVector& k, int s, double m);

// psi-bar = psi^dagger gamma^0, returned as a row vector.
Eigen::RowVector4cd dirac_adjoint(const Spinor& psi);

Complex trace(const Matrix4C& a);

// Builds the on-shell four-momentum (sqrt(|p|^2 + m^2), p).
FourVector on_shell(double px, double py, double pz, double m);

} // namespace unruh::clifford
