#include "unruh/clifford.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace unruh::clifford {

namespace {

using Matrix2C = Eigen::Matrix2cd;

Matrix2C pauli(int i) {
    const Complex I{0.0, 1.0};
    Matrix2C s;
    switch (i) {
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -I, I, 0.0; break;
    case 3: s << 1.0, 0.0, 0.0, -1.0; break;
    default: throw std::invalid_argument("pauli index must be 1..3");
    }
    return s;
}

void check_spinor_args(const FourVector& k, int s, double m) {
    if (!(m > 0.0))
        throw std::invalid_argument("spinor mass must be positive");
    if (s != 1 && s != 2)
        throw std::invalid_argument("spin index must be 1 or 2");
    const double energy = std::sqrt(k.x * k.x + k.y * k.y + k.z * k.z + m * m);
    if (std::abs(k.t - energy) > 1e-12 * energy)
        throw std::invalid_argument("momentum is not on shell");
}

Spinor boosted(const Matrix4C& numerator, const FourVector& k, double m, int index) {
    Spinor rest = Spinor::Zero();
    rest(index) = 1.0;
    return numerator * rest / std::sqrt(2.0 * m * (k.t + m));
}

} // namespace

double FourVector::operator[](int mu) const {
    switch (mu) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw std::invalid_argument("four-vector index must be 0..3");
    }
}

double metric(int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
        throw std::invalid_argument("metric index must be 0..3");
    if (mu != nu) return 0.0;
    return mu == 0 ? 1.0 : -1.0;
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

Matrix4C gamma_matrix(int mu) {
    if (mu < 0 || mu > 3)
        throw std::invalid_argument("gamma index must be 0..3, got " + std::to_string(mu));
    Matrix4C g = Matrix4C::Zero();
    if (mu == 0) {
        g.topLeftCorner<2, 2>() = Matrix2C::Identity();
        g.bottomRightCorner<2, 2>() = -Matrix2C::Identity();
    } else {
        const Matrix2C s = pauli(mu);
        g.topRightCorner<2, 2>() = s;
        g.bottomLeftCorner<2, 2>() = -s;
    }
    return g;
}

Matrix4C anticommutator(const Matrix4C& a, const Matrix4C& b) {
    return a * b + b * a;
}

Matrix4C slash(const FourVector& k) {
    // k^mu gamma_mu = k^0 gamma^0 - k^i gamma^i
    return k.t * gamma_matrix(0) - k.x * gamma_matrix(1) - k.y * gamma_matrix(2) -
           k.z * gamma_matrix(3);
}

Matrix4C boost_matrix(double a, double tau) {
    if (!(a > 0.0))
        throw std::invalid_argument("proper acceleration must be positive");
    const double half = 0.5 * a * tau;
    const Matrix4C lowered = -(gamma_matrix(0) * gamma_matrix(1)); // gamma_0 gamma_1
    return std::cosh(half) * Matrix4C::Identity() + std::sinh(half) * lowered;
}

Spinor spinor_u(const FourVector& k, int s, double m) {
    check_spinor_args(k, s, m);
    return boosted(slash(k) + m * Matrix4C::Identity(), k, m, s - 1);
}

Spinor spinor_v(const FourVector& k, int s, double m) {
    check_spinor_args(k, s, m);
    return boosted(-slash(k) + m * Matrix4C::Identity(), k, m, s + 1);
}

Eigen::RowVector4cd dirac_adjoint(const Spinor& psi) {
    return psi.adjoint() * gamma_matrix(0);
}

Complex trace(const Matrix4C& a) {
    return a.trace();
}

FourVector on_shell(double px, double py, double pz, double m) {
    return {std::sqrt(px * px + py * py + pz * pz + m * m), px, py, pz};
}

} // namespace unruh::clifford
