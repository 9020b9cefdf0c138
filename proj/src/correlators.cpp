#include "unruh/correlators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unruh/errors.hpp"

namespace unruh::correlators {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double branch_sign(Branch branch) {
    return branch == Branch::minus ? -1.0 : 1.0;
}

// sinh(a dtau/2 -/+ i eps)
Complex shifted_sinh(double dtau, const WorldlineParams& params, Branch branch) {
    return std::sinh(Complex{0.5 * params.accel * dtau, branch_sign(branch) * params.epsilon});
}

Complex inverse_sixth(Complex s) {
    if (s == Complex{0.0, 0.0})
        throw SingularityError("statistical function evaluated at dtau = 0 with eps = 0");
    const Complex s2 = s * s;
    return 1.0 / (s2 * s2 * s2);
}

} // namespace

void WorldlineParams::validate() const {
    if (!(accel > 0.0))
        throw std::invalid_argument("worldline acceleration must be positive");
    if (!(epsilon >= 0.0) || !(epsilon < 0.1))
        throw std::invalid_argument("regulator epsilon must lie in [0, 0.1)");
}

FourVector rindler_event(double tau, double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("proper acceleration must be positive");
    return {std::sinh(a * tau) / a, std::cosh(a * tau) / a, 0.0, 0.0};
}

Complex interval_z(double dtau, const WorldlineParams& params, Branch branch) {
    params.validate();
    return kI * (2.0 / params.accel) * shifted_sinh(dtau, params, branch);
}

Complex wightman_massless(Complex z) {
    if (z == Complex{0.0, 0.0})
        throw SingularityError("Wightman function evaluated at z = 0");
    return 1.0 / (4.0 * kPi * kPi * z * z);
}

Complex dwightman_dz(Complex z) {
    if (z == Complex{0.0, 0.0})
        throw SingularityError("Wightman derivative evaluated at z = 0");
    return -1.0 / (2.0 * kPi * kPi * z * z * z);
}

Matrix4C g_matrix(double dtau, const WorldlineParams& params, Branch branch) {
    const Complex derivative = dwightman_dz(interval_z(dtau, params, branch));
    return -derivative * clifford::gamma_matrix(0);
}

Matrix4C g_matrix(double dtau, const WorldlineParams& params) {
    return g_matrix(dtau, params, Branch::minus);
}

Matrix4C two_point_on_worldline(double tau, double tau_prime, double a) {
    const FourVector x = rindler_event(tau, a);
    const FourVector xp = rindler_event(tau_prime, a);
    const FourVector sep{x.t - xp.t, x.x - xp.x, x.y - xp.y, x.z - xp.z};
    const double interval = clifford::minkowski_dot(sep, sep);
    if (interval == 0.0)
        throw SingularityError("coincident points on the worldline");
    // G+ = -1/(4 pi^2 X.X), so d_mu G+ = 2 X_mu / (4 pi^2 (X.X)^2).
    const double scale = 2.0 / (4.0 * kPi * kPi * interval * interval);
    return kI * scale * clifford::slash(sep);
}

Matrix4C fermi_walker_two_point(double tau, double tau_prime, double a) {
    return clifford::boost_matrix(a, tau) * two_point_on_worldline(tau, tau_prime, a) *
           clifford::boost_matrix(a, -tau_prime);
}

Complex trace_pair(double dtau, const WorldlineParams& params, Branch branch) {
    const Matrix4C g = g_matrix(dtau, params, branch);
    return clifford::trace(g * g);
}

StatFunctionPair stat_functions_closed(double dtau, const WorldlineParams& params) {
    params.validate();
    const double a = params.accel;
    const double prefactor = -std::pow(a, 6) / (128.0 * std::pow(kPi, 4));
    const Complex minus = inverse_sixth(shifted_sinh(dtau, params, Branch::minus));
    const Complex plus = inverse_sixth(shifted_sinh(dtau, params, Branch::plus));
    return {prefactor * (minus + plus), prefactor * (minus - plus)};
}

StatFunctionPair stat_functions_trace(double dtau, const WorldlineParams& params) {
    const Complex minus = trace_pair(dtau, params, Branch::minus);
    const Complex plus = trace_pair(dtau, params, Branch::plus);
    return {0.5 * (minus + plus), 0.5 * (minus - plus)};
}

} // namespace unruh::correlators
