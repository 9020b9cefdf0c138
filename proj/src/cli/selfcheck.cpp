#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "unruh/clifford.hpp"
#include "unruh/cli.hpp"
#include "unruh/correlators.hpp"

namespace unruh::cli {

namespace {

using clifford::Matrix4C;

// max_ij |a_ij - b_ij| / max(|b_ij|, 1)
double entrywise_deviation(const Matrix4C& a, const Matrix4C& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / std::max(std::abs(b(i, j)), 1.0));
    return worst;
}

std::string describe(double value) {
    std::ostringstream os;
    os.precision(3);
    os << value;
    return os.str();
}

SelfCheckItem check_gamma_algebra(int& cases) {
    int failures = 0;
    cases = 0;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const Matrix4C lhs =
                clifford::anticommutator(clifford::gamma_matrix(mu), clifford::gamma_matrix(nu));
            const Matrix4C rhs = 2.0 * clifford::metric(mu, nu) * Matrix4C::Identity();
            ++cases;
            if (lhs != rhs) ++failures;
        }
    }
    return {"gamma algebra {g^mu, g^nu} = 2 g^{mu nu}", failures == 0,
            std::to_string(cases) + " anticommutator cases, " + std::to_string(failures) +
                " mismatches"};
}

SelfCheckItem check_boost_group() {
    constexpr double a = 1.0;
    constexpr double tol = 1e-13;
    const Matrix4C g0 = clifford::gamma_matrix(0);
    double worst = 0.0;
    for (int i = -5; i <= 5; ++i) {
        const double tau = i;
        const Matrix4C s = clifford::boost_matrix(a, tau);
        const Matrix4C s_neg = clifford::boost_matrix(a, -tau);
        worst = std::max(worst, entrywise_deviation(s * s_neg, Matrix4C::Identity()));
        worst = std::max(worst, entrywise_deviation(g0 * s, s_neg * g0));
        worst = std::max(worst, entrywise_deviation((g0 * s) * (g0 * s), Matrix4C::Identity()));
        for (int j = -5; j <= 5; ++j) {
            const double tau2 = j;
            worst = std::max(worst,
                             entrywise_deviation(s * clifford::boost_matrix(a, tau2),
                                                 clifford::boost_matrix(a, tau + tau2)));
        }
    }
    return {"boost group S_t S_t' = S_(t+t'), inverse, gamma^0 reflection", worst < tol,
            "max entrywise deviation " + describe(worst)};
}

SelfCheckItem check_spin_sums() {
    constexpr double m = 1.0;
    constexpr double tol = 1e-12;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const auto k = clifford::on_shell(dist(rng), dist(rng), dist(rng), m);
        Matrix4C sum_u = Matrix4C::Zero();
        Matrix4C sum_v = Matrix4C::Zero();
        for (int s = 1; s <= 2; ++s) {
            const auto u = clifford::spinor_u(k, s, m);
            const auto v = clifford::spinor_v(k, s, m);
            sum_u += u * clifford::dirac_adjoint(u);
            sum_v += v * clifford::dirac_adjoint(v);
        }
        const Matrix4C id = Matrix4C::Identity();
        worst = std::max(worst, entrywise_deviation(sum_u, (clifford::slash(k) + m * id) / (2 * m)));
        worst = std::max(worst, entrywise_deviation(sum_v, (clifford::slash(k) - m * id) / (2 * m)));
    }
    return {"spin sums over 100 on-shell momenta", worst < tol,
            "max entrywise deviation " + describe(worst)};
}

SelfCheckItem check_trace_route(double& worst) {
    constexpr double tol = 1e-10;
    constexpr int samples = 400;
    worst = 0.0;
    for (double a : {0.5, 1.0, 2.0}) {
        for (double eps : {1e-3, 1e-4}) {
            const correlators::WorldlineParams params{a, eps};
            for (int i = 0; i < samples; ++i) {
                // a*dtau log-spaced over [0.05, 20]
                const double x = 0.05 * std::pow(400.0, static_cast<double>(i) / (samples - 1));
                const double dtau = x / a;
                const auto closed = correlators::stat_functions_closed(dtau, params);
                const auto traced = correlators::stat_functions_trace(dtau, params);
                worst = std::max(worst, std::abs(traced.c_f - closed.c_f) / std::abs(closed.c_f));
                worst = std::max(worst,
                                 std::abs(traced.chi_f - closed.chi_f) / std::abs(closed.chi_f));
            }
        }
    }
    return {"trace route vs sinh^-6 closed forms", worst <= tol,
            "max relative deviation " + describe(worst)};
}

SelfCheckItem check_stationarity() {
    constexpr double tol = 1e-12;
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0}) {
        const correlators::WorldlineParams params{a, 0.0};
        // a*tau kept O(1): the two-point route subtracts sinh(a tau) - sinh(a tau')
        for (double x : {-1.5, -0.4, 0.3, 1.0, 2.0}) {
            const double dtau = x / a;
            const Matrix4C reference = correlators::g_matrix(dtau, params);
            for (double y : {-1.0, 0.0, 0.5, 1.0}) {
                const double tau_prime = y / a;
                const Matrix4C g = correlators::fermi_walker_two_point(tau_prime + dtau, tau_prime, a);
                worst = std::max(worst, (g - reference).cwiseAbs().maxCoeff() /
                                            reference.cwiseAbs().maxCoeff());
            }
        }
    }
    return {"g(tau, tau') depends on tau - tau' only", worst < tol,
            "max relative deviation " + describe(worst)};
}

} // namespace

bool SelfCheckResult::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const auto& item) { return item.pass; });
}

SelfCheckResult run_selfcheck() {
    SelfCheckResult result;
    result.items.push_back(check_gamma_algebra(result.anticommutator_cases));
    result.items.push_back(check_boost_group());
    result.items.push_back(check_spin_sums());
    result.items.push_back(check_trace_route(result.trace_route_max_deviation));
    result.items.push_back(check_stationarity());
    return result;
}

} // namespace unruh::cli
