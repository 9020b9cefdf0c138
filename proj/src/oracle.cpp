#include "unruh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "unruh/errors.hpp"
#include "unruh/rates.hpp"

namespace unruh::oracle {

namespace {

using correlators::Branch;

constexpr double kPi = std::numbers::pi;
constexpr int kPanelOrder = 20;
// Above this |omega_bd|/a the panel density follows omega_bd instead of a.
constexpr double kOscillationThreshold = 20.0;

using Rule = boost::math::quadrature::gauss<double, kPanelOrder>;

// Pole lines of sinh^-6(u -/+ i eps): Im u = +/- eps + pi n. Returns the two
// poles bounding the strip that contains the real axis.
std::pair<double, double> strip_bounds(Branch branch, double eps) {
    if (branch == Branch::minus) return {eps - kPi, eps};
    return {-eps, kPi - eps};
}

enum class Kind { vf, cross };

IntegralResult integrate_channel(Kind kind, const atom::TransitionChannel& channel, double a,
                                 const QuadratureConfig& cfg) {
    if (!(a > 0.0))
        throw std::invalid_argument("oracle needs a positive acceleration");
    if (channel.omega_bd == 0.0)
        throw std::invalid_argument("oracle needs a non-zero transition frequency");
    cfg.validate();

    const double k = 2.0 * channel.omega_bd / a;
    const double prefactor =
        std::pow(a, 6) / (128.0 * std::pow(kPi, 4)) * channel.weight * channel.omega_bd;
    const double jacobian = 2.0 / a;

    IntegralResult out;
    std::vector<double> reals;
    for (double eps : cfg.epsilons) {
        const Complex minus = branch_transform(Branch::minus, k, eps, cfg);
        const Complex plus = branch_transform(Branch::plus, k, eps, cfg);
        const Complex bracket = kind == Kind::vf ? minus + plus : minus - plus;
        const Complex value = prefactor * jacobian * bracket;
        out.samples.push_back({eps, value});
        reals.push_back(value.real());
        out.imag_residue = std::max(out.imag_residue, std::abs(value.imag()));
    }

    const Extrapolation ex = extrapolate_epsilon(reals, cfg.epsilons);
    out.value = ex.value;
    out.residual = ex.residual;

    if (!std::isfinite(ex.value) || ex.residual > cfg.tol * std::abs(ex.value)) {
        std::ostringstream diag;
        diag.precision(17);
        diag << (kind == Kind::vf ? "vf" : "cross") << " integral, omega_bd=" << channel.omega_bd
             << " a=" << a << "\n";
        for (const auto& s : out.samples)
            diag << "  eps=" << s.epsilon << " value=" << s.value.real() << "\n";
        diag << "  extrapolated=" << ex.value << " residual=" << ex.residual
             << " relative=" << ex.residual / std::abs(ex.value) << " tol=" << cfg.tol << "\n";
        throw ConvergenceError("eps -> 0 extrapolation did not reach the requested tolerance",
                               diag.str());
    }
    return out;
}

double relative_error(double numeric, double exact) {
    return std::abs(numeric - exact) / std::abs(exact);
}

} // namespace

void QuadratureConfig::validate() const {
    if (epsilons.size() < 3)
        throw std::invalid_argument("epsilon schedule needs at least three entries");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0) || !(epsilons[i] < 0.1))
            throw std::invalid_argument("epsilon schedule entries must lie in (0, 0.1)");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw std::invalid_argument("epsilon schedule must be strictly decreasing");
    }
    if (!(truncation_tol > 0.0) || !(truncation_tol < 1.0))
        throw std::invalid_argument("truncation tolerance must lie in (0, 1)");
    if (nodes_per_unit < kPanelOrder)
        throw std::invalid_argument("nodes_per_unit must be at least the panel order");
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
}

Extrapolation extrapolate_epsilon(const std::vector<double>& values,
                                  const std::vector<double>& epsilons) {
    if (values.size() != epsilons.size())
        throw std::invalid_argument("values and epsilons differ in length");
    if (values.size() < 3)
        throw std::invalid_argument("extrapolation needs at least three points");
    for (std::size_t i = 0; i < epsilons.size(); ++i)
        for (std::size_t j = i + 1; j < epsilons.size(); ++j)
            if (epsilons[i] == epsilons[j])
                throw std::invalid_argument("extrapolation points must be distinct");

    const std::size_t n = values.size();
    std::vector<double> p = values;
    double previous = 0.0;
    for (std::size_t m = 1; m < n; ++m) {
        previous = p[n - m];
        for (std::size_t i = 0; i + m < n; ++i) {
            const double xi = epsilons[i];
            const double xj = epsilons[i + m];
            p[i] = (xi * p[i + 1] - xj * p[i]) / (xi - xj);
        }
    }
    // `previous` is the degree n-2 interpolant through the n-1 smallest eps.
    return {p[0], std::abs(p[0] - previous)};
}

ContourLine contour_for(Branch branch, double k, double eps, const QuadratureConfig& cfg) {
    const auto [lower, upper] = strip_bounds(branch, eps);
    // Sit near the pole that e^{iku} favours, at a distance that balances
    // the pole growth theta^-6 against e^{|k| theta}.
    const double theta = k == 0.0 ? 0.5 * kPi : std::min(0.5 * kPi, 5.0 / std::abs(k));

    ContourLine line;
    line.offset = k >= 0.0 ? upper - theta : lower + theta;
    line.half_width = std::log(64.0 / cfg.truncation_tol) / 6.0;

    const double density_scale = std::max(1.0, 0.5 * std::abs(k) / kOscillationThreshold);
    const double nodes_per_u = 2.0 * cfg.nodes_per_unit * density_scale;
    const double width = std::min(kPanelOrder / nodes_per_u, 0.5 * theta);
    const double panels = std::ceil(2.0 * line.half_width / width);
    line.panel_width = 2.0 * line.half_width / panels;
    return line;
}

Complex branch_integrand(Branch branch, double k, double eps, Complex u) {
    const double shift = branch == Branch::minus ? -eps : eps;
    const Complex s = std::sinh(u + Complex{0.0, shift});
    const Complex s2 = s * s;
    return std::exp(Complex{0.0, k} * u) / (s2 * s2 * s2);
}

Complex branch_transform(Branch branch, double k, double eps, const QuadratureConfig& cfg) {
    const ContourLine line = contour_for(branch, k, eps, cfg);
    const auto f = [&](double s) {
        return branch_integrand(branch, k, eps, Complex{s, line.offset});
    };
    const auto panels = static_cast<long>(std::llround(2.0 * line.half_width / line.panel_width));
    Complex sum{0.0, 0.0};
    for (long p = 0; p < panels; ++p) {
        const double left = -line.half_width + p * line.panel_width;
        sum += Rule::integrate(f, left, left + line.panel_width);
    }
    return sum;
}

IntegralResult vf_integral_numeric(const atom::TransitionChannel& channel, double a,
                                   const QuadratureConfig& cfg) {
    return integrate_channel(Kind::vf, channel, a, cfg);
}

IntegralResult cross_integral_numeric(const atom::TransitionChannel& channel, double a,
                                      const QuadratureConfig& cfg) {
    return integrate_channel(Kind::cross, channel, a, cfg);
}

OracleReport verify_rates(const atom::TwoLevelAtom& atom, double a, double mu,
                          const QuadratureConfig& cfg) {
    OracleReport report;
    report.atom = atom;
    report.accel = a;
    report.coupling = mu;
    report.tol = cfg.tol;
    report.epsilons = cfg.epsilons;
    report.per_epsilon_vf.assign(cfg.epsilons.size(), 0.0);
    report.per_epsilon_cross.assign(cfg.epsilons.size(), 0.0);

    const double mu2 = mu * mu;
    for (const auto& ch : atom::channels(atom)) {
        const IntegralResult vf = vf_integral_numeric(ch, a, cfg);
        const IntegralResult cross = cross_integral_numeric(ch, a, cfg);
        report.numeric_vf += mu2 * vf.value;
        report.numeric_cross += mu2 * cross.value;
        report.residual_vf += mu2 * vf.residual;
        report.residual_cross += mu2 * cross.residual;
        for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
            report.per_epsilon_vf[i] += mu2 * vf.samples[i].value.real();
            report.per_epsilon_cross[i] += mu2 * cross.samples[i].value.real();
        }
    }
    report.closed_vf = rates::rate_vf(atom, a, mu);
    report.closed_cross = rates::rate_cross(atom, a, mu);
    report.rel_err_vf = relative_error(report.numeric_vf, report.closed_vf);
    report.rel_err_cross = relative_error(report.numeric_cross, report.closed_cross);
    report.pass = report.rel_err_vf < cfg.tol && report.rel_err_cross < cfg.tol;
    return report;
}

} // namespace unruh::oracle
