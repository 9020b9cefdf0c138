#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "unruh/rates.hpp"

using namespace unruh::rates;
using unruh::atom::Level;
using unruh::atom::TwoLevelAtom;

namespace {

constexpr double kPi = std::numbers::pi;
const double kPi3 = kPi * kPi * kPi;

double rel(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("polynomial factor") {
    CHECK(polynomial_factor(1.0, 0.0) == 1.0);
    CHECK(polynomial_factor(1.0, 2.0) == 85.0);
    const double big = polynomial_factor(1.0, 100.0) / 4e8;
    CHECK(big >= 1.0);
    CHECK(big <= 1.002);
    CHECK(polynomial_factor(-2.0, 1.0) == polynomial_factor(2.0, 1.0));
    CHECK_THROWS_AS(polynomial_factor(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_factor(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("planck number") {
    const double omega = 1.0;
    CHECK(planck_number(omega, 2.0 * kPi * omega / std::log(2.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(planck_number(omega, 2.0 * kPi * omega) ==
          doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-14));
    CHECK(planck_number(omega, 2.0 * kPi * omega) == doctest::Approx(0.58198).epsilon(1e-5));
    // exponent above 745 underflows to exactly zero
    CHECK(planck_number(1.0, 2.0 * kPi / 746.0) == 0.0);
    CHECK(planck_number(1.0, 1e-6) == 0.0);
    CHECK(planck_number(1.0, 2.0 * kPi / 700.0) > 0.0);
    CHECK_THROWS_AS(planck_number(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(planck_number(1.0, 0.0), std::invalid_argument);
    CHECK(thermal_occupation(1.0, 0.0) == 0.0);
}

TEST_CASE("vacuum-fluctuation rate") {
    const double mu = 1.0;
    CHECK(rel(rate_vf({1.0, Level::ground}, 0.0, mu), 1.0 / (480.0 * kPi3)) < 1e-15);
    CHECK(rel(rate_vf({1.0, Level::excited}, 0.0, mu), -1.0 / (480.0 * kPi3)) < 1e-15);
    CHECK(rate_vf({1.0, Level::excited}, 0.0, mu) == doctest::Approx(-6.72e-5).epsilon(1e-3));

    const double mu2 = 0.3, w = 2.0;
    CHECK(rel(rate_vf({w, Level::ground}, 0.0, mu2), mu2 * mu2 * std::pow(w, 6) / (480.0 * kPi3)) <
          1e-14);

    for (double a : {0.0, 0.1, 1.0, 10.0, 100.0}) {
        CHECK(rate_vf({1.0, Level::ground}, a, 1.0) > 0.0);
        CHECK(rate_vf({1.0, Level::excited}, a, 1.0) < 0.0);
    }
}

TEST_CASE("cross-term rate") {
    CHECK(rel(rate_cross({1.0, Level::ground}, 0.0, 1.0), -1.0 / (480.0 * kPi3)) < 1e-15);
    for (double a : {0.0, 0.5, 3.0}) {
        for (double w : {0.2, 1.0, 5.0}) {
            const double g = rate_cross({w, Level::ground}, a, 0.7);
            const double e = rate_cross({w, Level::excited}, a, 0.7);
            CHECK(g == e);
            CHECK(g < 0.0);
        }
    }
}

TEST_CASE("total rate") {
    CHECK(rate_total({1.0, Level::ground}, 0.0, 1.0).total == 0.0);
    const double excited = rate_total({1.0, Level::excited}, 0.0, 1.0).total;
    CHECK(rel(excited, -1.0 / (240.0 * kPi3)) < 1e-15);
    CHECK(excited == doctest::Approx(-1.344e-4).epsilon(1e-3));

    const double w = 1.0, a = 2.0 * kPi * w;
    const double f = 1.0 + 5.0 * a * a + 4.0 * std::pow(a, 4);
    const double expected = 0.25 * f / (60.0 * kPi3) / (std::exp(1.0) - 1.0);
    CHECK(rel(rate_total({w, Level::ground}, a, 1.0).total, expected) < 1e-13);
}

TEST_CASE("breakdown annotations") {
    const RateBreakdown b = rate_total({2.0, Level::excited}, 1.5, 0.4);
    CHECK(b.rr == 0.0);
    CHECK(b.coupling == 0.4);
    CHECK(b.accel == 1.5);
    REQUIRE(b.channels.size() == 1);
    CHECK(b.channels[0].omega_bd == 2.0);
    CHECK(b.channels[0].poly_factor == polynomial_factor(2.0, 1.5));
    CHECK(b.channels[0].planck_n == planck_number(2.0, 1.5));
    CHECK(std::string(kRadiationReactionNote).find("mu^3") != std::string::npos);
}

TEST_CASE("additivity over random parameters") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> log_u(-2.0, 2.0);
    std::uniform_real_distribution<double> coupling(-3.0, 3.0);
    for (int n = 0; n < 1000; ++n) {
        const double w = std::pow(10.0, log_u(rng));
        const double a = std::pow(10.0, log_u(rng));
        const double mu = coupling(rng);
        for (Level level : {Level::ground, Level::excited}) {
            const RateBreakdown b = rate_total({w, level}, a, mu);
            const double scale = std::max(std::abs(b.vf), std::abs(b.cross));
            CHECK(std::abs(b.total - (b.vf + b.cross)) <= 1e-14 * scale);
            CHECK(b.cross <= 0.0);
        }
    }
}

TEST_CASE("inertial limit") {
    for (double w : {0.1, 1.0, 7.0}) {
        for (double mu : {0.5, 1.0, 2.0}) {
            const RateBreakdown ground = rate_total({w, Level::ground}, 0.0, mu);
            CHECK(ground.total == 0.0);
            // exact cancellation of vf and cross for the inertial ground state
            CHECK(ground.vf == -ground.cross);
            CHECK(std::abs(ground.cross) > 0.0);
            const double excited = rate_total({w, Level::excited}, 0.0, mu).total;
            CHECK(rel(excited, -mu * mu * std::pow(w, 6) / (240.0 * kPi3)) < 1e-13);
        }
    }
}

TEST_CASE("detailed balance and effective temperature") {
    CHECK(detailed_balance_ratio(1.0, 2.0 * kPi / std::log(2.0)) ==
          doctest::Approx(0.5).epsilon(1e-13));
    CHECK(detailed_balance_ratio(1.0, 1e6) > 0.9999);
    CHECK(rel(detailed_balance_ratio(1.0, 3.0), std::exp(-2.0 * kPi / 3.0)) < 1e-12);

    for (double w = 0.1; w <= 10.0; w *= 1.7) {
        for (double a = 0.1; a <= 10.0; a *= 1.9) {
            CHECK(rel(detailed_balance_ratio(w, a), std::exp(-2.0 * kPi * w / a)) < 1e-12);
            CHECK(rel(effective_temperature(w, a), a / (2.0 * kPi)) < 1e-12);
        }
    }
    CHECK(effective_temperature(1.0, 2.0 * kPi) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rel(effective_temperature(1.0, 0.8), effective_temperature(5.0, 0.8)) < 1e-12);
    CHECK(effective_temperature(3.0, 1.0) == doctest::Approx(0.15915).epsilon(1e-4));

    CHECK_THROWS_AS(detailed_balance_ratio(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(effective_temperature(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(effective_temperature(1.0, 1e-4), std::domain_error);
}

TEST_CASE("ground-state excitation grows with acceleration") {
    double previous = rate_total({1.0, Level::ground}, 0.0, 1.0).total;
    for (double a = 0.05; a <= 50.0; a *= 1.15) {
        const double current = rate_total({1.0, Level::ground}, a, 1.0).total;
        CHECK(current > previous);
        previous = current;
    }
}

TEST_CASE("rates scale as mu^2") {
    for (Level level : {Level::ground, Level::excited}) {
        const RateBreakdown one = rate_total({1.3, level}, 0.9, 0.7);
        const RateBreakdown two = rate_total({1.3, level}, 0.9, 1.4);
        CHECK(two.vf == 4.0 * one.vf);
        CHECK(two.cross == 4.0 * one.cross);
        CHECK(two.total == 4.0 * one.total);
    }
}

TEST_CASE("quartic acceleration dominance") {
    const double w = 1.0, a = 100.0 * w;
    const double n = planck_number(w, a);
    const double quartic_only = 0.25 * std::pow(w, 6) * 4.0 * std::pow(a / w, 4) * n / (60.0 * kPi3);
    const double ratio = rate_total({w, Level::ground}, a, 1.0).total / quartic_only;
    CHECK(ratio >= 0.99);
    CHECK(ratio <= 1.01);
}

TEST_CASE("SI acceleration conversion") {
    CHECK(si_acceleration_to_natural(3e24) == doctest::Approx(1.0e16).epsilon(0.01));
    CHECK(si_acceleration_to_natural(0.0) == 0.0);
    CHECK(si_acceleration_to_natural(kSpeedOfLight) == 1.0);
    CHECK_THROWS_AS(si_acceleration_to_natural(-1.0), std::invalid_argument);
}
