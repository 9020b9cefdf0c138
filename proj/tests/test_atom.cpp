#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unruh/atom.hpp"

using namespace unruh::atom;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("channels of the two-level atom") {
    const auto excited = channels({1.0, Level::excited});
    REQUIRE(excited.size() == 1);
    CHECK(excited[0].omega_bd == 1.0);
    CHECK(excited[0].weight == 0.25);

    const auto ground = channels({2.0, Level::ground});
    REQUIRE(ground.size() == 1);
    CHECK(ground[0].omega_bd == -2.0);
    CHECK(ground[0].weight == 0.25);

    double total = 0.0;
    for (const auto& ch : channels({3.0, Level::excited})) total += ch.weight;
    CHECK(total == 0.25);
}

TEST_CASE("atom validation") {
    CHECK_THROWS_AS(channels({0.0, Level::ground}), std::invalid_argument);
    CHECK_THROWS_AS(channels({-1.0, Level::excited}), std::invalid_argument);
    CHECK(parse_level("ground") == Level::ground);
    CHECK(parse_level("excited") == Level::excited);
    CHECK_THROWS_AS(parse_level("middle"), std::invalid_argument);
    CHECK(to_string(Level::excited) == "excited");
}

TEST_CASE("symmetric susceptibility") {
    CHECK(susceptibility_c({1.0, Level::ground}, 0.0).real() == 0.25);
    CHECK(susceptibility_c({1.0, Level::excited}, 0.0).real() == 0.25);
    const TwoLevelAtom atom{1.0, Level::excited};
    CHECK(std::abs(susceptibility_c(atom, 0.3) - susceptibility_c(atom, -0.3)) < 1e-15);
    CHECK(susceptibility_c(atom, kPi).real() == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("antisymmetric susceptibility") {
    const TwoLevelAtom excited{1.0, Level::excited};
    const TwoLevelAtom ground{1.0, Level::ground};
    CHECK(std::abs(susceptibility_chi(excited, 0.0)) == 0.0);

    const auto chi = susceptibility_chi(excited, kPi / 2);
    CHECK(std::abs(chi.real()) < 1e-16);
    CHECK(chi.imag() == doctest::Approx(0.25).epsilon(1e-15));

    for (double dtau : {0.1, 0.7, 2.3})
        CHECK(std::abs(susceptibility_chi(ground, dtau) + susceptibility_chi(excited, dtau)) <
              1e-16);
}

TEST_CASE("susceptibility parity and bounds on a grid") {
    for (Level level : {Level::ground, Level::excited}) {
        for (double omega0 : {0.3, 1.0, 4.0}) {
            const TwoLevelAtom atom{omega0, level};
            for (double dtau = -6.0; dtau <= 6.0; dtau += 0.37) {
                const auto c = susceptibility_c(atom, dtau);
                const auto chi = susceptibility_chi(atom, dtau);
                CHECK(std::abs(c - susceptibility_c(atom, -dtau)) <= 1e-15);
                CHECK(std::abs(chi + susceptibility_chi(atom, -dtau)) <= 1e-15);
                CHECK(std::abs(c) <= 0.25 + 1e-16);
                CHECK(std::abs(chi) <= 0.25 + 1e-16);
            }
        }
    }
}
