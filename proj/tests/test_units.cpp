#include <doctest.h>

#include <cmath>

#include "qheat/units.hpp"
#include "test_support.hpp"

using namespace qheat;
using testutil::rel_err;

TEST_CASE("temperature/occupation conversion: frozen points from the bisection oracle") {
    // Oracle: solve exp(1/theta) = 1 + 1/nbar by bisection on the raw
    // exponential, independent of the library path.
    const auto theta_for = [](double nbar) {
        return testutil::bisect(
            [nbar](double theta) { return std::exp(1.0 / theta) - (1.0 + 1.0 / nbar); }, 1e-2,
            1e4);
    };
    CHECK(rel_err(theta_for(1.0), 1.4426950408889634) < 1e-12);   // 1/ln 2
    CHECK(rel_err(theta_for(0.5), 0.91023922662683732) < 1e-12);  // 1/ln 3

    // Cross-check: bisecting the forward map itself lands on the same point.
    const double theta_via_forward = testutil::bisect(
        [](double theta) {
            return mean_photon_from_temperature(ReducedTemperature::finite(theta)).nbar - 0.5;
        },
        1e-2, 1e4);
    CHECK(rel_err(theta_via_forward, 0.91023922662683732) < 1e-12);

    CHECK(rel_err(temperature_from_mean_photon(MeanPhotonNumber{1.0}).theta,
                  1.4426950408889634) < 1e-12);
    CHECK(rel_err(temperature_from_mean_photon(MeanPhotonNumber{0.5}).theta,
                  0.91023922662683732) < 1e-12);
    CHECK(rel_err(mean_photon_from_temperature(ReducedTemperature::finite(1.4426950408889634))
                      .nbar,
                  1.0) < 1e-12);
}

TEST_CASE("conversion: limits and tags") {
    // theta -> 0+ drives the occupation to zero (underflow below ~1.36e-3).
    CHECK(mean_photon_from_temperature(ReducedTemperature::finite(1e-2)).nbar < 1e-40);
    CHECK(mean_photon_from_temperature(ReducedTemperature::finite(1e-3)).nbar == 0.0);

    // nbar = 0 is the zero-temperature tag, not an error.
    CHECK(temperature_from_mean_photon(MeanPhotonNumber{0.0}).is_zero());

    // High-temperature limit: theta ~ nbar.
    const double theta_large = temperature_from_mean_photon(MeanPhotonNumber{1e12}).theta;
    CHECK(rel_err(theta_large, 1e12) < 1e-9);
}

TEST_CASE("conversion: domain errors") {
    CHECK_THROWS_AS(ReducedTemperature::finite(0.0), std::domain_error);
    CHECK_THROWS_AS(ReducedTemperature::finite(-1.0), std::domain_error);
    CHECK_THROWS_AS(MeanPhotonNumber::of(-0.5), std::domain_error);
    CHECK_THROWS_AS(temperature_from_mean_photon(MeanPhotonNumber{-1.0}), std::domain_error);
    CHECK_THROWS_AS(mean_photon_from_temperature(ReducedTemperature::zero()),
                    std::domain_error);
}

TEST_CASE("conversion: roundtrip inverse pair over the representable range") {
    // Below theta ~ 1.36e-3 the occupation underflows IEEE doubles, so the
    // inverse-pair property is checked from 1.4e-3 up.
    auto gen = testutil::rng(101);
    for (int i = 0; i < 2000; ++i) {
        const double theta = testutil::log_uniform(gen, 1.4e-3, 1e3);
        const double back =
            temperature_from_mean_photon(
                mean_photon_from_temperature(ReducedTemperature::finite(theta)))
                .theta;
        CHECK(rel_err(back, theta) < 1e-12);
    }
    for (int i = 0; i < 2000; ++i) {
        const double nbar = testutil::log_uniform(gen, 1e-6, 1e6);
        const double back =
            mean_photon_from_temperature(temperature_from_mean_photon(MeanPhotonNumber{nbar}))
                .nbar;
        CHECK(rel_err(back, nbar) < 1e-12);
    }
}

TEST_CASE("conversion: strict monotonicity") {
    auto gen = testutil::rng(102);
    for (int i = 0; i < 1000; ++i) {
        const double a = testutil::log_uniform(gen, 1e-2, 1e3);
        const double b = testutil::log_uniform(gen, 1e-2, 1e3);
        if (a == b) continue;
        const double lo = std::min(a, b);
        const double hi = std::max(a, b);
        CHECK(mean_photon_from_temperature(ReducedTemperature::finite(lo)).nbar <
              mean_photon_from_temperature(ReducedTemperature::finite(hi)).nbar);
        CHECK(temperature_from_mean_photon(MeanPhotonNumber{lo}).theta <
              temperature_from_mean_photon(MeanPhotonNumber{hi}).theta);
    }
}

TEST_CASE("conversion: high-temperature asymptotic nbar ~ theta - 1/2") {
    const double theta = 1e4;
    const double nbar = mean_photon_from_temperature(ReducedTemperature::finite(theta)).nbar;
    CHECK(std::abs(nbar - (theta - 0.5)) / theta < 1e-4);
}

TEST_CASE("radiation pressure: P*V = omega_scale*nbar") {
    CHECK(radiation_pressure(MeanPhotonNumber{0.0}, 1.0, 1.0) == 0.0);
    CHECK(radiation_pressure(MeanPhotonNumber{5.0}, 1.0, 1.0) == 5.0);

    const double p1 = radiation_pressure(MeanPhotonNumber{3.0}, 2.0, 1.5);
    const double p2 = radiation_pressure(MeanPhotonNumber{3.0}, 4.0, 1.5);
    CHECK(rel_err(p1, 2.0 * p2) < 1e-15);
    CHECK(rel_err(p1 * 2.0, 1.5 * 3.0) < 1e-15);

    CHECK_THROWS_AS(radiation_pressure(MeanPhotonNumber{1.0}, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(radiation_pressure(MeanPhotonNumber{1.0}, -2.0, 1.0), std::domain_error);
}
