#include <doctest.h>

#include <cmath>

#include "qheat/engine.hpp"
#include "test_support.hpp"

using namespace qheat;
using testutil::rel_err;

namespace {

ReducedTemperature theta_of(double nbar) {
    return temperature_from_mean_photon(MeanPhotonNumber{nbar});
}

}  // namespace

TEST_CASE("carnot_efficiency") {
    const ReducedTemperature one = ReducedTemperature::finite(1.0);
    const ReducedTemperature two = ReducedTemperature::finite(2.0);
    CHECK(carnot_efficiency(one, one) == 0.0);
    CHECK(carnot_efficiency(one, two) == 0.5);
    CHECK(carnot_efficiency(ReducedTemperature::finite(1e-9), one) > 1.0 - 1e-8);
    CHECK_THROWS_AS(carnot_efficiency(two, one), std::domain_error);
    CHECK_THROWS_AS(carnot_efficiency(ReducedTemperature::zero(), one), std::domain_error);
}

TEST_CASE("quantum_efficiency_heating: classical reduction and frozen end member") {
    // eps_g = 0 falls back to the Carnot value.
    auto gen = testutil::rng(501);
    for (int i = 0; i < 100; ++i) {
        const double nc = testutil::log_uniform(gen, 0.05, 5.0);
        const double nh = nc * testutil::uniform(gen, 1.0, 20.0);
        const double eta = carnot_efficiency(theta_of(nc), theta_of(nh));
        CHECK(rel_err(quantum_efficiency_heating(0.0, MeanPhotonNumber{nc},
                                                 MeanPhotonNumber{nh}),
                      eta) < 1e-12);
    }

    // Single bath, nbar_eq = 0.5, eps_g = -0.65 (chi = -0.05, N = 14):
    // high-precision evaluation of -ln(0.35)/ln(3).
    const double oracle =
        static_cast<double>(-std::log(0.35L) / std::log(3.0L));
    CHECK(rel_err(oracle, 0.9555892786994199) < 1e-15);
    const double single_bath = quantum_efficiency_heating(-0.65, MeanPhotonNumber{0.5},
                                                          MeanPhotonNumber{0.5});
    CHECK(rel_err(single_bath, oracle) < 1e-13);
    CHECK(rel_err(single_bath_quantum_efficiency(-0.65, MeanPhotonNumber{0.5}), oracle) <
          1e-13);
}

TEST_CASE("quantum_efficiency_heating: domain errors name the bound") {
    CHECK_THROWS_WITH_AS(
        quantum_efficiency_heating(-0.7, MeanPhotonNumber{0.5}, MeanPhotonNumber{0.5}),
        doctest::Contains("positivity"), std::domain_error);
    CHECK_THROWS_AS(
        quantum_efficiency_heating(0.1, MeanPhotonNumber{0.5}, MeanPhotonNumber{0.5}),
        std::domain_error);
    CHECK_THROWS_AS(
        quantum_efficiency_heating(-0.1, MeanPhotonNumber{2.0}, MeanPhotonNumber{1.0}),
        std::domain_error); // inverted baths
}

TEST_CASE("quantum_efficiency_heating: enhancement and the second law") {
    auto gen = testutil::rng(502);
    for (int i = 0; i < 500; ++i) {
        const double nc = testutil::log_uniform(gen, 0.05, 5.0);
        const double nh = nc * testutil::uniform(gen, 1.0, 10.0);
        const double bound = -1.0 / (nh + 1.0);
        const double eps_g = testutil::uniform(gen, bound * 0.999, 0.0);
        if (!(1.0 + (nh + 1.0) * eps_g > 0.0)) continue;
        const double eta = carnot_efficiency(theta_of(nc), theta_of(nh));
        const double eta_q =
            quantum_efficiency_heating(eps_g, MeanPhotonNumber{nc}, MeanPhotonNumber{nh});
        CHECK(eta_q >= eta);
        CHECK(eta_q < 1.0);
    }
}

TEST_CASE("quantum_efficiency_cooling: frozen point and both algebraic routes") {
    // Single bath, nbar_eq = 5, chi = 1, N = 10 (eps_g = 9):
    // [1 + ln(1.2)/ln(10)]^{-1} by high-precision evaluation.
    const double oracle = static_cast<double>(
        1.0L / (1.0L + std::log(1.2L) / std::log(10.0L)));
    CHECK(rel_err(oracle, 0.92662840802912672) < 1e-15);
    CHECK(rel_err(single_bath_quantum_efficiency(9.0, MeanPhotonNumber{5.0}), oracle) <
          1e-13);
    const ReducedTemperature t_eq = theta_of(5.0);
    CHECK(rel_err(quantum_efficiency_cooling(9.0, MeanPhotonNumber{5.0}, t_eq, t_eq),
                  oracle) < 1e-13);

    // The direct 1 - T_Q/T_h route and the Carnot-expanded route agree.
    auto gen = testutil::rng(503);
    for (int i = 0; i < 500; ++i) {
        const double nc = testutil::log_uniform(gen, 0.05, 10.0);
        const ReducedTemperature t_cold = theta_of(nc);
        const ReducedTemperature t_hot =
            ReducedTemperature::finite(t_cold.theta * testutil::uniform(gen, 1.0, 4.0));
        const double eps_g = testutil::log_uniform(gen, 1e-3, 5.0);
        const double direct =
            quantum_efficiency_cooling(eps_g, MeanPhotonNumber{nc}, t_hot, t_cold);
        const double expanded =
            quantum_efficiency_cooling_expanded(eps_g, MeanPhotonNumber{nc}, t_hot, t_cold);
        CHECK(std::abs(direct - expanded) < 1e-12);
        const double eta = carnot_efficiency(t_cold, t_hot);
        CHECK(direct > eta);
        CHECK(direct < 1.0);
    }

    CHECK_THROWS_AS(quantum_efficiency_cooling(-0.1, MeanPhotonNumber{5.0}, t_eq, t_eq),
                    std::domain_error);
    CHECK_THROWS_AS(quantum_efficiency_cooling(0.0, MeanPhotonNumber{5.0}, t_eq, t_eq),
                    std::domain_error);
}

TEST_CASE("single-bath efficiency: limits in N and chi") {
    // eps_g = 0 (N = 1 or chi = 0) gives zero efficiency.
    CHECK(single_bath_quantum_efficiency(0.0, MeanPhotonNumber{5.0}) == 0.0);

    // Heating branch increases with N at fixed chi < 0 until the bound.
    const double chi = -0.05;
    double previous = 0.0;
    for (int n = 2; n <= 14; ++n) {
        const double eta_q =
            single_bath_quantum_efficiency(chi * (n - 1), MeanPhotonNumber{0.5});
        CHECK(eta_q > previous);
        CHECK(eta_q < 1.0);
        previous = eta_q;
    }
    CHECK_THROWS_AS(single_bath_quantum_efficiency(chi * 14, MeanPhotonNumber{0.5}),
                    std::domain_error); // N = 15 crosses the S2 bound

    // Cooling branch: increasing in N and chi, approaching 1.
    previous = 0.0;
    for (int n = 2; n <= 30; ++n) {
        const double eta_q = single_bath_quantum_efficiency(1.0 * (n - 1), MeanPhotonNumber{5.0});
        CHECK(eta_q > previous);
        previous = eta_q;
    }
    CHECK(single_bath_quantum_efficiency(0.2 * 9, MeanPhotonNumber{5.0}) <
          single_bath_quantum_efficiency(0.6 * 9, MeanPhotonNumber{5.0}));
    CHECK(single_bath_quantum_efficiency(1e6 - 1.0, MeanPhotonNumber{5.0}) > 0.98);

    // Work can be extracted from a single bath whenever eps_g < 0.
    auto gen = testutil::rng(504);
    for (int i = 0; i < 200; ++i) {
        const double nbar = testutil::log_uniform(gen, 0.05, 10.0);
        const double eps_g = testutil::uniform(gen, -0.999 / (nbar + 1.0), -1e-6);
        CHECK(single_bath_quantum_efficiency(eps_g, MeanPhotonNumber{nbar}) > 0.0);
    }
}

TEST_CASE("high-temperature linearization") {
    const ReducedTemperature tc = ReducedTemperature::finite(1.0);
    const ReducedTemperature th = ReducedTemperature::finite(1.0);

    CHECK(high_temperature_efficiency_approx(0.37, tc, th, MeanPhotonNumber{3.0}, 0.0) ==
          0.37);

    // Relative gap to the exact single-bath expression shrinks as nbar
    // grows. The formulas are compared raw: at nbar = 1000 the point lies
    // outside the guarded steady-state domain (and the guarded op refuses
    // it, checked below).
    const double eps_g = -1e-3;
    double previous_gap = 1.0;
    for (double nbar : {10.0, 100.0, 1000.0}) {
        const double exact = -std::log1p(eps_g) / std::log1p(1.0 / nbar);
        const double approx = high_temperature_efficiency_approx(
            0.0, tc, th, MeanPhotonNumber{nbar}, eps_g);
        const double gap = std::abs(approx - exact) / exact;
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
    CHECK(rel_err(single_bath_quantum_efficiency(eps_g, MeanPhotonNumber{100.0}),
                  -std::log1p(eps_g) / std::log1p(0.01)) < 1e-14);
    CHECK_THROWS_AS(single_bath_quantum_efficiency(eps_g, MeanPhotonNumber{1000.0}),
                    std::domain_error);

    // N = 2 with a phased coherence: eps_g = 3*|P|cos(phi) at p = 1/3, so the
    // linearized efficiency reproduces the phase form directly.
    const double magnitude = 0.05;
    const double phase = 0.7;
    const double p = 1.0 / 3.0;
    const double eps_from_phase = chi_from_phase(magnitude, phase, p) * (2 - 1);
    const ReducedTemperature tc2 = ReducedTemperature::finite(0.8);
    const ReducedTemperature th2 = ReducedTemperature::finite(1.6);
    const double eta = carnot_efficiency(tc2, th2);
    const double nbar_h = 50.0;
    const double via_eps = high_temperature_efficiency_approx(
        eta, tc2, th2, MeanPhotonNumber{nbar_h}, eps_from_phase);
    const double phase_form =
        eta - (tc2.theta / th2.theta) * 3.0 * nbar_h * magnitude * std::cos(phase);
    CHECK(rel_err(via_eps, phase_form) < 1e-13);
}

TEST_CASE("cycle_summary: bookkeeping identities and tags") {
    const ReducedTemperature t_cold = ReducedTemperature::finite(1.0);

    const CycleResult flat = cycle_summary(
        EffectiveTemperature::finite(ReducedTemperature::finite(1.0)), t_cold, 2.0);
    CHECK(flat.work == 0.0);
    CHECK(flat.efficiency == 0.0);

    const CycleResult r = cycle_summary(
        EffectiveTemperature::finite(ReducedTemperature::finite(2.0)), t_cold, 1.0);
    CHECK(r.q_in == 2.0);
    CHECK(r.q_out == 1.0);
    CHECK(r.work == 1.0);
    CHECK(r.efficiency == 0.5);
    CHECK(!r.q_in_unbounded);

    const CycleResult div = cycle_summary(EffectiveTemperature::divergent(), t_cold, 1.0);
    CHECK(div.efficiency == 1.0);
    CHECK(div.q_in_unbounded);
    CHECK(std::isinf(div.q_in));

    CHECK_THROWS_AS(cycle_summary(EffectiveTemperature::zero(), t_cold, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(cycle_summary(EffectiveTemperature::unphysical(), t_cold, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(
        cycle_summary(EffectiveTemperature::finite(ReducedTemperature::finite(0.5)), t_cold,
                      1.0),
        std::domain_error);
    CHECK_THROWS_AS(
        cycle_summary(EffectiveTemperature::finite(ReducedTemperature::finite(2.0)), t_cold,
                      0.0),
        std::domain_error);

    CHECK_THROWS_AS(CycleSpec::make(ReducedTemperature::finite(1.0),
                                    ReducedTemperature::finite(2.0), 1.0),
                    std::domain_error);
    const CycleSpec spec =
        CycleSpec::make(ReducedTemperature::finite(2.0), ReducedTemperature::finite(1.0), 3.0);
    const CycleResult via_spec = cycle_summary(
        EffectiveTemperature::finite(ReducedTemperature::finite(2.5)), spec);
    CHECK(rel_err(via_spec.work, (2.5 - 1.0) * 3.0) < 1e-15);
}

TEST_CASE("cycle efficiency equals the heating formula when T_Q comes from coherence") {
    auto gen = testutil::rng(505);
    for (int i = 0; i < 200; ++i) {
        const double nc = testutil::log_uniform(gen, 0.1, 2.0);
        const double nh = nc * testutil::uniform(gen, 1.2, 8.0);
        const double eps_g = testutil::uniform(gen, -0.9 / (nh + 1.0), -1e-4);
        const EffectiveTemperature t_q =
            effective_temperature(eps_g, 0.0, MeanPhotonNumber{nh});
        REQUIRE(t_q.is_finite());
        const CycleResult cycle = cycle_summary(t_q, theta_of(nc), 1.0);
        const double eta_q =
            quantum_efficiency_heating(eps_g, MeanPhotonNumber{nc}, MeanPhotonNumber{nh});
        CHECK(std::abs(cycle.efficiency - eta_q) < 1e-12);
    }
}
