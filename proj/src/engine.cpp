#include "qheat/engine.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qheat {

namespace {

void require_positive_temperature(ReducedTemperature t, const char* what) {
    if (t.is_zero() || !(t.theta > 0.0) || !std::isfinite(t.theta)) {
        std::ostringstream msg;
        msg << what << " must be a finite positive temperature";
        throw std::domain_error(msg.str());
    }
}

void require_positive_nbar(MeanPhotonNumber n, const char* what) {
    if (!(n.nbar > 0.0) || !std::isfinite(n.nbar)) {
        std::ostringstream msg;
        msg << what << " must be > 0";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

CycleSpec CycleSpec::make(ReducedTemperature t_hot, ReducedTemperature t_cold,
                          double delta_s) {
    require_positive_temperature(t_hot, "CycleSpec: t_hot");
    require_positive_temperature(t_cold, "CycleSpec: t_cold");
    if (t_hot.theta < t_cold.theta)
        throw std::domain_error("CycleSpec: requires t_hot >= t_cold");
    if (!(delta_s > 0.0) || !std::isfinite(delta_s))
        throw std::domain_error("CycleSpec: delta_s must be > 0");
    return CycleSpec{t_hot, t_cold, delta_s};
}

double carnot_efficiency(ReducedTemperature t_cold, ReducedTemperature t_hot) {
    require_positive_temperature(t_cold, "carnot_efficiency: t_cold");
    require_positive_temperature(t_hot, "carnot_efficiency: t_hot");
    if (t_cold.theta > t_hot.theta)
        throw std::domain_error("carnot_efficiency: requires t_cold <= t_hot");
    return 1.0 - t_cold.theta / t_hot.theta;
}

double quantum_efficiency_heating(double eps_g, MeanPhotonNumber nbar_c,
                                  MeanPhotonNumber nbar_h) {
    require_positive_nbar(nbar_c, "quantum_efficiency_heating: nbar_c");
    require_positive_nbar(nbar_h, "quantum_efficiency_heating: nbar_h");
    if (nbar_h.nbar < nbar_c.nbar)
        throw std::domain_error(
            "quantum_efficiency_heating: hot bath must be at least as occupied as the cold "
            "bath (nbar_h >= nbar_c)");
    // The open lower endpoint is exactly where the steady-state denominator
    // 1 + (nbar_h + 1)*eps_g crosses zero; test the same expression so the
    // domain boundary matches the steady-state tagging bit for bit.
    if (!(steady_denominator(eps_g, 0.0, nbar_h.nbar) > 0.0) || eps_g > 0.0) {
        std::ostringstream msg;
        msg << "quantum_efficiency_heating: eps_g = " << eps_g
            << " outside (-1/(nbar_h+1), 0] = (" << -1.0 / (nbar_h.nbar + 1.0)
            << ", 0]: steady-state positivity bound";
        throw std::domain_error(msg.str());
    }
    const double log_cold = std::log1p(1.0 / nbar_c.nbar);
    const double log_hot = std::log1p(1.0 / nbar_h.nbar);
    const double eta = 1.0 - log_hot / log_cold;
    return eta - std::log1p(eps_g) / log_cold;
}

double quantum_efficiency_cooling(double eps_g, MeanPhotonNumber nbar_c,
                                  ReducedTemperature t_hot, ReducedTemperature t_cold) {
    require_positive_nbar(nbar_c, "quantum_efficiency_cooling: nbar_c");
    require_positive_temperature(t_hot, "quantum_efficiency_cooling: t_hot");
    require_positive_temperature(t_cold, "quantum_efficiency_cooling: t_cold");
    if (t_hot.theta < t_cold.theta)
        throw std::domain_error("quantum_efficiency_cooling: requires t_hot >= t_cold");
    if (!(eps_g > 0.0))
        throw std::domain_error(
            "quantum_efficiency_cooling: requires eps_g > 0 (cooling regime)");
    const double theta_q = 1.0 / (std::log1p(eps_g) + std::log1p(1.0 / nbar_c.nbar));
    return 1.0 - theta_q / t_hot.theta;
}

double quantum_efficiency_cooling_expanded(double eps_g, MeanPhotonNumber nbar_c,
                                           ReducedTemperature t_hot,
                                           ReducedTemperature t_cold) {
    require_positive_nbar(nbar_c, "quantum_efficiency_cooling: nbar_c");
    require_positive_temperature(t_hot, "quantum_efficiency_cooling: t_hot");
    require_positive_temperature(t_cold, "quantum_efficiency_cooling: t_cold");
    if (t_hot.theta < t_cold.theta)
        throw std::domain_error("quantum_efficiency_cooling: requires t_hot >= t_cold");
    if (!(eps_g > 0.0))
        throw std::domain_error(
            "quantum_efficiency_cooling: requires eps_g > 0 (cooling regime)");
    const double eta = 1.0 - t_cold.theta / t_hot.theta;
    const double log_coh = std::log1p(eps_g);
    const double log_q = log_coh + std::log1p(1.0 / nbar_c.nbar);
    return eta + (t_cold.theta / t_hot.theta) * log_coh / log_q;
}

double single_bath_quantum_efficiency(double eps_g, MeanPhotonNumber nbar_eq) {
    require_positive_nbar(nbar_eq, "single_bath_quantum_efficiency: nbar_eq");
    if (eps_g == 0.0) return 0.0;
    const double log_bath = std::log1p(1.0 / nbar_eq.nbar);
    if (eps_g < 0.0) {
        if (!(steady_denominator(eps_g, 0.0, nbar_eq.nbar) > 0.0)) {
            std::ostringstream msg;
            msg << "single_bath_quantum_efficiency: eps_g = " << eps_g
                << " at or below -1/(nbar_eq+1) = " << -1.0 / (nbar_eq.nbar + 1.0)
                << ": steady-state positivity bound";
            throw std::domain_error(msg.str());
        }
        return -std::log1p(eps_g) / log_bath;
    }
    return 1.0 / (1.0 + log_bath / std::log1p(eps_g));
}

double high_temperature_efficiency_approx(double eta, ReducedTemperature t_cold,
                                          ReducedTemperature t_hot, MeanPhotonNumber nbar_h,
                                          double eps_g) {
    require_positive_temperature(t_cold, "high_temperature_efficiency_approx: t_cold");
    require_positive_temperature(t_hot, "high_temperature_efficiency_approx: t_hot");
    return eta - (t_cold.theta / t_hot.theta) * nbar_h.nbar * eps_g;
}

CycleResult cycle_summary(const EffectiveTemperature& t_effective_hot,
                          ReducedTemperature t_cold, double delta_s) {
    require_positive_temperature(t_cold, "cycle_summary: t_cold");
    if (!(delta_s > 0.0) || !std::isfinite(delta_s))
        throw std::domain_error("cycle_summary: delta_s must be > 0");

    CycleResult result;
    switch (t_effective_hot.kind) {
        case EffectiveTemperature::Kind::Zero:
            throw std::domain_error(
                "cycle_summary: zero effective temperature cannot drive the hot isotherm");
        case EffectiveTemperature::Kind::Unphysical:
            throw std::domain_error(
                "cycle_summary: unphysical effective temperature (no steady state)");
        case EffectiveTemperature::Kind::Divergent:
            result.q_in = std::numeric_limits<double>::infinity();
            result.q_out = t_cold.theta * delta_s;
            result.work = std::numeric_limits<double>::infinity();
            result.efficiency = 1.0;
            result.q_in_unbounded = true;
            return result;
        case EffectiveTemperature::Kind::Finite: break;
    }

    const double theta_q = t_effective_hot.theta.theta;
    if (theta_q < t_cold.theta)
        throw std::domain_error(
            "cycle_summary: effective hot temperature must be >= t_cold");
    result.q_in = theta_q * delta_s;
    result.q_out = t_cold.theta * delta_s;
    result.work = result.q_in - result.q_out;
    result.efficiency = 1.0 - t_cold.theta / theta_q;
    return result;
}

CycleResult cycle_summary(const EffectiveTemperature& t_effective_hot, const CycleSpec& spec) {
    return cycle_summary(t_effective_hot, spec.t_cold, spec.delta_s);
}

}  // namespace qheat
