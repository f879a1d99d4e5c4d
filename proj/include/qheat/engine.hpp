#pragma once

#include "qheat/steady_state.hpp"
#include "qheat/units.hpp"

namespace qheat {

// Ideal cycle between two isotherms with entropy swing delta_s (units of k_B).
struct CycleSpec {
    ReducedTemperature t_hot;
    ReducedTemperature t_cold;
    double delta_s = 0.0;

    static CycleSpec make(ReducedTemperature t_hot, ReducedTemperature t_cold, double delta_s);
};

struct CycleResult {
    double q_in = 0.0;  // T_Q * delta_s
    double q_out = 0.0; // T_c * delta_s (released heat, reported as a magnitude)
    double work = 0.0;  // q_in - q_out
    double efficiency = 0.0;
    bool q_in_unbounded = false; // divergent effective hot temperature
};

// eta = 1 - T_c/T_h.
double carnot_efficiency(ReducedTemperature t_cold, ReducedTemperature t_hot);

// Quantum efficiency when negative ground-state coherence raises the
// effective hot-isotherm temperature:
//   eta_Q = eta - ln(1 + eps_g)/ln(1 + 1/nbar_c).
// Valid for eps_g in (-1/(nbar_h + 1), 0]; outside that range the
// steady-state positivity bound is violated and a domain error names it.
double quantum_efficiency_heating(double eps_g, MeanPhotonNumber nbar_c,
                                  MeanPhotonNumber nbar_h);

// Quantum efficiency when positive ground-state coherence cools the
// effective cold-isotherm temperature below t_cold:
//   eta_Q = 1 - T_Q/T_h,  T_Q = 1/ln[(1 + eps_g)(1 + 1/nbar_c)].
// Requires eps_g > 0 (wrong regime otherwise: the two formulas assign the
// effective temperature to different cycle legs).
double quantum_efficiency_cooling(double eps_g, MeanPhotonNumber nbar_c,
                                  ReducedTemperature t_hot, ReducedTemperature t_cold);

// Algebraically equivalent cooling route expanded around the Carnot value:
//   eta + (T_c/T_h) * ln(1 + eps_g) / ln[(1 + eps_g)(1 + 1/nbar_c)].
// Kept as an independent evaluation path; it must agree with
// quantum_efficiency_cooling to high accuracy for consistent inputs.
double quantum_efficiency_cooling_expanded(double eps_g, MeanPhotonNumber nbar_c,
                                           ReducedTemperature t_hot,
                                           ReducedTemperature t_cold);

// Single-bath quantum efficiency (T_h = T_c), both signs of eps_g:
//   eps_g < 0: -ln(1 + eps_g)/ln(1 + 1/nbar_eq)
//   eps_g > 0: [1 + ln(1 + 1/nbar_eq)/ln(1 + eps_g)]^{-1}
//   eps_g = 0: 0 (classical reduction).
double single_bath_quantum_efficiency(double eps_g, MeanPhotonNumber nbar_eq);

// High-temperature linearization eta_Q ~ eta - (T_c/T_h)*nbar_h*eps_g.
// Property-check companion to quantum_efficiency_heating, never a primary
// output.
double high_temperature_efficiency_approx(double eta, ReducedTemperature t_cold,
                                          ReducedTemperature t_hot, MeanPhotonNumber nbar_h,
                                          double eps_g);

// Cycle bookkeeping with a coherence-shifted hot isotherm. A divergent
// effective temperature yields efficiency 1 with q_in flagged unbounded; a
// zero effective temperature cannot drive the hot isotherm (domain error).
CycleResult cycle_summary(const EffectiveTemperature& t_effective_hot,
                          ReducedTemperature t_cold, double delta_s);
CycleResult cycle_summary(const EffectiveTemperature& t_effective_hot, const CycleSpec& spec);

}  // namespace qheat
