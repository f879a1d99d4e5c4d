#pragma once

#include <string>

#include "qheat/atoms.hpp"
#include "qheat/units.hpp"

namespace qheat {

enum class Regime { Heating, Cooling, Cancellation, Unphysical };

const char* to_string(Regime regime);

// Tolerance for detecting the cancellation line eps_g == eps_e on float
// grids (exact equality is measure-zero).
inline constexpr double kCancellationTolerance = 1e-12;

// Denominator of the steady-state photon number,
//   D = 1 - nbar*eps_e + (nbar + 1)*eps_g.
// Every boundary decision (Divergent at D == 0, Unphysical at D < 0) uses
// this single expression so that sweep cells, regime labels and steady-state
// tags classify boundary points identically.
double steady_denominator(double eps_g, double eps_e, double nbar);

// Steady-state photon number nbar_Q = nbar*(1 + eps_e) / D, or a boundary
// tag with the offending constraint named.
struct PhotonSteadyState {
    enum class Tag { Finite, Divergent, Unphysical };
    Tag tag = Tag::Finite;
    double nbar_q = 0.0;    // meaningful when tag == Finite
    std::string constraint; // empty when finite

    bool is_finite() const { return tag == Tag::Finite; }
};

// Effective cavity temperature implied by nbar_Q via the Bose relation.
// Finite: theta = 1/ln[(nbar+1)(1+eps_g) / (nbar(1+eps_e))].
// Zero: nbar_Q == 0 (reached at eps_e = -1).
// Divergent: log argument equals 1 (D == 0) while nbar_Q grows without bound.
// Unphysical: D < 0, the steady-state photon number would be negative.
struct EffectiveTemperature {
    enum class Kind { Finite, Zero, Divergent, Unphysical };
    Kind kind = Kind::Zero;
    ReducedTemperature theta; // meaningful when kind == Finite

    static EffectiveTemperature finite(ReducedTemperature t) {
        return EffectiveTemperature{Kind::Finite, t};
    }
    static EffectiveTemperature zero() { return {Kind::Zero, ReducedTemperature::zero()}; }
    static EffectiveTemperature divergent() { return {Kind::Divergent, {}}; }
    static EffectiveTemperature unphysical() { return {Kind::Unphysical, {}}; }

    bool is_finite() const { return kind == Kind::Finite; }
};

struct SteadyStateResult {
    PhotonSteadyState photon;
    EffectiveTemperature temperature;
    Regime regime = Regime::Cancellation;
};

// Core evaluations on the (eps_g, eps_e) plane. The per-configuration
// overloads supply the coherence parameters of each atomic configuration
// (eps_e = 0 for the multi-ground case, eps_g = 0 for the two-excited case).
PhotonSteadyState steady_photon_number(double eps_g, double eps_e, MeanPhotonNumber nbar);
EffectiveTemperature effective_temperature(double eps_g, double eps_e, MeanPhotonNumber nbar);

// Total classification of the coherence plane: Unphysical iff D <= 0, else
// Cancellation on |eps_g - eps_e| <= kCancellationTolerance, else Heating
// iff eps_e > eps_g, else Cooling.
Regime classify_regime(double eps_g, double eps_e, MeanPhotonNumber nbar);

SteadyStateResult compute_steady_state(double eps_g, double eps_e, MeanPhotonNumber nbar);

PhotonSteadyState steady_photon_number(const MultiGroundAtom& atom, MeanPhotonNumber nbar);
PhotonSteadyState steady_photon_number(const TwoExcitedAtom& atom, MeanPhotonNumber nbar);
PhotonSteadyState steady_photon_number(const FourLevelAtom& atom, MeanPhotonNumber nbar);
PhotonSteadyState steady_photon_number(const AtomConfiguration& atom, MeanPhotonNumber nbar);

EffectiveTemperature effective_temperature(const MultiGroundAtom& atom, MeanPhotonNumber nbar);
EffectiveTemperature effective_temperature(const TwoExcitedAtom& atom, MeanPhotonNumber nbar);
EffectiveTemperature effective_temperature(const FourLevelAtom& atom, MeanPhotonNumber nbar);
EffectiveTemperature effective_temperature(const AtomConfiguration& atom, MeanPhotonNumber nbar);

SteadyStateResult compute_steady_state(const AtomConfiguration& atom, MeanPhotonNumber nbar);

// Coherence parameters (eps_g, eps_e) of a configuration, as entering the
// steady-state formulas.
std::pair<double, double> coherence_parameters(const AtomConfiguration& atom);

}  // namespace qheat
