#include "qheat/steady_state.hpp"

#include <cmath>
#include <sstream>

namespace qheat {

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Heating: return "heating";
        case Regime::Cooling: return "cooling";
        case Regime::Cancellation: return "cancellation";
        case Regime::Unphysical: return "unphysical";
    }
    return "unphysical";
}

double steady_denominator(double eps_g, double eps_e, double nbar) {
    return 1.0 - nbar * eps_e + (nbar + 1.0) * eps_g;
}

namespace {

void require_bath(MeanPhotonNumber nbar) {
    if (!(nbar.nbar > 0.0) || !std::isfinite(nbar.nbar))
        throw std::domain_error("steady state: requires bath occupation nbar > 0");
}

std::string boundary_text(double eps_g, double eps_e, double nbar, bool at_zero) {
    std::ostringstream msg;
    msg << "1 - nbar*eps_e + (nbar+1)*eps_g " << (at_zero ? "= 0" : "< 0")
        << " at eps_g=" << eps_g << " eps_e=" << eps_e << " nbar=" << nbar;
    if (at_zero)
        msg << ": steady-state photon number diverges";
    else
        msg << ": steady-state photon number would be negative";
    return msg.str();
}

}  // namespace

PhotonSteadyState steady_photon_number(double eps_g, double eps_e, MeanPhotonNumber nbar) {
    require_bath(nbar);
    const double d = steady_denominator(eps_g, eps_e, nbar.nbar);
    PhotonSteadyState out;
    if (d == 0.0) {
        out.tag = PhotonSteadyState::Tag::Divergent;
        out.constraint = boundary_text(eps_g, eps_e, nbar.nbar, true);
        return out;
    }
    if (d < 0.0) {
        out.tag = PhotonSteadyState::Tag::Unphysical;
        out.constraint = boundary_text(eps_g, eps_e, nbar.nbar, false);
        return out;
    }
    const double numerator = nbar.nbar * (1.0 + eps_e);
    if (numerator < 0.0) {
        out.tag = PhotonSteadyState::Tag::Unphysical;
        out.constraint = "eps_e < -1 violates the excited-block PSD bound";
        return out;
    }
    out.nbar_q = numerator / d;
    return out;
}

EffectiveTemperature effective_temperature(double eps_g, double eps_e, MeanPhotonNumber nbar) {
    const PhotonSteadyState photon = steady_photon_number(eps_g, eps_e, nbar);
    switch (photon.tag) {
        case PhotonSteadyState::Tag::Divergent: return EffectiveTemperature::divergent();
        case PhotonSteadyState::Tag::Unphysical: return EffectiveTemperature::unphysical();
        case PhotonSteadyState::Tag::Finite: break;
    }
    if (photon.nbar_q == 0.0) return EffectiveTemperature::zero();
    return EffectiveTemperature::finite(
        temperature_from_mean_photon(MeanPhotonNumber{photon.nbar_q}));
}

Regime classify_regime(double eps_g, double eps_e, MeanPhotonNumber nbar) {
    const double d = steady_denominator(eps_g, eps_e, nbar.nbar);
    if (d <= 0.0) return Regime::Unphysical;
    if (std::abs(eps_g - eps_e) <= kCancellationTolerance) return Regime::Cancellation;
    return eps_e > eps_g ? Regime::Heating : Regime::Cooling;
}

SteadyStateResult compute_steady_state(double eps_g, double eps_e, MeanPhotonNumber nbar) {
    return SteadyStateResult{steady_photon_number(eps_g, eps_e, nbar),
                             effective_temperature(eps_g, eps_e, nbar),
                             classify_regime(eps_g, eps_e, nbar)};
}

std::pair<double, double> coherence_parameters(const AtomConfiguration& atom) {
    if (const auto* a = std::get_if<MultiGroundAtom>(&atom)) return {epsilon_g(*a), 0.0};
    if (const auto* a = std::get_if<TwoExcitedAtom>(&atom)) return {0.0, a->epsilon_e};
    const auto& a = std::get<FourLevelAtom>(atom);
    return {a.eps_g, a.eps_e};
}

PhotonSteadyState steady_photon_number(const MultiGroundAtom& atom, MeanPhotonNumber nbar) {
    return steady_photon_number(epsilon_g(atom), 0.0, nbar);
}

PhotonSteadyState steady_photon_number(const TwoExcitedAtom& atom, MeanPhotonNumber nbar) {
    return steady_photon_number(0.0, atom.epsilon_e, nbar);
}

PhotonSteadyState steady_photon_number(const FourLevelAtom& atom, MeanPhotonNumber nbar) {
    return steady_photon_number(atom.eps_g, atom.eps_e, nbar);
}

PhotonSteadyState steady_photon_number(const AtomConfiguration& atom, MeanPhotonNumber nbar) {
    const auto [eps_g, eps_e] = coherence_parameters(atom);
    return steady_photon_number(eps_g, eps_e, nbar);
}

EffectiveTemperature effective_temperature(const MultiGroundAtom& atom, MeanPhotonNumber nbar) {
    return effective_temperature(epsilon_g(atom), 0.0, nbar);
}

EffectiveTemperature effective_temperature(const TwoExcitedAtom& atom, MeanPhotonNumber nbar) {
    return effective_temperature(0.0, atom.epsilon_e, nbar);
}

EffectiveTemperature effective_temperature(const FourLevelAtom& atom, MeanPhotonNumber nbar) {
    return effective_temperature(atom.eps_g, atom.eps_e, nbar);
}

EffectiveTemperature effective_temperature(const AtomConfiguration& atom, MeanPhotonNumber nbar) {
    const auto [eps_g, eps_e] = coherence_parameters(atom);
    return effective_temperature(eps_g, eps_e, nbar);
}

SteadyStateResult compute_steady_state(const AtomConfiguration& atom, MeanPhotonNumber nbar) {
    const auto [eps_g, eps_e] = coherence_parameters(atom);
    return compute_steady_state(eps_g, eps_e, nbar);
}

}  // namespace qheat
