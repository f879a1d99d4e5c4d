#pragma once

#include <cmath>
#include <stdexcept>

namespace qheat {

// Dimensionless thermal units: temperatures are k_B*T/(hbar*omega), photon
// numbers are single-mode occupations. theta == 0 encodes the
// zero-temperature tag (the T -> 0 boundary is a legitimate data point for
// sweeps, not an error).
struct ReducedTemperature {
    double theta = 0.0;

    static ReducedTemperature finite(double theta) {
        if (!std::isfinite(theta) || theta <= 0.0)
            throw std::domain_error("ReducedTemperature: theta must be finite and > 0");
        return ReducedTemperature{theta};
    }
    static ReducedTemperature zero() { return ReducedTemperature{0.0}; }

    bool is_zero() const { return theta == 0.0; }
};

struct MeanPhotonNumber {
    double nbar = 0.0;

    static MeanPhotonNumber of(double nbar) {
        if (!std::isfinite(nbar) || nbar < 0.0)
            throw std::domain_error("MeanPhotonNumber: nbar must be finite and >= 0");
        return MeanPhotonNumber{nbar};
    }
};

// Bose occupation of a resonant mode: nbar = 1/(exp(1/theta) - 1).
// For theta below ~1.36e-3 the occupation underflows double precision and 0
// is returned (the exact zero-temperature limit).
inline MeanPhotonNumber mean_photon_from_temperature(ReducedTemperature t) {
    if (!std::isfinite(t.theta) || t.theta <= 0.0)
        throw std::domain_error("mean_photon_from_temperature: requires theta > 0");
    return MeanPhotonNumber{1.0 / std::expm1(1.0 / t.theta)};
}

// Inverse map: theta = 1/ln(1 + 1/nbar). nbar == 0 maps to the
// zero-temperature tag.
inline ReducedTemperature temperature_from_mean_photon(MeanPhotonNumber n) {
    if (!std::isfinite(n.nbar) || n.nbar < 0.0)
        throw std::domain_error("temperature_from_mean_photon: requires nbar >= 0");
    if (n.nbar == 0.0) return ReducedTemperature::zero();
    return ReducedTemperature{1.0 / std::log1p(1.0 / n.nbar)};
}

// Radiation pressure of the confined mode: P*V = omega_scale * nbar.
inline double radiation_pressure(MeanPhotonNumber n, double volume, double omega_scale) {
    if (!std::isfinite(volume) || volume <= 0.0)
        throw std::domain_error("radiation_pressure: volume must be > 0");
    if (!std::isfinite(omega_scale) || omega_scale <= 0.0)
        throw std::domain_error("radiation_pressure: omega_scale must be > 0");
    return omega_scale * n.nbar / volume;
}

}  // namespace qheat
