#pragma once

#include <vector>

#include "qheat/atoms.hpp"
#include "qheat/steady_state.hpp"

namespace qheat {

// Gain/loss coefficients of the photon-number rate equation
//   dn/dtau = gain*(n + 1) - loss*n,
// with time measured in units of the per-configuration rate prefactor
// (the overall alpha factor is absorbed into tau, so only the bracket
// coefficients matter; the steady state is prefactor-independent).
struct RateCoefficients {
    double gain = 0.0; // A: emission, sum of excited-manifold matrix elements
    double loss = 0.0; // B: absorption, sum of ground-manifold matrix elements

    static RateCoefficients make(double gain, double loss);

    bool has_steady_state() const { return loss > gain; }
    // A/(B - A); throws "no steady state (divergent pumping)" when B <= A.
    double steady_mean() const;
};

// A = N*P_ee, B = N*p*(1 + chi*(N-1)).
RateCoefficients rate_coefficients(const MultiGroundAtom& atom);
// A = 2*P_ee*(1 + eps_e), B = 2*P_gg (the ground term enters doubled).
RateCoefficients rate_coefficients(const TwoExcitedAtom& atom);
// A = 2*(1/2 - p)*(1 + eps_e), B = 2*p*(1 + eps_g).
RateCoefficients rate_coefficients(const FourLevelAtom& atom);
RateCoefficients rate_coefficients(const AtomConfiguration& atom);

struct Trajectory {
    std::vector<double> times;  // strictly increasing, starts at 0
    std::vector<double> values; // nbar(tau) >= 0
    bool diverged = false;      // hit the cap before tau_end (B <= A runs)

    double final_value() const { return values.back(); }
};

// Recommended step for the default tolerance claims: 0.01/(B - A).
double default_dtau(const RateCoefficients& coeffs);

// Classical fixed-step 4th-order integration of the mean-photon rate
// equation. The equation is linear and stiff-free, so a fixed step with
// dtau*|B - A| < 0.1 keeps the endpoint within ~1e-10 of the closed form
//   n(tau) = n_ss + (n0 - n_ss)*exp(-(B-A)*tau).
// Runs without a steady state (B <= A) grow until `cap` and are flagged.
Trajectory evolve_mean_photon(const RateCoefficients& coeffs, double nbar0, double tau_end,
                              double dtau, double cap = 1e12);

// Truncated photon-number distribution p_0..p_{n_max}.
struct FockDistribution {
    std::vector<double> probabilities;

    static FockDistribution vacuum(int n_max);

    int n_max() const { return static_cast<int>(probabilities.size()) - 1; }
    double total() const;
    double mean() const;
    double tail() const { return probabilities.back(); }
};

// Total variation distance (distributions of unequal length are padded
// with zeros).
double total_variation(const FockDistribution& a, const FockDistribution& b);

// Stationary distribution of the birth-death chain with up-rate A*(n+1) and
// down-rate B*n: detailed balance gives the geometric p_n ~ (A/B)^n. The
// truncation n_max starts at max(50, 20*n_ss) and doubles until the
// geometric tail bound r^n_max/(1-r) drops below tail_tol. The returned
// mean() is computed from the explicit truncated vector.
FockDistribution birth_death_steady_state(const RateCoefficients& coeffs, double tail_tol);

// Step size keeping RK4 stable on the truncated chain generator.
double stable_chain_dtau(const RateCoefficients& coeffs, int n_max);

// Fixed-step RK4 integration of the diagonal master equation
//   dp_n/dtau = A*n*p_{n-1} - [A*(n+1) + B*n]*p_n + B*(n+1)*p_{n+1},
// with the up-rate out of n_max dropped so probability is conserved exactly
// by the generator. Throws if the boundary mass p_{n_max} exceeds tail_tol
// mid-run (advice: enlarge n_max).
FockDistribution birth_death_evolve(const RateCoefficients& coeffs,
                                    const FockDistribution& initial, double tau_end,
                                    double dtau, double tail_tol = 1e-9);

}  // namespace qheat
