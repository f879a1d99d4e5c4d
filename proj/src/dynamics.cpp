#include "qheat/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qheat {

RateCoefficients RateCoefficients::make(double gain, double loss) {
    if (!std::isfinite(gain) || gain < 0.0)
        throw std::domain_error("RateCoefficients: gain must be finite and >= 0");
    if (!std::isfinite(loss) || loss < 0.0)
        throw std::domain_error("RateCoefficients: loss must be finite and >= 0");
    return RateCoefficients{gain, loss};
}

double RateCoefficients::steady_mean() const {
    if (!has_steady_state())
        throw std::domain_error("no steady state (divergent pumping): requires loss > gain");
    return gain / (loss - gain);
}

RateCoefficients rate_coefficients(const MultiGroundAtom& atom) {
    const double gain = atom.n_levels * atom.excited_pop();
    const double loss = atom.n_levels * atom.ground_pop * (1.0 + epsilon_g(atom));
    return RateCoefficients::make(gain, loss);
}

RateCoefficients rate_coefficients(const TwoExcitedAtom& atom) {
    const double gain = 2.0 * atom.excited_pop * (1.0 + atom.epsilon_e);
    const double loss = 2.0 * atom.ground_pop();
    return RateCoefficients::make(gain, loss);
}

RateCoefficients rate_coefficients(const FourLevelAtom& atom) {
    const double gain = 2.0 * atom.excited_pop() * (1.0 + atom.eps_e);
    const double loss = 2.0 * atom.ground_pop * (1.0 + atom.eps_g);
    return RateCoefficients::make(gain, loss);
}

RateCoefficients rate_coefficients(const AtomConfiguration& atom) {
    return std::visit([](const auto& a) { return rate_coefficients(a); }, atom);
}

double default_dtau(const RateCoefficients& coeffs) {
    if (!coeffs.has_steady_state())
        throw std::domain_error("default_dtau: requires loss > gain");
    return 0.01 / (coeffs.loss - coeffs.gain);
}

Trajectory evolve_mean_photon(const RateCoefficients& coeffs, double nbar0, double tau_end,
                              double dtau, double cap) {
    if (!std::isfinite(nbar0) || nbar0 < 0.0)
        throw std::domain_error("evolve_mean_photon: nbar0 must be finite and >= 0");
    if (!(tau_end > 0.0) || !std::isfinite(tau_end))
        throw std::domain_error("evolve_mean_photon: tau_end must be > 0");
    if (!(dtau > 0.0) || dtau > tau_end)
        throw std::domain_error("evolve_mean_photon: requires 0 < dtau <= tau_end");

    const double a = coeffs.gain;
    const double b = coeffs.loss;
    const auto rhs = [a, b](double n) { return a * (n + 1.0) - b * n; };

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.values.push_back(nbar0);

    double tau = 0.0;
    double n = nbar0;
    while (tau < tau_end) {
        const double h = std::min(dtau, tau_end - tau);
        const double k1 = rhs(n);
        const double k2 = rhs(n + 0.5 * h * k1);
        const double k3 = rhs(n + 0.5 * h * k2);
        const double k4 = rhs(n + h * k3);
        n += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        tau = (tau_end - tau <= dtau) ? tau_end : tau + h;
        traj.times.push_back(tau);
        traj.values.push_back(n);
        if (n > cap) {
            traj.diverged = true;
            break;
        }
    }
    return traj;
}

FockDistribution FockDistribution::vacuum(int n_max) {
    if (n_max < 1) throw std::domain_error("FockDistribution: n_max must be >= 1");
    FockDistribution dist;
    dist.probabilities.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    dist.probabilities[0] = 1.0;
    return dist;
}

double FockDistribution::total() const {
    double sum = 0.0;
    for (double p : probabilities) sum += p;
    return sum;
}

double FockDistribution::mean() const {
    double m = 0.0;
    for (std::size_t n = 1; n < probabilities.size(); ++n) m += double(n) * probabilities[n];
    return m;
}

double total_variation(const FockDistribution& a, const FockDistribution& b) {
    const std::size_t len = std::max(a.probabilities.size(), b.probabilities.size());
    double sum = 0.0;
    for (std::size_t n = 0; n < len; ++n) {
        const double pa = n < a.probabilities.size() ? a.probabilities[n] : 0.0;
        const double pb = n < b.probabilities.size() ? b.probabilities[n] : 0.0;
        sum += std::abs(pa - pb);
    }
    return 0.5 * sum;
}

FockDistribution birth_death_steady_state(const RateCoefficients& coeffs, double tail_tol) {
    if (!(tail_tol > 0.0))
        throw std::domain_error("birth_death_steady_state: tail_tol must be > 0");
    if (!coeffs.has_steady_state())
        throw std::domain_error(
            "birth_death_steady_state: no normalizable steady state (requires loss > gain)");

    FockDistribution dist;
    if (coeffs.gain == 0.0) {
        dist.probabilities = {1.0, 0.0};
        return dist;
    }

    const double r = coeffs.gain / coeffs.loss;
    const double n_ss = r / (1.0 - r);
    long n_max = std::max<long>(50, static_cast<long>(std::ceil(20.0 * n_ss)));
    while (std::pow(r, static_cast<double>(n_max)) / (1.0 - r) >= tail_tol) {
        n_max *= 2;
        if (n_max > (1L << 26))
            throw std::runtime_error(
                "birth_death_steady_state: tail tolerance unreachable at this gain/loss ratio");
    }

    // Detailed balance: p_{n+1} * B*(n+1) = p_n * A*(n+1).
    std::vector<double>& p = dist.probabilities;
    p.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    p[0] = 1.0;
    for (long n = 0; n < n_max; ++n)
        p[n + 1] = p[n] * (coeffs.gain * double(n + 1)) / (coeffs.loss * double(n + 1));
    const double norm = dist.total();
    for (double& x : p) x /= norm;
    return dist;
}

double stable_chain_dtau(const RateCoefficients& coeffs, int n_max) {
    const double spectral_scale = (coeffs.gain + coeffs.loss) * (n_max + 1.0);
    return 1.0 / spectral_scale;
}

namespace {

// dp_n = A*n*p_{n-1} - [A*(n+1) + B*n]*p_n + B*(n+1)*p_{n+1}, with the
// up-rate out of n_max dropped (reflecting truncation conserves total
// probability exactly).
void chain_rhs(const RateCoefficients& c, const std::vector<double>& p,
               std::vector<double>& dp) {
    const double a = c.gain;
    const double b = c.loss;
    const long top = static_cast<long>(p.size()) - 1;
    for (long n = 0; n <= top; ++n) {
        double d = -b * double(n) * p[n];
        if (n < top) d -= a * double(n + 1) * p[n];
        if (n > 0) d += a * double(n) * p[n - 1];
        if (n < top) d += b * double(n + 1) * p[n + 1];
        dp[n] = d;
    }
}

}  // namespace

FockDistribution birth_death_evolve(const RateCoefficients& coeffs,
                                    const FockDistribution& initial, double tau_end,
                                    double dtau, double tail_tol) {
    if (initial.probabilities.size() < 2)
        throw std::domain_error("birth_death_evolve: distribution needs n_max >= 1");
    if (!(tau_end > 0.0) || !(dtau > 0.0) || dtau > tau_end)
        throw std::domain_error("birth_death_evolve: requires 0 < dtau <= tau_end");

    std::vector<double> p = initial.probabilities;
    const std::size_t len = p.size();
    std::vector<double> k1(len), k2(len), k3(len), k4(len), tmp(len);

    double tau = 0.0;
    while (tau < tau_end) {
        const double h = std::min(dtau, tau_end - tau);
        chain_rhs(coeffs, p, k1);
        for (std::size_t i = 0; i < len; ++i) tmp[i] = p[i] + 0.5 * h * k1[i];
        chain_rhs(coeffs, tmp, k2);
        for (std::size_t i = 0; i < len; ++i) tmp[i] = p[i] + 0.5 * h * k2[i];
        chain_rhs(coeffs, tmp, k3);
        for (std::size_t i = 0; i < len; ++i) tmp[i] = p[i] + h * k3[i];
        chain_rhs(coeffs, tmp, k4);
        for (std::size_t i = 0; i < len; ++i)
            p[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        tau = (tau_end - tau <= dtau) ? tau_end : tau + h;

        if (p.back() > tail_tol) {
            std::ostringstream msg;
            msg << "birth_death_evolve: truncation overflow, boundary mass " << p.back()
                << " exceeds tail tolerance " << tail_tol << "; rerun with a larger n_max";
            throw std::runtime_error(msg.str());
        }
    }

    FockDistribution out;
    out.probabilities = std::move(p);
    return out;
}

}  // namespace qheat
