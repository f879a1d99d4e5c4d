#include "qheat/atoms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace qheat {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        std::ostringstream msg;
        msg << what << " must be finite";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

MultiGroundAtom MultiGroundAtom::make(int n_levels, double ground_pop, double chi) {
    if (n_levels < 2)
        throw std::domain_error("MultiGroundAtom: n_levels must be >= 2");
    require_finite(ground_pop, "MultiGroundAtom: ground_pop");
    require_finite(chi, "MultiGroundAtom: chi");
    if (ground_pop <= 0.0)
        throw std::domain_error("MultiGroundAtom: ground_pop must be > 0");
    if (1.0 - n_levels * ground_pop < 0.0)
        throw std::domain_error(
            "MultiGroundAtom: ground_pop must satisfy p <= 1/N (excited population >= 0)");
    return MultiGroundAtom{n_levels, ground_pop, chi};
}

TwoExcitedAtom TwoExcitedAtom::make(double excited_pop, double epsilon_e) {
    require_finite(excited_pop, "TwoExcitedAtom: excited_pop");
    require_finite(epsilon_e, "TwoExcitedAtom: epsilon_e");
    if (excited_pop <= 0.0)
        throw std::domain_error("TwoExcitedAtom: excited_pop must be > 0");
    if (1.0 - 2.0 * excited_pop <= excited_pop)
        throw std::domain_error(
            "TwoExcitedAtom: excited_pop must be < 1/3 (ground population must dominate)");
    return TwoExcitedAtom{excited_pop, epsilon_e};
}

FourLevelAtom FourLevelAtom::make(double ground_pop, double eps_g, double eps_e) {
    require_finite(ground_pop, "FourLevelAtom: ground_pop");
    require_finite(eps_g, "FourLevelAtom: eps_g");
    require_finite(eps_e, "FourLevelAtom: eps_e");
    if (!(ground_pop > 0.25 && ground_pop < 0.5))
        throw std::domain_error(
            "FourLevelAtom: ground_pop must lie in (1/4, 1/2) so that 0 < P_ee < p");
    return FourLevelAtom{ground_pop, eps_g, eps_e};
}

double epsilon_g(const MultiGroundAtom& atom) {
    return atom.chi * (atom.n_levels - 1);
}

CoherenceBounds chi_bounds(int n_levels, MeanPhotonNumber nbar) {
    if (n_levels < 2)
        throw std::domain_error("chi_bounds: no coherence manifold for N < 2");
    if (!(nbar.nbar > 0.0))
        throw std::domain_error("chi_bounds: requires nbar > 0");
    const double lower = -1.0 / ((n_levels - 1) * (nbar.nbar + 1.0));
    return CoherenceBounds{lower, 1.0, /*lower_open=*/true, /*upper_open=*/false};
}

CoherenceBounds epsilon_e_bounds(MeanPhotonNumber nbar) {
    if (!(nbar.nbar > 0.0))
        throw std::domain_error("epsilon_e_bounds: requires nbar > 0");
    return CoherenceBounds{-1.0, 1.0 / nbar.nbar, /*lower_open=*/false, /*upper_open=*/true};
}

double chi_from_phase(double magnitude, double phase, double ground_pop) {
    require_finite(magnitude, "chi_from_phase: magnitude");
    require_finite(phase, "chi_from_phase: phase");
    if (magnitude < 0.0)
        throw std::domain_error("chi_from_phase: magnitude must be >= 0");
    if (!(ground_pop > 0.0) || !std::isfinite(ground_pop))
        throw std::domain_error("chi_from_phase: ground_pop must be > 0");
    if (magnitude > ground_pop)
        throw std::domain_error(
            "chi_from_phase: |P_g1g2| > p violates positivity of the ground block");
    return magnitude * std::cos(phase) / ground_pop;
}

namespace {

MeanPhotonNumber boltzmann_ratio(double excited, double ground, const char* which) {
    if (excited == 0.0) return MeanPhotonNumber{0.0};
    if (excited >= ground) {
        std::ostringstream msg;
        msg << which << ": inverted population (P_ee >= P_g), no thermal reference";
        throw std::domain_error(msg.str());
    }
    return MeanPhotonNumber{excited / (ground - excited)};
}

}  // namespace

MeanPhotonNumber reference_nbar(const MultiGroundAtom& atom) {
    return boltzmann_ratio(atom.excited_pop(), atom.ground_pop, "reference_nbar");
}

MeanPhotonNumber reference_nbar(const TwoExcitedAtom& atom) {
    return boltzmann_ratio(atom.excited_pop, atom.ground_pop(), "reference_nbar");
}

MeanPhotonNumber reference_nbar(const FourLevelAtom& atom) {
    return boltzmann_ratio(atom.excited_pop(), atom.ground_pop, "reference_nbar");
}

MeanPhotonNumber reference_nbar(const AtomConfiguration& atom) {
    return std::visit([](const auto& a) { return reference_nbar(a); }, atom);
}

namespace {

Eigen::MatrixXd dense_density_matrix(const MultiGroundAtom& a) {
    const int dim = a.n_levels + 1;
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    rho(0, 0) = a.excited_pop();
    const double xi = a.xi();
    for (int i = 1; i < dim; ++i) {
        for (int j = 1; j < dim; ++j) rho(i, j) = (i == j) ? a.ground_pop : xi;
    }
    return rho;
}

Eigen::MatrixXd dense_density_matrix(const TwoExcitedAtom& a) {
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(3, 3);
    const double off = a.epsilon_e * a.excited_pop;
    rho(0, 0) = rho(1, 1) = a.excited_pop;
    rho(0, 1) = rho(1, 0) = off;
    rho(2, 2) = a.ground_pop();
    return rho;
}

Eigen::MatrixXd dense_density_matrix(const FourLevelAtom& a) {
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(4, 4);
    const double pe = a.excited_pop();
    rho(0, 0) = rho(1, 1) = pe;
    rho(0, 1) = rho(1, 0) = a.eps_e * pe;
    rho(2, 2) = rho(3, 3) = a.ground_pop;
    rho(2, 3) = rho(3, 2) = a.eps_g * a.ground_pop;
    return rho;
}

Eigen::MatrixXd dense_density_matrix(const AtomConfiguration& atom) {
    return std::visit([](const auto& a) { return dense_density_matrix(a); }, atom);
}

// Maps the most negative eigenvalue back to the closed-form constraint it
// violates, for the report text.
std::string name_violation(const MultiGroundAtom& a) {
    std::ostringstream msg;
    const double xi = a.xi();
    if (xi > a.ground_pop) {
        msg << "ground-block eigenvalue p - xi < 0: requires xi <= p (chi <= 1)";
    } else {
        msg << "ground-block eigenvalue p + (N-1)*xi < 0: requires xi >= -p/(N-1) "
               "(chi >= -1/(N-1))";
    }
    return msg.str();
}

std::string name_violation(const TwoExcitedAtom&) {
    return "excited-block eigenvalue P_ee*(1 - |epsilon_e|) < 0: requires |epsilon_e| <= 1";
}

std::string name_violation(const FourLevelAtom& a) {
    std::ostringstream msg;
    if (std::abs(a.eps_g) > 1.0) {
        msg << "ground-block determinant p^2*(1 - eps_g^2) < 0: requires |eps_g| <= 1";
    } else {
        msg << "excited-block determinant (1/2-p)^2*(1 - eps_e^2) < 0: requires |eps_e| <= 1";
    }
    return msg.str();
}

}  // namespace

std::vector<double> density_matrix(const AtomConfiguration& atom) {
    const Eigen::MatrixXd rho = dense_density_matrix(atom);
    std::vector<double> out(rho.size());
    for (int i = 0; i < rho.rows(); ++i)
        for (int j = 0; j < rho.cols(); ++j) out[i * rho.cols() + j] = rho(i, j);
    return out;
}

std::vector<double> density_matrix_eigenvalues(const AtomConfiguration& atom) {
    const Eigen::MatrixXd rho = dense_density_matrix(atom);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

PositivityReport validate_positivity(const AtomConfiguration& atom) {
    const std::vector<double> ev = density_matrix_eigenvalues(atom);
    const double min_ev = ev.front(); // ascending order
    PositivityReport report;
    report.min_eigenvalue = min_ev;
    report.valid = min_ev >= -kPsdEigenvalueTolerance;
    if (!report.valid) {
        std::ostringstream msg;
        msg << std::visit([](const auto& a) { return name_violation(a); }, atom)
            << " (min eigenvalue " << min_ev << ")";
        report.violation = msg.str();
    }
    return report;
}

}  // namespace qheat
