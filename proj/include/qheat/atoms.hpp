#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qheat/units.hpp"

namespace qheat {

// The three injected-atom configurations. Constructors enforce population
// normalization and finiteness; coherence amplitudes are accepted as given
// and certified separately by validate_positivity, so that out-of-range
// coherences can be constructed, diagnosed and reported.

// One excited state above N nearly degenerate ground states. All ground
// populations equal p, all ground-ground coherences equal xi = chi*p.
struct MultiGroundAtom {
    int n_levels = 2;        // N >= 2
    double ground_pop = 0.0; // p in (0, 1/N]; excited population is 1 - N*p
    double chi = 0.0;        // xi / p

    static MultiGroundAtom make(int n_levels, double ground_pop, double chi);

    double excited_pop() const { return 1.0 - n_levels * ground_pop; }
    double xi() const { return chi * ground_pop; }
};

// Two nearly degenerate excited states sharing one ground state. Excited
// populations are equal; epsilon_e = P_e1e2 / P_ee.
struct TwoExcitedAtom {
    double excited_pop = 0.0; // P_ee per excited level, in (0, 1/3)
    double epsilon_e = 0.0;

    static TwoExcitedAtom make(double excited_pop, double epsilon_e);

    double ground_pop() const { return 1.0 - 2.0 * excited_pop; }
};

// Two nearly degenerate ground states and two nearly degenerate excited
// states; per-level populations p and 1/2 - p.
struct FourLevelAtom {
    double ground_pop = 0.0; // p per ground level, in (1/4, 1/2)
    double eps_g = 0.0;      // P_g1g2 / p
    double eps_e = 0.0;      // P_e1e2 / (1/2 - p)

    static FourLevelAtom make(double ground_pop, double eps_g, double eps_e);

    double excited_pop() const { return 0.5 - ground_pop; }
};

using AtomConfiguration = std::variant<MultiGroundAtom, TwoExcitedAtom, FourLevelAtom>;

// Half-open/closed interval of admissible coherence parameters.
struct CoherenceBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_open = false;
    bool upper_open = false;

    bool contains(double x) const {
        if (lower_open ? !(x > lower) : !(x >= lower)) return false;
        if (upper_open ? !(x < upper) : !(x <= upper)) return false;
        return true;
    }
};

// Normalized ground-state coherence: eps_g = chi * (N - 1).
double epsilon_g(const MultiGroundAtom& atom);

// Admissible chi for an N-ground-level atom against a bath at occupation
// nbar: steady-state positivity opens the lower endpoint at
// -1/((N-1)(nbar+1)); the density matrix stays positive semidefinite up to
// and including chi = 1.
CoherenceBounds chi_bounds(int n_levels, MeanPhotonNumber nbar);

// Admissible epsilon_e: [-1, 1/nbar). The PSD bound -1 is attainable; the
// steady state ceases to exist at epsilon_e = 1/nbar.
CoherenceBounds epsilon_e_bounds(MeanPhotonNumber nbar);

// Effective real coherence parameter from a complex off-diagonal
// P_g1g2 = |P| e^{i phi}: chi = |P| cos(phi) / p.
double chi_from_phase(double magnitude, double phase, double ground_pop);

// Reference thermal occupation implied by the populations: the per-level
// Boltzmann ratio P_ee / (P_g - P_ee). Throws when the population is
// inverted (no thermal reference exists).
MeanPhotonNumber reference_nbar(const MultiGroundAtom& atom);
MeanPhotonNumber reference_nbar(const TwoExcitedAtom& atom);
MeanPhotonNumber reference_nbar(const FourLevelAtom& atom);
MeanPhotonNumber reference_nbar(const AtomConfiguration& atom);

struct PositivityReport {
    bool valid = false;
    double min_eigenvalue = 0.0;
    std::string violation; // empty when valid; names the violated bound otherwise
};

// Eigenvalue tolerance for accepting a density matrix as positive
// semidefinite: boundary cases such as xi = p must validate.
inline constexpr double kPsdEigenvalueTolerance = 1e-12;

// Dense row-major density matrix of the configuration and its eigenvalues
// (ascending). Dimension: (N+1), 3 or 4 depending on the configuration.
std::vector<double> density_matrix(const AtomConfiguration& atom);
std::vector<double> density_matrix_eigenvalues(const AtomConfiguration& atom);

// PSD certification via a dense symmetric eigensolve of the explicit density
// matrix. Valid iff every eigenvalue >= -kPsdEigenvalueTolerance; the report
// names the closed-form bound responsible for a violation.
PositivityReport validate_positivity(const AtomConfiguration& atom);

}  // namespace qheat
