// Command-line front end: single-point evaluations, trajectory export,
// birth-death cross-checks, efficiency queries, parameter sweeps and the
// built-in figure datasets.
//
// Exit codes: 0 success, 1 domain/validation error, 2 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qheat/dynamics.hpp"
#include "qheat/engine.hpp"
#include "qheat/sweep.hpp"
#include "qheat/units.hpp"

namespace {

using namespace qheat;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct AtomOptions {
    std::string case_name;
    int n_levels = 0;
    std::optional<double> ground_pop;
    std::optional<double> chi;
    std::optional<double> xi;
    std::optional<double> excited_pop;
    std::optional<double> eps_g;
    std::optional<double> eps_e;

    void attach(CLI::App* cmd) {
        cmd->add_option("--case", case_name, "Configuration: multi_ground|two_excited|four_level")
            ->required();
        cmd->add_option("-N,--n-levels", n_levels, "Number of ground levels (multi_ground)");
        cmd->add_option("-p,--ground-pop", ground_pop, "Ground population per level");
        cmd->add_option("--chi", chi, "Normalized ground coherence xi/p (multi_ground)");
        cmd->add_option("--xi", xi, "Ground coherence amplitude (multi_ground)");
        cmd->add_option("--excited-pop", excited_pop, "Excited population per level (two_excited)");
        cmd->add_option("--eps-g", eps_g, "Ground coherence parameter (four_level)");
        cmd->add_option("--eps-e", eps_e, "Excited coherence parameter (two_excited/four_level)");
    }

    AtomConfiguration build() const {
        if (case_name == "multi_ground") {
            if (n_levels == 0 || !ground_pop)
                throw std::domain_error("multi_ground needs --n-levels and --ground-pop");
            double chi_value = 0.0;
            if (chi && xi) throw std::domain_error("give --chi or --xi, not both");
            if (chi) chi_value = *chi;
            else if (xi) chi_value = *xi / *ground_pop;
            return MultiGroundAtom::make(n_levels, *ground_pop, chi_value);
        }
        if (case_name == "two_excited") {
            if (!excited_pop) throw std::domain_error("two_excited needs --excited-pop");
            return TwoExcitedAtom::make(*excited_pop, eps_e.value_or(0.0));
        }
        if (case_name == "four_level") {
            if (!ground_pop) throw std::domain_error("four_level needs --ground-pop");
            return FourLevelAtom::make(*ground_pop, eps_g.value_or(0.0), eps_e.value_or(0.0));
        }
        throw std::domain_error("unknown case '" + case_name +
                                "'; expected multi_ground, two_excited or four_level");
    }
};

MeanPhotonNumber bath_or_reference(const std::optional<double>& nbar,
                                   const AtomConfiguration& atom) {
    if (nbar) return MeanPhotonNumber::of(*nbar);
    return reference_nbar(atom);
}

void write_trajectory(const Trajectory& traj, const std::string& destination) {
    const auto write = [&](std::ostream& out) {
        out << "tau,nbar\n";
        for (std::size_t i = 0; i < traj.times.size(); ++i)
            out << fmt(traj.times[i]) << ',' << fmt(traj.values[i]) << '\n';
        if (!out) throw IoError("write failed for '" + destination + "'");
    };
    if (destination == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw IoError("cannot open '" + destination + "' for writing");
    write(out);
}

int run_validate(const AtomOptions& opts, const std::optional<double>& nbar_opt) {
    const AtomConfiguration atom = opts.build();
    const PositivityReport report = validate_positivity(atom);
    const std::vector<double> eigenvalues = density_matrix_eigenvalues(atom);

    std::cout << "configuration: " << opts.case_name << '\n';
    std::cout << "eigenvalues:";
    for (double ev : eigenvalues) std::cout << ' ' << fmt(ev);
    std::cout << '\n';
    std::cout << "positivity: " << (report.valid ? "valid" : "INVALID")
              << " (min eigenvalue " << fmt(report.min_eigenvalue) << ")\n";
    if (!report.valid) std::cout << "violation: " << report.violation << '\n';

    try {
        const MeanPhotonNumber nbar = bath_or_reference(nbar_opt, atom);
        if (nbar.nbar > 0.0) {
            if (const auto* a = std::get_if<MultiGroundAtom>(&atom)) {
                const CoherenceBounds b = chi_bounds(a->n_levels, nbar);
                std::cout << "chi bounds at nbar=" << fmt(nbar.nbar) << ": (" << fmt(b.lower)
                          << ", " << fmt(b.upper) << "]\n";
            } else {
                const CoherenceBounds b = epsilon_e_bounds(nbar);
                std::cout << "eps_e bounds at nbar=" << fmt(nbar.nbar) << ": [" << fmt(b.lower)
                          << ", " << fmt(b.upper) << ")\n";
            }
        }
    } catch (const std::domain_error& e) {
        std::cout << "bounds: not available (" << e.what() << ")\n";
    }
    return report.valid ? 0 : 1;
}

int run_steady(const AtomOptions& opts, const std::optional<double>& nbar_opt) {
    const AtomConfiguration atom = opts.build();
    const MeanPhotonNumber nbar = bath_or_reference(nbar_opt, atom);
    const SteadyStateResult result = compute_steady_state(atom, nbar);

    std::cout << "nbar = " << fmt(nbar.nbar) << '\n';
    switch (result.photon.tag) {
        case PhotonSteadyState::Tag::Finite:
            std::cout << "nbar_q = " << fmt(result.photon.nbar_q) << '\n';
            break;
        case PhotonSteadyState::Tag::Divergent:
            std::cout << "nbar_q = divergent (" << result.photon.constraint << ")\n";
            break;
        case PhotonSteadyState::Tag::Unphysical:
            std::cout << "nbar_q = unphysical (" << result.photon.constraint << ")\n";
            break;
    }
    switch (result.temperature.kind) {
        case EffectiveTemperature::Kind::Finite: {
            const double theta_q = result.temperature.theta.theta;
            const double theta_bath = temperature_from_mean_photon(nbar).theta;
            std::cout << "theta_q = " << fmt(theta_q) << '\n';
            std::cout << "t_ratio = " << fmt(theta_q / theta_bath) << '\n';
            break;
        }
        case EffectiveTemperature::Kind::Zero: std::cout << "theta_q = 0\n"; break;
        case EffectiveTemperature::Kind::Divergent: std::cout << "theta_q = divergent\n"; break;
        case EffectiveTemperature::Kind::Unphysical: std::cout << "theta_q = unphysical\n"; break;
    }
    std::cout << "regime = " << to_string(result.regime) << '\n';
    return 0;
}

int run_oracle(const AtomOptions& opts, double tail_tol) {
    const AtomConfiguration atom = opts.build();
    const RateCoefficients coeffs = rate_coefficients(atom);
    std::cout << "gain A = " << fmt(coeffs.gain) << ", loss B = " << fmt(coeffs.loss) << '\n';

    const MeanPhotonNumber nbar = reference_nbar(atom);
    const PhotonSteadyState analytic = steady_photon_number(atom, nbar);
    if (!analytic.is_finite())
        throw std::domain_error("no finite steady state: " + analytic.constraint);

    const FockDistribution dist = birth_death_steady_state(coeffs, tail_tol);
    const double oracle_mean = dist.mean();
    const double residual = std::abs(oracle_mean - analytic.nbar_q) /
                            std::max(std::abs(analytic.nbar_q), 1e-300);
    std::cout << "analytic nbar_q  = " << fmt(analytic.nbar_q) << '\n';
    std::cout << "birth-death mean = " << fmt(oracle_mean) << " (n_max " << dist.n_max()
              << ", tail " << fmt(dist.tail()) << ")\n";
    std::cout << "relative residual = " << fmt(residual) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherence-driven photo-Carnot engine toolkit"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 success, 1 domain/validation error, 2 I/O error.\n"
        "\n"
        "Sweep CSV columns (fixed order): case, <inputs per case>, validity,\n"
        "constraint, <requested observables>, diagonal (two-coherence grids only).\n"
        "  multi_ground inputs: nbar, chi, n_levels\n"
        "  two_excited inputs:  nbar, eps_e\n"
        "  four_level inputs:   nbar, eps_g, eps_e\n"
        "Observables (canonical order): nbar_q, t_ratio, eta_q, regime. Numeric\n"
        "observables are empty on non-valid cells; the regime label is total.\n"
        "Validity: valid | out_of_bounds | divergent | zero | unphysical, with the\n"
        "violated bound spelled out in the constraint column. Numbers carry 17\n"
        "significant digits; identical inputs emit byte-identical files. JSON is\n"
        "an array of record objects with keys in fixed order: case, inputs,\n"
        "validity, constraint, observables, diagonal (when applicable).\n"
        "\n"
        "Sweep config files are flat key = value lines ('#' comments):\n"
        "  case = multi_ground | two_excited | four_level\n"
        "  mode = grid | slices            (slices: each axis with the other at 0)\n"
        "  observables = eta_q,regime      (subset of the four observables)\n"
        "  fixed.<param> = <number>\n"
        "  axisN.param = <name>; axisN.values = v1,v2,... or axisN.min/max/steps\n"
        "Later keys override earlier ones; --set key=value appends overrides.\n"
        "See presets/*.sweep for the built-in figure recipes.");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Density-matrix positivity and bounds report");
    AtomOptions validate_atom;
    validate_atom.attach(validate_cmd);
    std::optional<double> validate_nbar;
    validate_cmd->add_option("--nbar", validate_nbar, "Bath occupation for the bounds report");

    // steady
    auto* steady_cmd = app.add_subcommand("steady", "Single-point steady state");
    AtomOptions steady_atom;
    steady_atom.attach(steady_cmd);
    std::optional<double> steady_nbar;
    steady_cmd->add_option("--nbar", steady_nbar,
                           "Bath occupation (default: reference nbar of the populations)");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "Integrate the mean-photon rate equation");
    double evolve_gain = 0.0, evolve_loss = 0.0, evolve_n0 = 0.0, evolve_tau_end = 0.0;
    std::optional<double> evolve_dtau;
    std::string evolve_out = "-";
    evolve_cmd->add_option("--gain", evolve_gain, "Emission coefficient A")->required();
    evolve_cmd->add_option("--loss", evolve_loss, "Absorption coefficient B")->required();
    evolve_cmd->add_option("--n0", evolve_n0, "Initial mean photon number")->required();
    evolve_cmd->add_option("--tau-end", evolve_tau_end, "Final reduced time")->required();
    evolve_cmd->add_option("--dtau", evolve_dtau, "Step size (default 0.01/(B-A))");
    evolve_cmd->add_option("-o,--output", evolve_out, "Destination CSV ('-' = stdout)");

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Birth-death steady-state cross-check with residual");
    AtomOptions oracle_atom;
    oracle_atom.attach(oracle_cmd);
    double oracle_tail_tol = 1e-12;
    oracle_cmd->add_option("--tail-tol", oracle_tail_tol, "Truncation tail tolerance");

    // efficiency
    auto* eff_cmd = app.add_subcommand("efficiency", "Quantum Carnot efficiency at one point");
    std::string eff_regime;
    std::optional<double> eff_eps_g, eff_chi, eff_nbar_c, eff_nbar_h, eff_nbar_eq, eff_t_hot,
        eff_t_cold;
    int eff_n_levels = 0;
    eff_cmd->add_option("--regime", eff_regime, "heating|cooling|single-bath")->required();
    eff_cmd->add_option("--eps-g", eff_eps_g, "Ground coherence parameter");
    eff_cmd->add_option("--chi", eff_chi, "Alternative: chi with --n-levels");
    eff_cmd->add_option("-N,--n-levels", eff_n_levels, "Ground levels (with --chi)");
    eff_cmd->add_option("--nbar-c", eff_nbar_c, "Cold bath occupation");
    eff_cmd->add_option("--nbar-h", eff_nbar_h, "Hot bath occupation");
    eff_cmd->add_option("--nbar-eq", eff_nbar_eq, "Single-bath occupation");
    eff_cmd->add_option("--t-hot", eff_t_hot, "Hot temperature (reduced units)");
    eff_cmd->add_option("--t-cold", eff_t_cold, "Cold temperature (reduced units)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep from a spec file");
    std::string sweep_spec_path;
    std::vector<std::string> sweep_sets;
    std::string sweep_out = "-", sweep_format = "csv";
    int sweep_jobs = 1;
    sweep_cmd->add_option("--spec", sweep_spec_path, "Sweep configuration file")->required();
    sweep_cmd->add_option("--set", sweep_sets, "Override a spec key (key=value, repeatable)");
    sweep_cmd->add_option("-o,--output", sweep_out, "Destination ('-' = stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv|json");
    sweep_cmd->add_option("-j,--jobs", sweep_jobs, "Worker threads");

    // figure
    auto* figure_cmd = app.add_subcommand("figure", "Emit a built-in figure dataset");
    std::string figure_name;
    std::string figure_out = "-", figure_format = "csv";
    int figure_jobs = 1;
    figure_cmd->add_option("preset", figure_name, "fig3a|fig3b|fig4a|fig4b")->required();
    figure_cmd->add_option("-o,--output", figure_out, "Destination ('-' = stdout)");
    figure_cmd->add_option("--format", figure_format, "csv|json");
    figure_cmd->add_option("-j,--jobs", figure_jobs, "Worker threads");

    try {
        app.parse(argc, argv);

        const auto parse_format = [](const std::string& text) {
            if (text == "csv") return EmitFormat::Csv;
            if (text == "json") return EmitFormat::Json;
            throw std::domain_error("unknown format '" + text + "'; expected csv or json");
        };

        if (validate_cmd->parsed()) return run_validate(validate_atom, validate_nbar);
        if (steady_cmd->parsed()) return run_steady(steady_atom, steady_nbar);

        if (evolve_cmd->parsed()) {
            const RateCoefficients coeffs = RateCoefficients::make(evolve_gain, evolve_loss);
            const double dtau = evolve_dtau ? *evolve_dtau : default_dtau(coeffs);
            const Trajectory traj = evolve_mean_photon(coeffs, evolve_n0, evolve_tau_end, dtau);
            write_trajectory(traj, evolve_out);
            if (traj.diverged)
                std::cerr << "note: no steady state (divergent pumping); trajectory capped\n";
            return 0;
        }

        if (oracle_cmd->parsed()) return run_oracle(oracle_atom, oracle_tail_tol);

        if (eff_cmd->parsed()) {
            double eps_g = 0.0;
            if (eff_eps_g) {
                eps_g = *eff_eps_g;
            } else if (eff_chi && eff_n_levels >= 1) {
                eps_g = *eff_chi * (eff_n_levels - 1);
            } else {
                throw std::domain_error("efficiency needs --eps-g or --chi with --n-levels");
            }
            if (eff_regime == "single-bath") {
                if (!eff_nbar_eq) throw std::domain_error("single-bath needs --nbar-eq");
                const double eta_q =
                    single_bath_quantum_efficiency(eps_g, MeanPhotonNumber::of(*eff_nbar_eq));
                std::cout << "eta = 0\n" << "eta_q = " << fmt(eta_q) << '\n';
                return 0;
            }
            if (eff_regime == "heating") {
                if (!eff_nbar_c || !eff_nbar_h)
                    throw std::domain_error("heating needs --nbar-c and --nbar-h");
                const MeanPhotonNumber nc = MeanPhotonNumber::of(*eff_nbar_c);
                const MeanPhotonNumber nh = MeanPhotonNumber::of(*eff_nbar_h);
                const double eta = carnot_efficiency(temperature_from_mean_photon(nc),
                                                     temperature_from_mean_photon(nh));
                const double eta_q = quantum_efficiency_heating(eps_g, nc, nh);
                std::cout << "eta = " << fmt(eta) << '\n' << "eta_q = " << fmt(eta_q) << '\n';
                return 0;
            }
            if (eff_regime == "cooling") {
                if (!eff_nbar_c || !eff_t_hot || !eff_t_cold)
                    throw std::domain_error("cooling needs --nbar-c, --t-hot and --t-cold");
                const ReducedTemperature th = ReducedTemperature::finite(*eff_t_hot);
                const ReducedTemperature tc = ReducedTemperature::finite(*eff_t_cold);
                const double eta = carnot_efficiency(tc, th);
                const double eta_q = quantum_efficiency_cooling(
                    eps_g, MeanPhotonNumber::of(*eff_nbar_c), th, tc);
                std::cout << "eta = " << fmt(eta) << '\n' << "eta_q = " << fmt(eta_q) << '\n';
                return 0;
            }
            throw std::domain_error("unknown regime '" + eff_regime +
                                    "'; expected heating, cooling or single-bath");
        }

        if (sweep_cmd->parsed()) {
            std::ifstream in(sweep_spec_path);
            if (!in) throw IoError("cannot open sweep file '" + sweep_spec_path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            KeyValues kv = parse_key_values(buffer.str());
            for (const std::string& assignment : sweep_sets) append_override(kv, assignment);
            const SweepSpec spec = spec_from_key_values(kv);
            const std::vector<SweepRecord> records = run_sweep(spec, sweep_jobs);
            emit(spec, records, parse_format(sweep_format), sweep_out);
            return 0;
        }

        if (figure_cmd->parsed()) {
            const SweepSpec spec = figure_preset(figure_name);
            const std::vector<SweepRecord> records = run_sweep(spec, figure_jobs);
            emit(spec, records, parse_format(figure_format), figure_out);
            return 0;
        }

        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
