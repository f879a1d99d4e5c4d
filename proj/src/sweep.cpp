#include "qheat/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "qheat/engine.hpp"

#include <json.hpp>

namespace qheat {

namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr const char* kPresetNames[] = {"fig3a", "fig3b", "fig4a", "fig4b"};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Canonical parameter order per configuration; defines input column order.
const std::vector<std::string>& case_params(ConfigCase c) {
    static const std::vector<std::string> multi{"nbar", "chi", "n_levels"};
    static const std::vector<std::string> excited{"nbar", "eps_e"};
    static const std::vector<std::string> four{"nbar", "eps_g", "eps_e"};
    switch (c) {
        case ConfigCase::MultiGround: return multi;
        case ConfigCase::TwoExcited: return excited;
        case ConfigCase::FourLevel: return four;
    }
    return four;
}

const std::vector<Observable>& canonical_observables() {
    static const std::vector<Observable> all{Observable::NbarQ, Observable::TRatio,
                                             Observable::EtaQ, Observable::RegimeLabel};
    return all;
}

bool requested(const SweepSpec& spec, Observable o) {
    return std::find(spec.observables.begin(), spec.observables.end(), o) !=
           spec.observables.end();
}

bool diagonal_marker_applies(const SweepSpec& spec) {
    if (spec.config != ConfigCase::FourLevel) return false;
    if (spec.mode != AxisMode::Grid || spec.axes.size() != 2) return false;
    const std::set<std::string> params{spec.axes[0].param, spec.axes[1].param};
    return params == std::set<std::string>{"eps_g", "eps_e"};
}

int integral_value(double v, const std::string& path) {
    const double r = std::round(v);
    if (!std::isfinite(v) || std::abs(v - r) > 1e-9)
        throw ConfigError(path + ": expected an integer, got " + fmt17(v));
    return static_cast<int>(r);
}

}  // namespace

const char* to_string(ConfigCase c) {
    switch (c) {
        case ConfigCase::MultiGround: return "multi_ground";
        case ConfigCase::TwoExcited: return "two_excited";
        case ConfigCase::FourLevel: return "four_level";
    }
    return "four_level";
}

const char* to_string(Observable o) {
    switch (o) {
        case Observable::NbarQ: return "nbar_q";
        case Observable::TRatio: return "t_ratio";
        case Observable::EtaQ: return "eta_q";
        case Observable::RegimeLabel: return "regime";
    }
    return "regime";
}

const char* to_string(Validity::Kind k) {
    switch (k) {
        case Validity::Kind::Valid: return "valid";
        case Validity::Kind::OutOfBounds: return "out_of_bounds";
        case Validity::Kind::Divergent: return "divergent";
        case Validity::Kind::Zero: return "zero";
        case Validity::Kind::Unphysical: return "unphysical";
    }
    return "valid";
}

std::vector<double> uniform_grid(double min, double max, int steps) {
    if (steps < 2) throw ConfigError("uniform_grid: steps must be >= 2");
    if (!(min < max)) throw ConfigError("uniform_grid: requires min < max");
    std::vector<double> values(steps);
    const double h = (max - min) / (steps - 1);
    for (int k = 0; k < steps; ++k) values[k] = (k == steps - 1) ? max : min + k * h;
    return values;
}

void SweepSpec::validate() const {
    const auto& params = case_params(config);
    const auto is_param = [&](const std::string& name) {
        return std::find(params.begin(), params.end(), name) != params.end();
    };

    if (axes.empty() || axes.size() > 2)
        throw ConfigError("axes: expected 1 or 2 swept axes");
    if (mode == AxisMode::Slices && axes.size() != 2)
        throw ConfigError("mode: slices requires exactly 2 axes");

    std::set<std::string> provided;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const std::string path = "axis" + std::to_string(i + 1);
        const SweepAxis& axis = axes[i];
        if (!is_param(axis.param))
            throw ConfigError(path + ".param: '" + axis.param + "' is not a parameter of case " +
                              to_string(config));
        if (!provided.insert(axis.param).second)
            throw ConfigError(path + ".param: '" + axis.param + "' swept twice");
        if (axis.values.empty()) throw ConfigError(path + ": no grid values");
        if (mode == AxisMode::Slices && (axis.param == "nbar" || axis.param == "n_levels"))
            throw ConfigError(path + ".param: slices mode sweeps coherence parameters only");
        for (double v : axis.values) {
            if (!std::isfinite(v)) throw ConfigError(path + ".values: non-finite value");
            if (axis.param == "nbar" && !(v > 0.0))
                throw ConfigError(path + ".values: nbar must be > 0");
            if (axis.param == "n_levels" && integral_value(v, path + ".values") < 1)
                throw ConfigError(path + ".values: n_levels must be >= 1");
        }
    }

    for (const auto& [name, value] : fixed) {
        if (!is_param(name))
            throw ConfigError("fixed." + name + ": not a parameter of case " +
                              std::string(to_string(config)));
        if (provided.count(name))
            throw ConfigError("fixed." + name + ": parameter is already swept by an axis");
        provided.insert(name);
        if (!std::isfinite(value)) throw ConfigError("fixed." + name + ": non-finite value");
        if (name == "nbar" && !(value > 0.0))
            throw ConfigError("fixed.nbar: must be > 0");
        if (name == "n_levels" && integral_value(value, "fixed.n_levels") < 1)
            throw ConfigError("fixed.n_levels: must be >= 1");
    }

    for (const std::string& name : params) {
        if (!provided.count(name))
            throw ConfigError("missing parameter '" + name + "': add fixed." + name +
                              " or sweep it as an axis");
    }

    if (observables.empty()) throw ConfigError("observables: at least one required");
    if (requested(*this, Observable::EtaQ) && config != ConfigCase::MultiGround)
        throw ConfigError("observables: eta_q requires case multi_ground "
                          "(single-bath ground-state-coherence efficiency)");
}

namespace {

struct CellPoint {
    std::map<std::string, double> params;
    double step_eps_g = 0.0; // forward cell extent, straddle marker only
    double step_eps_e = 0.0;
};

// Flat row-major cell enumeration shared by the serial and threaded paths.
std::vector<CellPoint> enumerate_cells(const SweepSpec& spec) {
    std::vector<CellPoint> cells;
    const auto base_params = [&] {
        std::map<std::string, double> p;
        for (const auto& [name, value] : spec.fixed) p[name] = value;
        return p;
    }();

    const auto forward_step = [](const SweepAxis& axis, std::size_t k) {
        return k + 1 < axis.values.size() ? axis.values[k + 1] - axis.values[k] : 0.0;
    };

    if (spec.mode == AxisMode::Slices) {
        for (std::size_t active = 0; active < spec.axes.size(); ++active) {
            const SweepAxis& axis = spec.axes[active];
            const SweepAxis& other = spec.axes[1 - active];
            for (double v : axis.values) {
                CellPoint cell;
                cell.params = base_params;
                cell.params[axis.param] = v;
                cell.params[other.param] = 0.0;
                cells.push_back(std::move(cell));
            }
        }
        return cells;
    }

    if (spec.axes.size() == 1) {
        const SweepAxis& axis = spec.axes[0];
        for (double v : axis.values) {
            CellPoint cell;
            cell.params = base_params;
            cell.params[axis.param] = v;
            cells.push_back(std::move(cell));
        }
        return cells;
    }

    const SweepAxis& outer = spec.axes[0];
    const SweepAxis& inner = spec.axes[1];
    const bool mark = diagonal_marker_applies(spec);
    for (std::size_t i = 0; i < outer.values.size(); ++i) {
        for (std::size_t j = 0; j < inner.values.size(); ++j) {
            CellPoint cell;
            cell.params = base_params;
            cell.params[outer.param] = outer.values[i];
            cell.params[inner.param] = inner.values[j];
            if (mark) {
                const double outer_step = forward_step(outer, i);
                const double inner_step = forward_step(inner, j);
                if (outer.param == "eps_g") {
                    cell.step_eps_g = outer_step;
                    cell.step_eps_e = inner_step;
                } else {
                    cell.step_eps_e = outer_step;
                    cell.step_eps_g = inner_step;
                }
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

std::string diagonal_marker(double eps_g, double eps_e, double step_g, double step_e) {
    if (std::abs(eps_g - eps_e) <= kCancellationTolerance) return "on";
    const double lo = eps_g - eps_e - step_e;
    const double hi = eps_g + step_g - eps_e;
    if (lo < 0.0 && hi > 0.0) return "straddle";
    return "";
}

SweepRecord evaluate_cell(const SweepSpec& spec, const CellPoint& cell) {
    SweepRecord rec;
    for (const std::string& name : case_params(spec.config))
        rec.inputs.emplace_back(name, cell.params.at(name));

    const MeanPhotonNumber nbar{cell.params.at("nbar")};

    // Coherence parameters of the cell (defined for every cell, including
    // out-of-bounds ones, so the total regime classification stays available).
    double eps_g = 0.0;
    double eps_e = 0.0;
    switch (spec.config) {
        case ConfigCase::MultiGround: {
            const int n = static_cast<int>(std::llround(cell.params.at("n_levels")));
            if (n >= 2) eps_g = cell.params.at("chi") * (n - 1);
            break;
        }
        case ConfigCase::TwoExcited: eps_e = cell.params.at("eps_e"); break;
        case ConfigCase::FourLevel:
            eps_g = cell.params.at("eps_g");
            eps_e = cell.params.at("eps_e");
            break;
    }

    // Bound screening: configuration-level coherence bounds first, then the
    // steady-state boundary tags.
    if (spec.config == ConfigCase::MultiGround) {
        const int n = static_cast<int>(std::llround(cell.params.at("n_levels")));
        if (n >= 2) {
            const double chi = cell.params.at("chi");
            const CoherenceBounds bounds = chi_bounds(n, nbar);
            if (!(chi > bounds.lower)) {
                rec.validity = {Validity::Kind::OutOfBounds,
                                "chi <= -1/((N-1)*(nbar+1)) (steady-state positivity bound)"};
            } else if (chi > bounds.upper) {
                rec.validity = {Validity::Kind::OutOfBounds, "chi > 1 (PSD upper bound)"};
            }
        }
    } else {
        if (eps_e < -1.0)
            rec.validity = {Validity::Kind::OutOfBounds, "eps_e < -1 (PSD lower bound)"};
        else if (eps_e > 1.0)
            rec.validity = {Validity::Kind::OutOfBounds, "eps_e > 1 (PSD upper bound)"};
        else if (eps_g < -1.0)
            rec.validity = {Validity::Kind::OutOfBounds, "eps_g < -1 (PSD lower bound)"};
        else if (eps_g > 1.0)
            rec.validity = {Validity::Kind::OutOfBounds, "eps_g > 1 (PSD upper bound)"};
    }

    if (rec.validity.is_valid()) {
        const PhotonSteadyState photon = steady_photon_number(eps_g, eps_e, nbar);
        switch (photon.tag) {
            case PhotonSteadyState::Tag::Divergent:
                rec.validity = {Validity::Kind::Divergent, photon.constraint};
                break;
            case PhotonSteadyState::Tag::Unphysical:
                rec.validity = {Validity::Kind::Unphysical, photon.constraint};
                break;
            case PhotonSteadyState::Tag::Finite:
                if (photon.nbar_q == 0.0) {
                    rec.validity = {Validity::Kind::Zero, ""};
                } else {
                    if (requested(spec, Observable::NbarQ)) rec.nbar_q = photon.nbar_q;
                    if (requested(spec, Observable::TRatio)) {
                        const double theta_bath = temperature_from_mean_photon(nbar).theta;
                        const double theta_q =
                            temperature_from_mean_photon(MeanPhotonNumber{photon.nbar_q}).theta;
                        rec.t_ratio = theta_q / theta_bath;
                    }
                    if (requested(spec, Observable::EtaQ))
                        rec.eta_q = single_bath_quantum_efficiency(eps_g, nbar);
                }
                break;
        }
    }

    if (requested(spec, Observable::RegimeLabel))
        rec.regime = classify_regime(eps_g, eps_e, nbar);

    if (diagonal_marker_applies(spec))
        rec.diagonal = diagonal_marker(eps_g, eps_e, cell.step_eps_g, cell.step_eps_e);

    return rec;
}

}  // namespace

bool operator==(const SweepRecord& a, const SweepRecord& b) {
    return a.inputs == b.inputs && a.validity.kind == b.validity.kind &&
           a.validity.constraint == b.validity.constraint && a.nbar_q == b.nbar_q &&
           a.t_ratio == b.t_ratio && a.eta_q == b.eta_q && a.regime == b.regime &&
           a.diagonal == b.diagonal;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int n_threads) {
    spec.validate();
    const std::vector<CellPoint> cells = enumerate_cells(spec);
    std::vector<SweepRecord> records(cells.size());

    const std::size_t total = cells.size();
    const std::size_t workers =
        std::min<std::size_t>(std::max(n_threads, 1), std::max<std::size_t>(total, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) records[i] = evaluate_cell(spec, cells[i]);
        return records;
    }

    // Contiguous chunks; cells are pure and independent, so any schedule
    // yields the serial result.
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, w, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    records[i] = evaluate_cell(spec, cells[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return records;
}

std::vector<std::string> figure_preset_names() {
    return {std::begin(kPresetNames), std::end(kPresetNames)};
}

SweepSpec figure_preset(const std::string& name) {
    SweepSpec spec;
    if (name == "fig3a") {
        // Single-bath heating efficiency vs N for negative chi.
        spec.config = ConfigCase::MultiGround;
        spec.fixed = {{"nbar", 0.5}};
        std::vector<double> n_axis;
        for (int n = 2; n <= 30; ++n) n_axis.push_back(n);
        spec.axes = {{"chi", {-0.01, -0.03, -0.05}}, {"n_levels", n_axis}};
        spec.observables = {Observable::EtaQ};
        return spec;
    }
    if (name == "fig3b") {
        // Single-bath cooling efficiency vs N for positive chi; N = 1 is the
        // coherence-free starting point.
        spec.config = ConfigCase::MultiGround;
        spec.fixed = {{"nbar", 5.0}};
        std::vector<double> n_axis;
        for (int n = 1; n <= 30; ++n) n_axis.push_back(n);
        spec.axes = {{"chi", {0.2, 0.6, 1.0}}, {"n_levels", n_axis}};
        spec.observables = {Observable::EtaQ};
        return spec;
    }
    if (name == "fig4a") {
        // Temperature ratio along the two coherence axes, swept separately
        // over their physical ranges [-1/(nbar+1), 1] and [-1, 1/nbar].
        spec.config = ConfigCase::FourLevel;
        spec.mode = AxisMode::Slices;
        spec.fixed = {{"nbar", 5.0}};
        spec.axes = {{"eps_g", uniform_grid(-1.0 / 6.0, 1.0, 701)},
                     {"eps_e", uniform_grid(-1.0, 0.2, 601)}};
        spec.observables = {Observable::NbarQ, Observable::TRatio};
        return spec;
    }
    if (name == "fig4b") {
        // Heating/cooling/cancellation map over the coherence plane.
        spec.config = ConfigCase::FourLevel;
        spec.fixed = {{"nbar", 5.0}};
        spec.axes = {{"eps_g", uniform_grid(-1.0, 1.0, 201)},
                     {"eps_e", uniform_grid(-1.0, 0.2, 201)}};
        spec.observables = {Observable::TRatio, Observable::RegimeLabel};
        return spec;
    }
    std::ostringstream msg;
    msg << "unknown figure preset '" << name << "'; available:";
    for (const char* preset : kPresetNames) msg << ' ' << preset;
    throw std::domain_error(msg.str());
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    if (!s.empty() && s.back() == sep) parts.push_back("");
    return parts;
}

double parse_double(const std::string& text, const std::string& path) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(path + ": expected a number, got '" + text + "'");
    }
}

int parse_int(const std::string& text, const std::string& path) {
    return integral_value(parse_double(text, path), path);
}

}  // namespace

KeyValues parse_key_values(const std::string& text) {
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        kv.emplace_back(key, value);
    }
    return kv;
}

void append_override(KeyValues& kv, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override '" + assignment + "': expected key=value");
    kv.emplace_back(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

SweepSpec spec_from_key_values(const KeyValues& kv) {
    // Later entries override earlier ones (file order, then CLI overrides).
    std::map<std::string, std::string> flat;
    for (const auto& [key, value] : kv) flat[key] = value;

    std::set<std::string> consumed;
    const auto lookup = [&](const std::string& key) -> const std::string* {
        const auto it = flat.find(key);
        if (it == flat.end()) return nullptr;
        consumed.insert(key);
        return &it->second;
    };

    SweepSpec spec;

    const std::string* case_text = lookup("case");
    if (!case_text) throw ConfigError("case: required (multi_ground|two_excited|four_level)");
    if (*case_text == "multi_ground") spec.config = ConfigCase::MultiGround;
    else if (*case_text == "two_excited") spec.config = ConfigCase::TwoExcited;
    else if (*case_text == "four_level") spec.config = ConfigCase::FourLevel;
    else
        throw ConfigError("case: expected multi_ground, two_excited or four_level, got '" +
                          *case_text + "'");

    if (const std::string* mode_text = lookup("mode")) {
        if (*mode_text == "grid") spec.mode = AxisMode::Grid;
        else if (*mode_text == "slices") spec.mode = AxisMode::Slices;
        else throw ConfigError("mode: expected grid or slices, got '" + *mode_text + "'");
    }

    const std::string* obs_text = lookup("observables");
    if (!obs_text)
        throw ConfigError("observables: required (subset of nbar_q,t_ratio,eta_q,regime)");
    for (const std::string& word : split(*obs_text, ',')) {
        bool known = false;
        for (Observable o : canonical_observables()) {
            if (word == to_string(o)) {
                if (!requested(spec, o)) spec.observables.push_back(o);
                known = true;
                break;
            }
        }
        if (!known)
            throw ConfigError("observables: unknown observable '" + word + "'");
    }
    // Canonical order regardless of the order written in the file.
    std::sort(spec.observables.begin(), spec.observables.end());

    for (const std::string& name : case_params(spec.config)) {
        if (const std::string* value = lookup("fixed." + name))
            spec.fixed.emplace_back(name, parse_double(*value, "fixed." + name));
    }

    for (int n = 1; n <= 2; ++n) {
        const std::string prefix = "axis" + std::to_string(n);
        const std::string* param = lookup(prefix + ".param");
        const std::string* values = lookup(prefix + ".values");
        const std::string* min = lookup(prefix + ".min");
        const std::string* max = lookup(prefix + ".max");
        const std::string* steps = lookup(prefix + ".steps");
        if (!param) {
            if (values || min || max || steps)
                throw ConfigError(prefix + ".param: required when " + prefix + " keys are set");
            continue;
        }
        SweepAxis axis;
        axis.param = *param;
        if (values && (min || max || steps))
            throw ConfigError(prefix + ": give either values or min/max/steps, not both");
        if (values) {
            for (const std::string& item : split(*values, ','))
                axis.values.push_back(parse_double(item, prefix + ".values"));
        } else {
            if (!min || !max || !steps)
                throw ConfigError(prefix + ": min, max and steps are all required");
            axis.values = uniform_grid(parse_double(*min, prefix + ".min"),
                                       parse_double(*max, prefix + ".max"),
                                       parse_int(*steps, prefix + ".steps"));
        }
        spec.axes.push_back(std::move(axis));
    }

    for (const auto& [key, value] : flat) {
        if (!consumed.count(key)) throw ConfigError("unknown key '" + key + "'");
    }

    spec.validate();
    return spec;
}

SweepSpec parse_sweep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sweep file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return spec_from_key_values(parse_key_values(buffer.str()));
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string observable_field(const SweepRecord& rec, Observable o) {
    switch (o) {
        case Observable::NbarQ: return rec.nbar_q ? fmt17(*rec.nbar_q) : "";
        case Observable::TRatio: return rec.t_ratio ? fmt17(*rec.t_ratio) : "";
        case Observable::EtaQ: return rec.eta_q ? fmt17(*rec.eta_q) : "";
        case Observable::RegimeLabel: return rec.regime ? to_string(*rec.regime) : "";
    }
    return "";
}

}  // namespace

std::vector<std::string> csv_columns(const SweepSpec& spec) {
    std::vector<std::string> cols{"case"};
    for (const std::string& name : case_params(spec.config)) cols.push_back(name);
    cols.push_back("validity");
    cols.push_back("constraint");
    for (Observable o : canonical_observables())
        if (requested(spec, o)) cols.push_back(to_string(o));
    if (diagonal_marker_applies(spec)) cols.push_back("diagonal");
    return cols;
}

void emit_csv(const SweepSpec& spec, const std::vector<SweepRecord>& records,
              std::ostream& out) {
    const std::vector<std::string> cols = csv_columns(spec);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    const bool mark = diagonal_marker_applies(spec);
    for (const SweepRecord& rec : records) {
        out << to_string(spec.config);
        for (const auto& [name, value] : rec.inputs) out << ',' << fmt17(value);
        out << ',' << to_string(rec.validity.kind);
        out << ',' << csv_escape(rec.validity.constraint);
        for (Observable o : canonical_observables())
            if (requested(spec, o)) out << ',' << observable_field(rec, o);
        if (mark) out << ',' << rec.diagonal;
        out << '\n';
    }
}

void emit_json(const SweepSpec& spec, const std::vector<SweepRecord>& records,
               std::ostream& out) {
    OrderedJson array = OrderedJson::array();
    for (const SweepRecord& rec : records) {
        OrderedJson obj;
        obj["case"] = to_string(spec.config);
        OrderedJson inputs = OrderedJson::object();
        for (const auto& [name, value] : rec.inputs) inputs[name] = value;
        obj["inputs"] = std::move(inputs);
        obj["validity"] = to_string(rec.validity.kind);
        obj["constraint"] = rec.validity.constraint;
        OrderedJson observables = OrderedJson::object();
        if (rec.nbar_q) observables["nbar_q"] = *rec.nbar_q;
        if (rec.t_ratio) observables["t_ratio"] = *rec.t_ratio;
        if (rec.eta_q) observables["eta_q"] = *rec.eta_q;
        if (rec.regime) observables["regime"] = to_string(*rec.regime);
        obj["observables"] = std::move(observables);
        if (!rec.diagonal.empty()) obj["diagonal"] = rec.diagonal;
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
}

void emit(const SweepSpec& spec, const std::vector<SweepRecord>& records, EmitFormat format,
          const std::string& destination) {
    const auto write = [&](std::ostream& out) {
        if (format == EmitFormat::Csv) emit_csv(spec, records, out);
        else emit_json(spec, records, out);
        if (!out) throw IoError("write failed for '" + destination + "'");
    };
    if (destination == "-") {
        write(std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("write to standard output failed");
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw IoError("cannot open '" + destination + "' for writing");
    write(out);
    out.close();
    if (!out) throw IoError("write failed for '" + destination + "'");
}

std::vector<SweepRecord> records_from_json(const std::string& text) {
    const OrderedJson array = OrderedJson::parse(text);
    std::vector<SweepRecord> records;
    for (const OrderedJson& obj : array) {
        SweepRecord rec;
        for (const auto& [name, value] : obj.at("inputs").items())
            rec.inputs.emplace_back(name, value.get<double>());
        const std::string validity = obj.at("validity").get<std::string>();
        bool known = false;
        for (Validity::Kind kind :
             {Validity::Kind::Valid, Validity::Kind::OutOfBounds, Validity::Kind::Divergent,
              Validity::Kind::Zero, Validity::Kind::Unphysical}) {
            if (validity == to_string(kind)) {
                rec.validity.kind = kind;
                known = true;
                break;
            }
        }
        if (!known) throw ConfigError("records_from_json: unknown validity '" + validity + "'");
        rec.validity.constraint = obj.at("constraint").get<std::string>();
        const OrderedJson& observables = obj.at("observables");
        if (observables.contains("nbar_q")) rec.nbar_q = observables["nbar_q"].get<double>();
        if (observables.contains("t_ratio")) rec.t_ratio = observables["t_ratio"].get<double>();
        if (observables.contains("eta_q")) rec.eta_q = observables["eta_q"].get<double>();
        if (observables.contains("regime")) {
            const std::string word = observables["regime"].get<std::string>();
            bool found = false;
            for (Regime r : {Regime::Heating, Regime::Cooling, Regime::Cancellation,
                             Regime::Unphysical}) {
                if (word == to_string(r)) {
                    rec.regime = r;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw ConfigError("records_from_json: unknown regime '" + word + "'");
        }
        if (obj.contains("diagonal")) rec.diagonal = obj["diagonal"].get<std::string>();
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace qheat
