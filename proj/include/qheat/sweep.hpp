#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qheat/steady_state.hpp"

namespace qheat {

enum class ConfigCase { MultiGround, TwoExcited, FourLevel };
enum class Observable { NbarQ, TRatio, EtaQ, RegimeLabel };
enum class AxisMode { Grid, Slices };
enum class EmitFormat { Csv, Json };

const char* to_string(ConfigCase c);
const char* to_string(Observable o);

// Malformed sweep configuration; the message carries the offending field path.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Output destination failure (CLI exit code 2).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepAxis {
    std::string param;
    std::vector<double> values; // materialized grid points
};

// Inclusive uniform grid; endpoints are exact. steps >= 2.
std::vector<double> uniform_grid(double min, double max, int steps);

// One sweep: a configuration, fixed parameters, one or two swept axes and
// the observables to record.
//
// Parameters per configuration:
//   multi_ground: nbar, chi, n_levels   (n_levels = 1 is the classical,
//                                        coherence-free point)
//   two_excited:  nbar, eps_e
//   four_level:   nbar, eps_g, eps_e
//
// Axis modes:
//   grid   - Cartesian product, enumerated row-major (axis1 outer).
//   slices - each axis swept on its own with the other axis parameter held
//            at 0 (axis1 rows first); requires exactly two axes.
struct SweepSpec {
    ConfigCase config = ConfigCase::MultiGround;
    std::vector<std::pair<std::string, double>> fixed;
    std::vector<SweepAxis> axes;
    std::vector<Observable> observables;
    AxisMode mode = AxisMode::Grid;

    // Throws ConfigError naming the offending field.
    void validate() const;
};

struct Validity {
    enum class Kind { Valid, OutOfBounds, Divergent, Zero, Unphysical };
    Kind kind = Kind::Valid;
    std::string constraint; // names the violated bound when not Valid

    bool is_valid() const { return kind == Kind::Valid; }
};

const char* to_string(Validity::Kind k);

// One grid point. Numeric observables are present iff the cell is Valid;
// the regime label is a total classification and is recorded for every cell
// when requested. `diagonal` marks cancellation-line cells on
// two-coherence-axis grids: "on" when |eps_g - eps_e| <= 1e-12, "straddle"
// when the grid cell spans the diagonal, empty otherwise.
struct SweepRecord {
    std::vector<std::pair<std::string, double>> inputs;
    Validity validity;
    std::optional<double> nbar_q;
    std::optional<double> t_ratio;
    std::optional<double> eta_q;
    std::optional<Regime> regime;
    std::string diagonal;
};

bool operator==(const SweepRecord& a, const SweepRecord& b);

// Evaluates every grid point; records appear in row-major axis order and are
// independent of the evaluation schedule. Invalid cells are recorded, never
// dropped. n_threads > 1 fans the cells out across workers (results are
// identical to the serial run).
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int n_threads = 1);

// Built-in figure recipes (fig3a, fig3b, fig4a, fig4b); equivalent config
// files live under presets/. Unknown names raise a domain error listing the
// available presets.
SweepSpec figure_preset(const std::string& name);
std::vector<std::string> figure_preset_names();

// Flat key-value sweep configuration (one sweep per file):
//   case = multi_ground | two_excited | four_level
//   mode = grid | slices
//   observables = nbar_q,t_ratio,eta_q,regime
//   fixed.<param> = <number>
//   axisN.param = <name>           (N = 1 or 2)
//   axisN.min/max/steps = <range>  or  axisN.values = v1,v2,...
// '#' starts a comment. Later keys override earlier ones, which is how CLI
// --set flags are applied.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

KeyValues parse_key_values(const std::string& text);
void append_override(KeyValues& kv, const std::string& assignment); // "key=value"
SweepSpec spec_from_key_values(const KeyValues& kv);
SweepSpec parse_sweep_file(const std::string& path);

// Emission. CSV: header row, fixed column order (case, inputs, validity,
// constraint, observables, diagonal where applicable), LF line endings,
// numbers at 17 significant digits; identical inputs yield byte-identical
// output. JSON: array of record objects with keys in fixed order.
std::vector<std::string> csv_columns(const SweepSpec& spec);
void emit_csv(const SweepSpec& spec, const std::vector<SweepRecord>& records,
              std::ostream& out);
void emit_json(const SweepSpec& spec, const std::vector<SweepRecord>& records,
               std::ostream& out);
// destination "-" writes to standard output; I/O failures raise IoError.
void emit(const SweepSpec& spec, const std::vector<SweepRecord>& records, EmitFormat format,
          const std::string& destination);

// Inverse of emit_json (used for round-trip checks and downstream tooling).
std::vector<SweepRecord> records_from_json(const std::string& text);

}  // namespace qheat
