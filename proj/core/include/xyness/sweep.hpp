// sweep.hpp: Single-point evaluation and deterministic parameter sweeps

#pragma once

#include "xyness/analysis.hpp"
#include "xyness/model.hpp"
#include "xyness/observables.hpp"
#include "xyness/osee.hpp"
#include "xyness/spectral.hpp"
#include "xyness/theory.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xyness {

enum class Observable { rapidities, gap, cmatrix, profile, c_res, magnetization, osee };
using ObservableSet = std::set<Observable>;

std::string to_string(Observable o);
// Throws ValidationError for unknown names.
Observable parse_observable(std::string_view name);
ObservableSet parse_observables(std::string_view comma_separated);
ObservableSet all_observables();

struct PointOptions {
    double band{0.08}; // distance-profile band
    int cut{0};        // OSEE cut; 0 means n/2
};

// Everything computed for one spec. Fields for observables that were not
// requested stay empty.
struct PointData {
    ChainSpec spec;
    Eigen::VectorXcd rapidities;
    GapReport gap;
    std::optional<TwoPointTable> table;
    std::optional<CorrelationMatrix> cmatrix;
    std::vector<ProfilePoint> profile;
    std::optional<double> c_res;
    std::vector<double> magnetization;
    std::optional<OseeResult> osee;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, double>> timings;
};

PointData compute_point(const ChainSpec& spec, const ObservableSet& observables, const PointOptions& opts = {});

enum class Axis { h, gamma, n };
std::string to_string(Axis a);

struct AxisSpec {
    Axis axis{Axis::h};
    std::vector<double> values;
};

struct SweepConfig {
    ChainSpec base;
    std::vector<AxisSpec> axes; // at most 2, row-major (axis 0 outermost)
    ObservableSet observables;
    std::filesystem::path output_dir; // empty: compute only
    std::string format{"csv"};        // "csv" or "json"
    int workers{1};
    PointOptions point;
};

// Parses the JSON config schema documented in docs/sweep-config.md. Errors are
// ValidationError with a "line L, column C" or "field '<path>'" prefix.
SweepConfig parse_sweep_config(std::string_view json_text);
SweepConfig load_sweep_config(const std::filesystem::path& path);
void validate_config(const SweepConfig& cfg);
std::string config_to_json(const SweepConfig& cfg);

struct SweepRow {
    std::vector<int> index;
    ChainSpec spec;
    bool ok{true};
    std::string error;
    TheoryPoint theory;
    GapReport gap;
    double min_re_beta{0.0};
    double c_res{0.0};
    double entropy{0.0};
    double cond_k{0.0};
    double mz_mean{0.0};
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
    std::string config_hash;
    double wall_seconds{0.0};
    std::vector<std::string> warnings;
};

// Grid points in row-major order.
std::vector<std::pair<std::vector<int>, ChainSpec>> expand_grid(const SweepConfig& cfg);

// Evaluates every grid point on `cfg.workers` threads; rows come back in grid
// order. Per-point validation/numerical failures become error rows. When
// output_dir is set, writes sweep.csv (or sweep.json), sidecars under points/
// and manifest.json. Throws IoError on write failures.
SweepResult run_sweep(const SweepConfig& cfg);

std::string sweep_table_csv(const SweepResult& result);

struct SizeScanResult {
    SweepResult sweep;
    std::optional<FitResult> gap_fit;  // power law of min Re beta vs n
    std::optional<FitResult> osee_fit; // S vs n over the largest half of sizes
};

// Requires exactly one axis, over n, strictly increasing. Also writes fits.csv.
SizeScanResult run_size_scan(const SweepConfig& cfg);

} // namespace xyness
