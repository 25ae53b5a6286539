#include "xyness/sweep.hpp"

#include "xyness/csv.hpp"
#include "xyness/error.hpp"
#include "xyness/manifest.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace xyness {

using Clock = std::chrono::steady_clock;

namespace {
double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}
} // namespace

std::string to_string(Observable o) {
    switch (o) {
    case Observable::rapidities: return "rapidities";
    case Observable::gap: return "gap";
    case Observable::cmatrix: return "cmatrix";
    case Observable::profile: return "profile";
    case Observable::c_res: return "c_res";
    case Observable::magnetization: return "magnetization";
    case Observable::osee: return "osee";
    }
    return "unknown";
}

Observable parse_observable(std::string_view name) {
    for (Observable o : all_observables())
        if (to_string(o) == name) return o;
    throw ValidationError("unknown observable '" + std::string(name) + "'");
}

ObservableSet parse_observables(std::string_view list) {
    ObservableSet out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        std::string_view item = list.substr(start, comma == std::string_view::npos ? list.size() - start : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item == "all") {
            const auto all = all_observables();
            out.insert(all.begin(), all.end());
        } else if (!item.empty()) {
            out.insert(parse_observable(item));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

ObservableSet all_observables() {
    return {Observable::rapidities, Observable::gap,           Observable::cmatrix, Observable::profile,
            Observable::c_res,      Observable::magnetization, Observable::osee};
}

PointData compute_point(const ChainSpec& spec, const ObservableSet& obs, const PointOptions& opts) {
    PointData out;
    out.spec = validate_spec(spec);
    auto t0 = Clock::now();
    const StructureMatrix a = build_structure_matrix(spec);
    const NormalModeBasis basis = diagonalize(a);
    out.timings.emplace_back("diagonalize", seconds_since(t0));
    out.rapidities = basis.beta;
    for (int j : basis.ill_conditioned) {
        std::ostringstream os;
        os << "ill-conditioned normal-mode pair " << j << " (scale " << basis.pair_scale[std::size_t(j)] << ")";
        out.warnings.push_back(os.str());
    }
    out.gap = relaxation_gap(basis);

    const bool need_table = obs.count(Observable::cmatrix) || obs.count(Observable::profile) ||
                            obs.count(Observable::c_res) || obs.count(Observable::magnetization);
    if (need_table) {
        t0 = Clock::now();
        TwoPointTable table = two_point_table(basis);
        out.warnings.insert(out.warnings.end(), table.warnings.begin(), table.warnings.end());
        if (obs.count(Observable::magnetization)) out.magnetization = magnetization(table);
        if (obs.count(Observable::cmatrix) || obs.count(Observable::profile) || obs.count(Observable::c_res)) {
            CorrelationMatrix cm = spin_spin_matrix(table);
            if (obs.count(Observable::profile)) out.profile = distance_profile(cm, opts.band);
            if (obs.count(Observable::c_res) && cm.n >= 4) out.c_res = residual_correlator(cm);
            out.cmatrix = std::move(cm);
        }
        out.table = std::move(table);
        out.timings.emplace_back("observables", seconds_since(t0));
    }
    if (obs.count(Observable::osee)) {
        t0 = Clock::now();
        const int cut = opts.cut > 0 ? opts.cut : spec.n / 2;
        out.osee = osee(basis, cut);
        if (out.osee->cond_k > 1e8) {
            std::ostringstream os;
            os << "osee: concatenation condition number " << out.osee->cond_k;
            out.warnings.push_back(os.str());
        }
        out.timings.emplace_back("osee", seconds_since(t0));
    }
    return out;
}

std::string to_string(Axis a) {
    switch (a) {
    case Axis::h: return "h";
    case Axis::gamma: return "gamma";
    case Axis::n: return "n";
    }
    return "unknown";
}

// ----------------------------------------------------------------- config I/O

namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw ValidationError("field '" + field + "': " + what);
}

double number_field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) field_error(path + key, "missing");
    if (!obj.at(key).is_number()) field_error(path + key, "expected a number");
    return obj.at(key).get<double>();
}

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

SweepConfig parse_sweep_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ValidationError(line_column(text, e.byte) + ": malformed JSON (" + e.what() + ")");
    }
    if (!j.is_object()) field_error("<root>", "expected an object");
    static const std::set<std::string> known = {"base", "axes", "observables", "output", "workers", "band", "cut"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) field_error(key, "unknown key");

    SweepConfig cfg;
    if (!j.contains("base") || !j["base"].is_object()) field_error("base", "missing or not an object");
    const json& base = j["base"];
    const double n = number_field(base, "n", "base.");
    if (n != std::floor(n)) field_error("base.n", "expected an integer");
    cfg.base.n = static_cast<int>(n);
    cfg.base.gamma = number_field(base, "gamma", "base.");
    cfg.base.h = number_field(base, "h", "base.");
    cfg.base.gl1 = number_field(base, "gl1", "base.");
    cfg.base.gl2 = number_field(base, "gl2", "base.");
    cfg.base.gr1 = number_field(base, "gr1", "base.");
    cfg.base.gr2 = number_field(base, "gr2", "base.");

    if (j.contains("axes")) {
        if (!j["axes"].is_array()) field_error("axes", "expected an array");
        for (std::size_t k = 0; k < j["axes"].size(); ++k) {
            const json& ax = j["axes"][k];
            const std::string path = "axes[" + std::to_string(k) + "].";
            if (!ax.is_object()) field_error("axes[" + std::to_string(k) + "]", "expected an object");
            if (!ax.contains("name") || !ax["name"].is_string()) field_error(path + "name", "missing");
            AxisSpec spec;
            const std::string name = ax["name"];
            if (name == "h") spec.axis = Axis::h;
            else if (name == "gamma") spec.axis = Axis::gamma;
            else if (name == "n") spec.axis = Axis::n;
            else field_error(path + "name", "must be one of h, gamma, n");
            if (ax.contains("values")) {
                if (!ax["values"].is_array() || ax["values"].empty()) field_error(path + "values", "expected a non-empty array");
                for (const json& v : ax["values"]) {
                    if (!v.is_number()) field_error(path + "values", "expected numbers");
                    spec.values.push_back(v.get<double>());
                }
            } else {
                const double lo = number_field(ax, "min", path);
                const double hi = number_field(ax, "max", path);
                const double count = number_field(ax, "count", path);
                if (count < 1 || count != std::floor(count)) field_error(path + "count", "must be an integer >= 1");
                const int c = static_cast<int>(count);
                for (int i = 0; i < c; ++i)
                    spec.values.push_back(c == 1 ? lo : lo + (hi - lo) * double(i) / double(c - 1));
            }
            cfg.axes.push_back(std::move(spec));
        }
    }
    if (j.contains("observables")) {
        if (!j["observables"].is_array()) field_error("observables", "expected an array of names");
        for (const json& o : j["observables"]) {
            if (!o.is_string()) field_error("observables", "expected strings");
            try {
                cfg.observables.insert(parse_observable(o.get<std::string>()));
            } catch (const ValidationError& e) {
                field_error("observables", e.what());
            }
        }
    }
    if (j.contains("output")) {
        const json& out = j["output"];
        if (!out.is_object()) field_error("output", "expected an object");
        if (out.contains("dir")) {
            if (!out["dir"].is_string()) field_error("output.dir", "expected a string");
            cfg.output_dir = out["dir"].get<std::string>();
        }
        if (out.contains("format")) {
            if (!out["format"].is_string()) field_error("output.format", "expected a string");
            cfg.format = out["format"];
        }
    }
    if (j.contains("workers")) {
        const double w = number_field(j, "workers", "");
        if (w < 1 || w != std::floor(w)) field_error("workers", "must be an integer >= 1");
        cfg.workers = static_cast<int>(w);
    }
    if (j.contains("band")) cfg.point.band = number_field(j, "band", "");
    if (j.contains("cut")) {
        const double c = number_field(j, "cut", "");
        if (c < 0 || c != std::floor(c)) field_error("cut", "must be a non-negative integer");
        cfg.point.cut = static_cast<int>(c);
    }
    validate_config(cfg);
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sweep_config(ss.str());
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.axes.size() > 2) field_error("axes", "at most two axes");
    std::set<Axis> seen;
    for (std::size_t k = 0; k < cfg.axes.size(); ++k) {
        const std::string path = "axes[" + std::to_string(k) + "]";
        const AxisSpec& ax = cfg.axes[k];
        if (!seen.insert(ax.axis).second) field_error(path + ".name", "duplicate axis");
        if (ax.values.empty()) field_error(path, "axis count must be >= 1");
        if (ax.axis == Axis::n)
            for (double v : ax.values) {
                if (v != std::floor(v) || v < 2) field_error(path + ".values", "n must be an integer >= 2");
                if (cfg.observables.count(Observable::osee) && cfg.point.cut == 0 && int(v) % 2 != 0)
                    field_error(path + ".values", "n must be even when osee is requested");
            }
    }
    if (cfg.observables.count(Observable::osee) && cfg.point.cut == 0 && seen.count(Axis::n) == 0 &&
        cfg.base.n % 2 != 0)
        field_error("base.n", "n must be even when osee is requested");
    if (cfg.format != "csv" && cfg.format != "json") field_error("output.format", "must be csv or json");
    if (cfg.workers < 1) field_error("workers", "must be >= 1");
    if (!(cfg.point.band > 0.0 && cfg.point.band < 1.0)) field_error("band", "must lie in (0, 1)");
}

std::string config_to_json(const SweepConfig& cfg) {
    nlohmann::ordered_json j;
    j["base"] = {{"n", cfg.base.n},     {"gamma", cfg.base.gamma}, {"h", cfg.base.h},    {"gl1", cfg.base.gl1},
                 {"gl2", cfg.base.gl2}, {"gr1", cfg.base.gr1},     {"gr2", cfg.base.gr2}};
    j["axes"] = nlohmann::ordered_json::array();
    for (const AxisSpec& ax : cfg.axes) j["axes"].push_back({{"name", to_string(ax.axis)}, {"values", ax.values}});
    std::vector<std::string> names;
    for (Observable o : cfg.observables) names.push_back(to_string(o));
    j["observables"] = names;
    j["output"] = {{"dir", cfg.output_dir.string()}, {"format", cfg.format}};
    j["band"] = cfg.point.band;
    j["cut"] = cfg.point.cut;
    // workers affects scheduling only, never the numbers; it is left out of the hash input.
    return j.dump();
}

// ------------------------------------------------------------------ execution

std::vector<std::pair<std::vector<int>, ChainSpec>> expand_grid(const SweepConfig& cfg) {
    std::vector<std::pair<std::vector<int>, ChainSpec>> out;
    std::vector<int> counts;
    for (const AxisSpec& ax : cfg.axes) counts.push_back(static_cast<int>(ax.values.size()));
    std::size_t total = 1;
    for (int c : counts) total *= std::size_t(c);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<int> index(counts.size());
        std::size_t rest = flat;
        for (std::size_t k = counts.size(); k-- > 0;) {
            index[k] = static_cast<int>(rest % std::size_t(counts[k]));
            rest /= std::size_t(counts[k]);
        }
        ChainSpec s = cfg.base;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            const double v = cfg.axes[k].values[index[k]];
            switch (cfg.axes[k].axis) {
            case Axis::h: s.h = v; break;
            case Axis::gamma: s.gamma = v; break;
            case Axis::n: s.n = static_cast<int>(v); break;
            }
        }
        out.emplace_back(std::move(index), s);
    }
    return out;
}

namespace {

std::string point_stem(const std::vector<int>& index) {
    std::string s = "p";
    for (std::size_t k = 0; k < index.size(); ++k) s += (k ? "_" : "") + std::to_string(index[k]);
    if (index.empty()) s += "0";
    return s;
}

void write_sidecars(const std::filesystem::path& dir, const std::string& stem, const PointData& d,
                    const ObservableSet& obs) {
    if (obs.count(Observable::rapidities)) {
        csv::Writer w(dir / (stem + "_rapidities.csv"), {"index", "re_beta", "im_beta"});
        for (Eigen::Index j = 0; j < d.rapidities.size(); ++j)
            w.cell(int(j + 1)).cell(d.rapidities(j).real()).cell(d.rapidities(j).imag()).end_row();
        w.close();
    }
    if (obs.count(Observable::cmatrix) && d.cmatrix) {
        csv::Writer w(dir / (stem + "_cmatrix.csv"), {"l", "m", "c"});
        for (int l = 0; l < d.cmatrix->n; ++l)
            for (int m = 0; m < d.cmatrix->n; ++m) w.cell(l + 1).cell(m + 1).cell(d.cmatrix->c(l, m)).end_row();
        w.close();
    }
    if (obs.count(Observable::profile)) {
        csv::Writer w(dir / (stem + "_profile.csv"), {"r", "c", "count"});
        for (const ProfilePoint& p : d.profile) w.cell(p.r).cell(p.c).cell(p.count).end_row();
        w.close();
    }
    if (obs.count(Observable::magnetization)) {
        csv::Writer w(dir / (stem + "_magnetization.csv"), {"site", "sz"});
        for (std::size_t m = 0; m < d.magnetization.size(); ++m) w.cell(int(m + 1)).cell(d.magnetization[m]).end_row();
        w.close();
    }
}

SweepRow summarize(const std::vector<int>& index, const ChainSpec& spec, const PointData& d) {
    SweepRow row;
    row.index = index;
    row.spec = spec;
    row.theory = theory_point(spec.gamma, spec.h);
    row.gap = d.gap;
    row.min_re_beta = d.rapidities.size() ? d.rapidities.real().minCoeff() : std::nan("");
    row.c_res = d.c_res.value_or(std::nan(""));
    row.entropy = d.osee ? d.osee->entropy : std::nan("");
    row.cond_k = d.osee ? d.osee->cond_k : std::nan("");
    if (!d.magnetization.empty()) {
        double s = 0.0;
        for (double m : d.magnetization) s += m;
        row.mz_mean = s / double(d.magnetization.size());
    } else {
        row.mz_mean = std::nan("");
    }
    return row;
}

std::vector<std::string> table_header(const SweepResult& r) {
    std::vector<std::string> h;
    for (std::size_t k = 0; k < r.config.axes.size(); ++k) h.push_back("i" + std::to_string(k));
    for (const char* c : {"n", "gamma", "h", "gl1", "gl2", "gr1", "gr2", "h_c", "regime", "xi_theory", "status", "error"})
        h.push_back(c);
    const ObservableSet& obs = r.config.observables;
    if (obs.count(Observable::gap)) {
        h.push_back("delta");
        h.push_back("min_re_beta");
        h.push_back("unique");
    }
    if (obs.count(Observable::c_res)) h.push_back("c_res");
    if (obs.count(Observable::osee)) {
        h.push_back("entropy");
        h.push_back("cond_k");
    }
    if (obs.count(Observable::magnetization)) h.push_back("mz_mean");
    return h;
}

void write_table(const std::filesystem::path& path, const SweepResult& r) {
    csv::Writer w(path, table_header(r));
    const ObservableSet& obs = r.config.observables;
    const double nan = std::nan("");
    for (const SweepRow& row : r.rows) {
        for (int i : row.index) w.cell(i);
        w.cell(row.spec.n).cell(row.spec.gamma).cell(row.spec.h);
        w.cell(row.spec.gl1).cell(row.spec.gl2).cell(row.spec.gr1).cell(row.spec.gr2);
        w.cell(row.theory.h_c).cell(to_string(row.theory.regime));
        w.cell(row.theory.xi_infinite ? std::numeric_limits<double>::infinity() : row.theory.xi);
        w.cell(std::string(row.ok ? "ok" : "error")).cell(row.error);
        if (obs.count(Observable::gap)) {
            w.cell(row.ok ? row.gap.delta : nan).cell(row.ok ? row.min_re_beta : nan);
            w.cell(row.ok ? (row.gap.unique ? 1 : 0) : 0);
        }
        if (obs.count(Observable::c_res)) w.cell(row.ok ? row.c_res : nan);
        if (obs.count(Observable::osee)) w.cell(row.ok ? row.entropy : nan).cell(row.ok ? row.cond_k : nan);
        if (obs.count(Observable::magnetization)) w.cell(row.ok ? row.mz_mean : nan);
        w.end_row();
    }
    w.close();
}

void write_json_table(const std::filesystem::path& path, const SweepResult& r) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    auto num = [](double x) -> nlohmann::ordered_json {
        if (std::isfinite(x)) return x;
        return nullptr;
    };
    for (const SweepRow& row : r.rows) {
        nlohmann::ordered_json j;
        j["index"] = row.index;
        j["n"] = row.spec.n;
        j["gamma"] = row.spec.gamma;
        j["h"] = row.spec.h;
        j["rates"] = {row.spec.gl1, row.spec.gl2, row.spec.gr1, row.spec.gr2};
        j["h_c"] = row.theory.h_c;
        j["regime"] = to_string(row.theory.regime);
        j["xi_theory"] = row.theory.xi_infinite ? nlohmann::ordered_json(nullptr) : num(row.theory.xi);
        j["status"] = row.ok ? "ok" : "error";
        if (!row.ok) j["error"] = row.error;
        else {
            j["delta"] = num(row.gap.delta);
            j["min_re_beta"] = num(row.min_re_beta);
            j["unique"] = row.gap.unique;
            j["c_res"] = num(row.c_res);
            j["entropy"] = num(row.entropy);
            j["mz_mean"] = num(row.mz_mean);
        }
        rows.push_back(j);
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << std::setprecision(17) << rows.dump(1) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace

std::string sweep_table_csv(const SweepResult& r) {
    const auto tmp = std::filesystem::temp_directory_path() /
                     ("xyness_table_" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + ".csv");
    write_table(tmp, r);
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::filesystem::remove(tmp);
    return ss.str();
}

SweepResult run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    const auto t0 = Clock::now();
    SweepResult result;
    result.config = cfg;
    const std::string cfg_json = config_to_json(cfg);
    result.config_hash = fnv1a_hex(cfg_json);

    const auto grid = expand_grid(cfg);
    const std::filesystem::path sidecar_dir = cfg.output_dir.empty() ? std::filesystem::path() : cfg.output_dir / "points";
    const bool sidecars = !cfg.output_dir.empty() &&
                          (cfg.observables.count(Observable::rapidities) || cfg.observables.count(Observable::cmatrix) ||
                           cfg.observables.count(Observable::profile) || cfg.observables.count(Observable::magnetization));
    if (!cfg.output_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.output_dir, ec);
        if (ec) throw IoError("cannot create " + cfg.output_dir.string() + ": " + ec.message());
        if (sidecars) {
            std::filesystem::create_directories(sidecar_dir, ec);
            if (ec) throw IoError("cannot create " + sidecar_dir.string() + ": " + ec.message());
        }
    }

    result.rows.resize(grid.size());
    std::vector<std::vector<std::string>> warnings(grid.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr io_failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= grid.size()) return;
            const auto& [index, spec] = grid[k];
            try {
                const PointData d = compute_point(spec, cfg.observables, cfg.point);
                result.rows[k] = summarize(index, spec, d);
                for (const auto& w : d.warnings) warnings[k].push_back(point_stem(index) + ": " + w);
                if (sidecars) write_sidecars(sidecar_dir, point_stem(index), d, cfg.observables);
            } catch (const IoError&) {
                std::lock_guard lock(failure_mutex);
                if (!io_failure) io_failure = std::current_exception();
                return;
            } catch (const Error& e) {
                SweepRow row;
                row.index = index;
                row.spec = spec;
                row.ok = false;
                row.error = e.what();
                row.theory = theory_point(spec.gamma, spec.h);
                result.rows[k] = row;
            }
        }
    };
    const int nthreads = std::max(1, std::min<int>(cfg.workers, static_cast<int>(grid.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (io_failure) std::rethrow_exception(io_failure);
    for (auto& w : warnings) result.warnings.insert(result.warnings.end(), w.begin(), w.end());
    result.wall_seconds = seconds_since(t0);

    if (!cfg.output_dir.empty()) {
        if (cfg.format == "json") write_json_table(cfg.output_dir / "sweep.json", result);
        else write_table(cfg.output_dir / "sweep.csv", result);
        RunManifest m;
        m.command = "sweep";
        m.config_json = cfg_json;
        m.config_hash = result.config_hash;
        m.timings = {{"total", result.wall_seconds}};
        m.warnings = result.warnings;
        write_manifest(cfg.output_dir, m);
    }
    return result;
}

SizeScanResult run_size_scan(const SweepConfig& cfg) {
    if (cfg.axes.size() != 1 || cfg.axes[0].axis != Axis::n)
        throw ValidationError("field 'axes': size scan needs exactly one axis over n");
    const auto& ns = cfg.axes[0].values;
    for (std::size_t k = 1; k < ns.size(); ++k)
        if (!(ns[k] > ns[k - 1])) throw ValidationError("field 'axes[0].values': n list must increase");

    SweepConfig run_cfg = cfg;
    run_cfg.observables.insert(Observable::gap);
    SizeScanResult out;
    out.sweep = run_sweep(run_cfg);

    std::vector<double> xs, gaps;
    std::vector<OseeScalingPoint> entropies;
    for (const SweepRow& row : out.sweep.rows) {
        if (!row.ok) continue;
        if (row.min_re_beta > 0.0) {
            xs.push_back(row.spec.n);
            gaps.push_back(row.min_re_beta);
        }
        if (std::isfinite(row.entropy)) entropies.push_back({row.spec.n, row.entropy});
    }
    if (xs.size() >= 3) out.gap_fit = fit_power(xs, gaps);
    if (entropies.size() >= 4) out.osee_fit = fit_largest_half(entropies);

    if (!cfg.output_dir.empty()) {
        csv::Writer w(cfg.output_dir / "fits.csv",
                      {"quantity", "kind", "amplitude", "exponent", "r_squared", "npoints", "jackknife_error"});
        auto emit = [&](const char* name, const std::optional<FitResult>& f) {
            if (!f) return;
            w.cell(std::string(name)).cell(to_string(f->kind)).cell(f->amplitude).cell(f->exponent);
            w.cell(f->r_squared).cell(f->npoints).cell(f->jackknife_error).end_row();
        };
        emit("min_re_beta", out.gap_fit);
        emit("entropy", out.osee_fit);
        w.close();
    }
    return out;
}

} // namespace xyness
