#include "xyness_cli/commands.hpp"

#include "xyness/csv.hpp"
#include "xyness/error.hpp"
#include "xyness/manifest.hpp"
#include "xyness/oracle.hpp"
#include "xyness/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

namespace xyness::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct SpecFlags {
    ChainSpec spec{};
    void add(CLI::App& app, bool required) {
        app.set_help_flag("--help", "print help");
        auto* n = app.add_option("--n", spec.n, "number of spins");
        if (required) n->required();
        app.add_option("--gamma", spec.gamma, "anisotropy");
        app.add_option("--h", spec.h, "magnetic field");
        app.add_option("--gl1", spec.gl1, "left bath sigma^- rate");
        app.add_option("--gl2", spec.gl2, "left bath sigma^+ rate");
        app.add_option("--gr1", spec.gr1, "right bath sigma^- rate");
        app.add_option("--gr2", spec.gr2, "right bath sigma^+ rate");
    }
};

std::string spec_json(const ChainSpec& s) {
    nlohmann::ordered_json j = {{"n", s.n},     {"gamma", s.gamma}, {"h", s.h},    {"gl1", s.gl1},
                                {"gl2", s.gl2}, {"gr1", s.gr1},     {"gr2", s.gr2}};
    return j.dump();
}

// Maps library exceptions to exit codes; anything else propagates.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kNumerical;
    } catch (const FitError& e) {
        err << "error: " << e.what() << '\n';
        return kNumerical;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    }
}

// ---------------------------------------------------------------------- solve

struct SolveArgs {
    SpecFlags spec;
    std::string out;
    std::string observables{"all"};
    int cut{0};
    double band{0.08};
};

void write_solve_outputs(const std::filesystem::path& dir, const PointData& d, const ObservableSet& obs) {
    if (obs.count(Observable::rapidities) || obs.count(Observable::gap)) {
        csv::Writer w(dir / "rapidities.csv", {"index", "re_beta", "im_beta"});
        for (Eigen::Index j = 0; j < d.rapidities.size(); ++j)
            w.cell(int(j + 1)).cell(d.rapidities(j).real()).cell(d.rapidities(j).imag()).end_row();
        w.close();
    }
    if (d.cmatrix && obs.count(Observable::cmatrix)) {
        csv::Writer w(dir / "cmatrix.csv", {"l", "m", "c"});
        for (int l = 0; l < d.cmatrix->n; ++l)
            for (int m = 0; m < d.cmatrix->n; ++m) w.cell(l + 1).cell(m + 1).cell(d.cmatrix->c(l, m)).end_row();
        w.close();
    }
    if (obs.count(Observable::profile)) {
        csv::Writer w(dir / "profile.csv", {"r", "c", "count"});
        for (const ProfilePoint& p : d.profile) w.cell(p.r).cell(p.c).cell(p.count).end_row();
        w.close();
    }
    if (d.osee) {
        std::vector<std::string> header = {"cut", "entropy", "cond_k"};
        for (std::size_t i = 0; i < d.osee->eta.size(); ++i) header.push_back("eta_" + std::to_string(i + 1));
        csv::Writer w(dir / "osee.csv", header);
        w.cell(d.osee->cut).cell(d.osee->entropy).cell(d.osee->cond_k);
        for (double e : d.osee->eta) w.cell(e);
        w.end_row();
        w.close();
    }
    if (obs.count(Observable::magnetization)) {
        csv::Writer w(dir / "magnetization.csv", {"site", "sz"});
        for (std::size_t m = 0; m < d.magnetization.size(); ++m) w.cell(int(m + 1)).cell(d.magnetization[m]).end_row();
        w.close();
    }
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto t0 = Clock::now();
        const ObservableSet obs = parse_observables(a.observables);
        PointOptions opts;
        opts.band = a.band;
        opts.cut = a.cut;
        if (!(opts.band > 0.0 && opts.band < 1.0)) throw ValidationError("band must lie in (0, 1)");
        validate_spec(a.spec.spec);
        if (obs.count(Observable::osee) && (opts.cut < 0 || opts.cut >= a.spec.spec.n))
            throw ValidationError("cut must satisfy 1 <= cut < n");
        out << "solve: " << to_string(a.spec.spec) << '\n';
        const PointData d = compute_point(a.spec.spec, obs, opts);
        for (const auto& w : d.warnings) err << "warning: " << w << '\n';

        out << "gap: delta = " << csv::format_double(d.gap.delta) << '\n';
        if (d.c_res) out << "c_res: " << csv::format_double(*d.c_res) << '\n';
        if (d.osee) out << "osee: S(" << d.osee->cut << ") = " << csv::format_double(d.osee->entropy) << '\n';

        if (!a.out.empty()) {
            const std::filesystem::path dir(a.out);
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
            write_solve_outputs(dir, d, obs);
            nlohmann::ordered_json cfg;
            cfg["spec"] = nlohmann::ordered_json::parse(spec_json(a.spec.spec));
            std::vector<std::string> names;
            for (Observable o : obs) names.push_back(to_string(o));
            cfg["observables"] = names;
            cfg["cut"] = a.cut;
            cfg["band"] = a.band;
            RunManifest m;
            m.command = "solve";
            m.config_json = cfg.dump();
            m.config_hash = fnv1a_hex(m.config_json);
            m.timings = d.timings;
            m.timings.emplace_back("total", seconds_since(t0));
            m.warnings = d.warnings;
            write_manifest(dir, m);
            out << "wrote " << dir.string() << '\n';
        }
        return int(kOk);
    });
}

// ---------------------------------------------------------------------- sweep

struct SweepArgs {
    std::string config;
    std::string out;
    int workers{0};
    bool size_scan{false};
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SweepConfig cfg = load_sweep_config(a.config);
        if (!a.out.empty()) cfg.output_dir = a.out;
        cfg.workers = resolve_workers(a.workers, cfg.workers);
        std::size_t points = 1;
        for (const AxisSpec& ax : cfg.axes) points *= ax.values.size();
        out << (a.size_scan ? "size-scan: " : "sweep: ") << points << " points on " << cfg.workers << " worker(s)\n";

        SweepResult result;
        if (a.size_scan) {
            SizeScanResult scan = run_size_scan(cfg);
            if (scan.gap_fit)
                out << "gap fit: slope " << csv::format_double(-scan.gap_fit->exponent) << " over "
                    << scan.gap_fit->npoints << " sizes\n";
            if (scan.osee_fit)
                out << "osee fit: slope " << csv::format_double(scan.osee_fit->slope()) << " over "
                    << scan.osee_fit->npoints << " sizes\n";
            result = std::move(scan.sweep);
        } else {
            result = run_sweep(cfg);
        }
        for (const auto& w : result.warnings) err << "warning: " << w << '\n';
        std::size_t failed = 0;
        for (const SweepRow& r : result.rows) {
            if (r.ok) continue;
            ++failed;
            err << "point " << to_string(r.spec) << ": " << r.error << '\n';
        }
        out << "done: " << result.rows.size() - failed << " ok, " << failed << " error row(s) in "
            << std::setprecision(3) << result.wall_seconds << " s\n";
        if (!cfg.output_dir.empty()) out << "wrote " << cfg.output_dir.string() << '\n';
        return int(kOk);
    });
}

// --------------------------------------------------------------- oracle-check

struct OracleArgs {
    SpecFlags spec;
    int trials{10};
    unsigned long long seed{1};
    bool osee{false};
    double threshold{1e-6};
    std::string out;
    // Spec flags given explicitly pin that parameter; others are drawn at random.
    CLI::Option* gamma_opt{nullptr};
    CLI::Option* h_opt{nullptr};
    std::vector<CLI::Option*> rate_opts;
};

struct Deviation {
    double g{0.0}, c{0.0}, mz{0.0}, s{0.0};
    double max() const { return std::max({g, c, mz, s}); }
};

Deviation compare_with_oracle(const ChainSpec& spec, bool with_osee) {
    const oracle::DenseLiouvillean l = oracle::build_liouvillean(spec);
    const oracle::ExactNess ness = oracle::steady_state(l);
    const NormalModeBasis basis = diagonalize(build_structure_matrix(spec));
    const TwoPointTable table = two_point_table(basis);

    Deviation d;
    d.g = (table.g - oracle::two_point_reference(ness)).cwiseAbs().maxCoeff();
    d.c = (spin_spin_matrix(table).c - oracle::correlator_reference(ness)).cwiseAbs().maxCoeff();
    const std::vector<double> mz = magnetization(table);
    const std::vector<double> mz_ref = oracle::magnetization_reference(ness);
    for (std::size_t m = 0; m < mz.size(); ++m) d.mz = std::max(d.mz, std::abs(mz[m] - mz_ref[m]));
    if (with_osee) {
        const int cut = std::max(1, spec.n / 2);
        d.s = std::abs(osee(basis, cut).entropy - oracle::exact_osee(ness, cut));
    }
    return d;
}

int cmd_oracle_check(const OracleArgs& a, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto t0 = Clock::now();
        if (a.spec.spec.n > 5) throw ValidationError("n too large for oracle");
        if (a.spec.spec.n < 2) throw ValidationError("n < 2");
        if (a.trials < 1) throw ValidationError("trials must be >= 1");

        std::mt19937_64 rng(a.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::unique_ptr<csv::Writer> report;
        if (!a.out.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(a.out, ec);
            if (ec) throw IoError("cannot create " + a.out + ": " + ec.message());
            report = std::make_unique<csv::Writer>(
                std::filesystem::path(a.out) / "oracle_report.csv",
                std::vector<std::string>{"trial", "n", "gamma", "h", "gl1", "gl2", "gr1", "gr2", "dev_g", "dev_c",
                                         "dev_mz", "dev_s"});
        }

        Deviation worst_total;
        double worst = -1.0;
        ChainSpec worst_spec;
        for (int t = 0; t < a.trials; ++t) {
            ChainSpec s = a.spec.spec;
            // Draw all six numbers every trial so pinning one flag leaves the others' stream unchanged.
            const double g = unit(rng), h = 1.2 * unit(rng);
            const double r[4] = {unit(rng), unit(rng), unit(rng), unit(rng)};
            if (!a.gamma_opt->count()) s.gamma = g;
            if (!a.h_opt->count()) s.h = h;
            double* rates[4] = {&s.gl1, &s.gl2, &s.gr1, &s.gr2};
            for (int k = 0; k < 4; ++k)
                if (!a.rate_opts[std::size_t(k)]->count()) *rates[k] = r[k];
            validate_spec(s);

            const Deviation d = compare_with_oracle(s, a.osee);
            worst_total.g = std::max(worst_total.g, d.g);
            worst_total.c = std::max(worst_total.c, d.c);
            worst_total.mz = std::max(worst_total.mz, d.mz);
            worst_total.s = std::max(worst_total.s, d.s);
            if (d.max() > worst) {
                worst = d.max();
                worst_spec = s;
            }
            if (report) {
                report->cell(t + 1).cell(s.n).cell(s.gamma).cell(s.h).cell(s.gl1).cell(s.gl2).cell(s.gr1).cell(s.gr2);
                report->cell(d.g).cell(d.c).cell(d.mz).cell(a.osee ? d.s : std::nan("")).end_row();
            }
        }
        if (report) report->close();

        out << "oracle-check: n=" << a.spec.spec.n << ", " << a.trials << " trial(s), seed " << a.seed << '\n';
        out << "max |dG| = " << csv::format_double(worst_total.g) << '\n';
        out << "max |dC| = " << csv::format_double(worst_total.c) << '\n';
        out << "max |dMz| = " << csv::format_double(worst_total.mz) << '\n';
        if (a.osee) out << "max |dS| = " << csv::format_double(worst_total.s) << '\n';

        const bool pass = worst <= a.threshold;
        if (!a.out.empty()) {
            nlohmann::ordered_json cfg = {{"n", a.spec.spec.n}, {"trials", a.trials},       {"rng_seed", a.seed},
                                          {"osee", a.osee},     {"threshold", a.threshold}};
            RunManifest m;
            m.command = "oracle-check";
            m.config_json = cfg.dump();
            m.config_hash = fnv1a_hex(m.config_json);
            m.timings = {{"total", seconds_since(t0)}};
            m.exit_status = pass ? kOk : kOracleMismatch;
            write_manifest(a.out, m);
        }
        if (!pass) {
            err << "deviation " << csv::format_double(worst) << " above " << csv::format_double(a.threshold)
                << "; worst spec: " << spec_json(worst_spec) << '\n';
            return int(kOracleMismatch);
        }
        return int(kOk);
    });
}

} // namespace

int resolve_workers(int flag, int fallback) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("MAX_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return std::max(1, fallback);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"xyness: steady state of the boundary-driven open XY chain"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string());

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "solve one chain and write its observables");
    solve.spec.add(*solve_cmd, true);
    solve_cmd->add_option("--out", solve.out, "output directory");
    solve_cmd->add_option("--observables", solve.observables, "comma-separated list or 'all'");
    solve_cmd->add_option("--cut", solve.cut, "OSEE cut (default n/2)");
    solve_cmd->add_option("--band", solve.band, "distance-profile band width");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep from a JSON config");
    sweep_cmd->add_option("--config", sweep.config, "config file")->required();
    sweep_cmd->add_option("--out", sweep.out, "override output.dir");
    sweep_cmd->add_option("--workers", sweep.workers, "worker threads (overrides MAX_WORKERS)");
    sweep_cmd->add_flag("--size-scan", sweep.size_scan, "single n axis; also fit gap and OSEE scaling");

    SweepArgs scan;
    scan.size_scan = true;
    auto* scan_cmd = app.add_subcommand("size-scan", "alias for 'sweep --size-scan'");
    scan_cmd->add_option("--config", scan.config, "config file")->required();
    scan_cmd->add_option("--out", scan.out, "override output.dir");
    scan_cmd->add_option("--workers", scan.workers, "worker threads (overrides MAX_WORKERS)");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "compare the spectral pipeline with the dense oracle");
    oracle.spec.add(*oracle_cmd, true);
    oracle.gamma_opt = oracle_cmd->get_option("--gamma");
    oracle.h_opt = oracle_cmd->get_option("--h");
    for (const char* name : {"--gl1", "--gl2", "--gr1", "--gr2"}) oracle.rate_opts.push_back(oracle_cmd->get_option(name));
    oracle_cmd->add_option("--trials", oracle.trials, "number of random specs");
    oracle_cmd->add_option("--rng-seed", oracle.seed, "PRNG seed");
    oracle_cmd->add_flag("--osee", oracle.osee, "also compare the OSEE at cut n/2");
    oracle_cmd->add_option("--threshold", oracle.threshold, "pass threshold on max abs deviation");
    oracle_cmd->add_option("--out", oracle.out, "directory for oracle_report.csv and manifest.json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << version_string() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
    if (scan_cmd->parsed()) return cmd_sweep(scan, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle_check(oracle, out, err);
    return kUsage;
}

} // namespace xyness::cli
