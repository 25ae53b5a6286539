// Acceptance run: one PASS/FAIL line per criterion. Arguments select a subset
// of criteria by number (default: all). Exit status 1 if any selected line fails.

#include "xyness/analysis.hpp"
#include "xyness/error.hpp"
#include "xyness/linalg.hpp"
#include "xyness/observables.hpp"
#include "xyness/oracle.hpp"
#include "xyness/osee.hpp"
#include "xyness/spectral.hpp"
#include "xyness/sweep.hpp"
#include "xyness/theory.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace xyness;

namespace {

using Clock = std::chrono::steady_clock;

ChainSpec driven(int n, double gamma, double h) { return {n, gamma, h, 0.5, 0.3, 0.5, 0.1}; }

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail, double seconds, double budget) {
    const bool in_time = seconds <= budget;
    const bool ok = pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] %s: %s (%.1f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str(), seconds,
                budget);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ------------------------------------------------------------ 1: oracle gate

void criterion_1() {
    constexpr double kTol = 1e-6;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double dev_g = 0, dev_c = 0, dev_mz = 0, dev_s = 0;
    int osee_checked = 0;
    for (int n : {2, 3, 4}) {
        for (int t = 0; t < 20; ++t) {
            const ChainSpec s{n, u(rng), 1.2 * u(rng), u(rng), u(rng), u(rng), u(rng)};
            const auto ness = oracle::steady_state(oracle::build_liouvillean(s));
            const NormalModeBasis b = diagonalize(build_structure_matrix(s));
            const TwoPointTable tab = two_point_table(b);
            dev_g = std::max(dev_g, (tab.g - oracle::two_point_reference(ness)).cwiseAbs().maxCoeff());
            dev_c = std::max(dev_c,
                             (spin_spin_matrix(tab).c - oracle::correlator_reference(ness)).cwiseAbs().maxCoeff());
            const auto mz = magnetization(tab);
            const auto mz_ref = oracle::magnetization_reference(ness);
            for (int m = 0; m < n; ++m) dev_mz = std::max(dev_mz, std::abs(mz[m] - mz_ref[m]));
            if (n == 4 && t < 10) {
                for (int cut = 1; cut < n; ++cut)
                    dev_s = std::max(dev_s, std::abs(osee(b, cut).entropy - oracle::exact_osee(ness, cut)));
                ++osee_checked;
            }
        }
    }
    const double worst = std::max({dev_g, dev_c, dev_mz, dev_s});
    char buf[256];
    std::snprintf(buf, sizeof buf, "max dev G %.1e, C %.1e, Mz %.1e, S %.1e (%d OSEE specs); tol %.0e", dev_g, dev_c,
                  dev_mz, dev_s, osee_checked, kTol);
    report("1 oracle equivalence n=2,3,4", worst <= kTol, buf, elapsed(t0), 120);
}

// ----------------------------------------------------- 2: spectrum from modes

void criterion_2() {
    constexpr double kTol = 1e-7;
    std::vector<ChainSpec> specs = {driven(2, 0.5, 0.3), driven(2, 0.5, 0.9), driven(3, 0.5, 0.75), driven(3, 0.3, 0.2)};
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 4; ++k) specs.push_back({2 + k % 2, u(rng), 1.2 * u(rng), u(rng), u(rng), u(rng), u(rng)});

    auto t0 = Clock::now();
    double full = 0.0, even = 0.0;
    for (const ChainSpec& s : specs) {
        const auto l = oracle::build_liouvillean(s);
        const NormalModeBasis b = diagonalize(build_structure_matrix(s));
        full = std::max(full, linalg::multiset_distance(mode_sum_spectrum(b), oracle::spectrum(l)));
        even = std::max(even, linalg::multiset_distance(mode_sum_spectrum(b, ParitySector::even),
                                                        oracle::sector_spectrum(l, true)));
    }
    const double dt = elapsed(t0);
    report("2 full 4^n spectrum from rapidities, n=2,3", full <= kTol,
           fmt("max multiset distance %.2e", full) + fmt("; tol %.0e", kTol), dt, 60);
    report("2 even-parity sector from rapidities, n=2,3", even <= kTol,
           fmt("max multiset distance %.2e", even) + fmt("; tol %.0e", kTol), dt, 60);
}

// ------------------------------------------------------ 3: identity steady state

void criterion_3() {
    const auto t0 = Clock::now();
    const std::vector<ChainSpec> specs = {
        {8, 0.5, 0.3, 0.4, 0.4, 0.2, 0.2},
        {40, 0.2, 0.9, 0.7, 0.7, 0.7, 0.7},
        {160, 0.5, 0.75, 0.5, 0.5, 0.1, 0.1},
        {320, 0.5, 0.6, 0.3, 0.3, 0.5, 0.5},
    };
    double c = 0, mz = 0, s = 0;
    for (const ChainSpec& spec : specs) {
        const PointData d = compute_point(spec, {Observable::cmatrix, Observable::magnetization, Observable::osee});
        c = std::max(c, d.cmatrix->c.cwiseAbs().maxCoeff());
        for (double m : d.magnetization) mz = std::max(mz, std::abs(m));
        s = std::max(s, d.osee->entropy);
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "max|C| %.1e, max|Mz| %.1e, S %.1e; tol 1e-8 / 1e-8 / 1e-7", c, mz, s);
    report("3 equal rates give the identity state, n<=320", c <= 1e-8 && mz <= 1e-8 && s <= 1e-7, buf, elapsed(t0), 60);
}

// --------------------------------------------------- 4, 5: profile decay fits

std::pair<std::vector<double>, std::vector<double>> abs_profile(const ChainSpec& s) {
    const PointData d = compute_point(s, {Observable::profile});
    std::vector<double> r, c;
    for (const ProfilePoint& p : d.profile) {
        r.push_back(p.r);
        c.push_back(std::abs(p.c));
    }
    return {r, c};
}

void criterion_4() {
    constexpr double kRelTol = 0.15;
    const auto t0 = Clock::now();
    const int n = 320;
    bool pass = true;
    std::string detail;
    for (double h : {0.76, 0.77}) {
        const auto [r, c] = abs_profile(driven(n, 0.5, h));
        const FitResult f = fit_exponential(r, c, {8.0, n / 4.0}, kDecayFloor);
        const double xi = f.decay_length();
        const double ref = theory_point(0.5, h).xi;
        const double rel = std::abs(xi - ref) / ref;
        pass = pass && rel <= kRelTol;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%sh=%.2f xi %.3f vs %.3f (%.1f%%, %d pts)", detail.empty() ? "" : "; ", h, xi,
                      ref, 100 * rel, f.npoints);
        detail += buf;
    }
    report("4 correlation length vs 1/(4 acosh(h/h_c)), n=320", pass, detail + "; tol 15%", elapsed(t0), 600);
}

void criterion_5() {
    const auto t0 = Clock::now();
    const auto [r, c] = abs_profile(driven(320, 0.5, 0.75));
    const FitResult f = fit_power(r, c, {8.0, 80.0}, kDecayFloor);
    report("5 critical power law at h=h_c, n=320, r in [8,80]", f.exponent >= 3.5 && f.exponent <= 4.5,
           fmt("exponent %.3f", f.exponent) + fmt(" (jackknife %.3f); window [3.5, 4.5]", f.jackknife_error),
           elapsed(t0), 300);
}

// --------------------------------------------------------------- 6: gap scaling

void criterion_6() {
    const auto t0 = Clock::now();
    const std::vector<double> ns = {40, 80, 160, 320};
    auto slope = [&](double h) {
        std::vector<double> gaps;
        for (double n : ns) {
            const NormalModeBasis b = diagonalize(build_structure_matrix(driven(int(n), 0.5, h)));
            gaps.push_back(b.beta.real().minCoeff());
        }
        return -fit_power(ns, gaps).exponent;
    };
    const double s09 = slope(0.9), s075 = slope(0.75);
    const bool pass = std::abs(s09 + 3.0) <= 0.3 && std::abs(s075 + 5.0) <= 0.5;
    char buf[200];
    std::snprintf(buf, sizeof buf, "slope h=0.9 %.3f (want -3 +- 0.3), h=0.75 %.3f (want -5 +- 0.5)", s09, s075);
    report("6 gap scaling of min Re beta, n=40..320", pass, buf, elapsed(t0), 900);
}

// ---------------------------------------------------------------- 7: OSEE growth

void criterion_7() {
    const auto t0 = Clock::now();
    std::vector<int> ns;
    for (int n = 40; n <= 320; n += 40) ns.push_back(n);
    auto entropies = [&](double h) {
        std::vector<OseeScalingPoint> pts;
        for (int n : ns) pts.push_back({n, osee(diagonalize(build_structure_matrix(driven(n, 0.5, h))), n / 2).entropy});
        return pts;
    };
    std::map<double, double> slope;
    for (double h : {0.55, 0.6, 0.65, 0.7, 0.9}) slope[h] = fit_largest_half(entropies(h)).slope();
    const double dt = elapsed(t0);

    report("7 OSEE grows linearly at h=0.6", slope[0.6] > 0.01, fmt("slope %.4f; want > 0.01", slope[0.6]), dt, 1800);
    report("7 OSEE saturates at h=0.9", std::abs(slope[0.9]) < 0.002,
           fmt("slope %.2e; want |slope| < 0.002", slope[0.9]), dt, 1800);

    std::vector<double> dh, s;
    std::string values;
    for (double h : {0.55, 0.6, 0.65, 0.7}) {
        dh.push_back(0.75 - h);
        s.push_back(slope[h]);
        values += fmt(" %.4f", slope[h]);
    }
    double tau = std::nan("");
    try {
        tau = -fit_power(dh, s).exponent;
    } catch (const FitError&) {
    }
    report("7 slope exponent vs h_c-h over h=0.55..0.7", tau >= 0.6 && tau <= 1.0,
           fmt("tau %.3f", tau) + " from slopes" + values + "; window [0.6, 1.0]", dt, 1800);
}

// ------------------------------------------------------------- 8: phase diagram

void criterion_8() {
    const auto t0 = Clock::now();
    SweepConfig cfg;
    cfg.base = driven(80, 0.5, 0.5);
    const int count = 50;
    AxisSpec g{Axis::gamma, {}}, h{Axis::h, {}};
    for (int k = 0; k < count; ++k) {
        g.values.push_back(1.0 * k / (count - 1));
        h.values.push_back(1.2 * k / (count - 1));
    }
    cfg.axes = {g, h};
    cfg.observables = {Observable::c_res};
    if (const char* w = std::getenv("MAX_WORKERS")) cfg.workers = std::max(1, std::atoi(w));
    const SweepResult r = run_sweep(cfg);

    int errors = 0, positive = 0;
    double worst_positive = 0.0, worst_gamma = 0.0, worst_h = 0.0;
    std::vector<std::vector<double>> grid(count, std::vector<double>(count, std::nan("")));
    for (const SweepRow& row : r.rows) {
        if (!row.ok) {
            ++errors;
            continue;
        }
        grid[row.index[0]][row.index[1]] = row.c_res;
        if (std::abs(row.c_res) > 1e-10 && row.c_res > 0) {
            ++positive;
            if (row.c_res > worst_positive) {
                worst_positive = row.c_res;
                worst_gamma = row.spec.gamma;
                worst_h = row.spec.h;
            }
        }
    }
    const double dt = elapsed(t0);
    report("8 C_res negative wherever |C_res| > 1e-10 (50x50, n=80)", positive == 0 && errors == 0,
           std::to_string(positive) + " positive cells (max " + fmt("%.1e", worst_positive) + fmt(" at gamma=%.3f", worst_gamma) +
               fmt(" h=%.3f", worst_h) + "), " +
               std::to_string(errors) + " error rows",
           dt, 3600);

    // Contour: per gamma column, the largest h at which |C_res| is still within
    // two decades of the column maximum.
    const double dh = 1.2 / (count - 1);
    double worst_cells = 0.0;
    int columns = 0;
    for (int i = 0; i < count; ++i) {
        const double gamma = g.values[i];
        if (gamma < 0.3 - 1e-12 || gamma > 0.9 + 1e-12) continue;
        double peak = 0.0;
        for (int j = 0; j < count; ++j)
            if (std::isfinite(grid[i][j])) peak = std::max(peak, std::abs(grid[i][j]));
        int last = -1;
        for (int j = 0; j < count; ++j)
            if (std::isfinite(grid[i][j]) && std::abs(grid[i][j]) >= peak / 100.0) last = j;
        if (last < 0) continue;
        ++columns;
        worst_cells = std::max(worst_cells, std::abs(h.values[last] - critical_field(gamma)) / dh);
    }
    report("8 two-decade contour of |C_res| tracks 1-gamma^2, gamma in [0.3,0.9]", columns > 0 && worst_cells <= 2.0,
           fmt("worst offset %.2f cells", worst_cells) + " over " + std::to_string(columns) + " columns; tol 2 cells",
           dt, 3600);
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    auto want = [&](int k) { return selected.empty() || selected.count(k) > 0; };
    const std::vector<void (*)()> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                              criterion_5, criterion_6, criterion_7, criterion_8};
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (!want(int(k + 1))) continue;
        try {
            criteria[k]();
        } catch (const std::exception& e) {
            report(std::to_string(k + 1), false, std::string("exception: ") + e.what(), 0.0, 0.0);
        }
    }
    std::printf("%d failing line(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
