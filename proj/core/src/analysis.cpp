#include "xyness/analysis.hpp"

#include "xyness/error.hpp"

#include <algorithm>
#include <cmath>

namespace xyness {

std::string to_string(FitKind kind) {
    switch (kind) {
    case FitKind::power: return "power";
    case FitKind::exponential: return "exponential";
    case FitKind::linear: return "linear";
    }
    return "unknown";
}

namespace {

struct Line {
    double intercept;
    double slope;
    double r_squared;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw FitError("degenerate abscissa");
    const double slope = sxy / sxx;
    double r2 = 1.0;
    if (syy > 0.0) r2 = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    return {my - slope * mx, slope, r2};
}

double jackknife_slope_error(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 4) return 0.0;
    std::vector<double> slopes;
    slopes.reserve(n);
    for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < n; ++i)
            if (i != skip) {
                xs.push_back(x[i]);
                ys.push_back(y[i]);
            }
        try {
            slopes.push_back(least_squares(xs, ys).slope);
        } catch (const FitError&) {
            return 0.0;
        }
    }
    double mean = 0.0;
    for (double s : slopes) mean += s;
    mean /= double(n);
    double var = 0.0;
    for (double s : slopes) var += (s - mean) * (s - mean);
    return std::sqrt(var * double(n - 1) / double(n));
}

enum class Transform { log_log, lin_log };

FitResult fit_transformed(std::span<const double> xs, std::span<const double> ys, FitWindow window, double floor,
                          Transform tr, FitKind kind) {
    if (xs.size() != ys.size()) throw FitError("length mismatch");
    std::vector<double> x, y;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < window.lo || xs[i] > window.hi) continue;
        if (std::abs(ys[i]) < floor) continue;
        if (!(ys[i] > 0.0)) throw FitError("nonpositive data");
        if (tr == Transform::log_log && !(xs[i] > 0.0)) throw FitError("nonpositive data");
        x.push_back(tr == Transform::log_log ? std::log(xs[i]) : xs[i]);
        y.push_back(std::log(ys[i]));
    }
    if (x.size() < 3) throw FitError("empty window");
    const Line line = least_squares(x, y);
    FitResult out;
    out.kind = kind;
    out.amplitude = std::exp(line.intercept);
    out.exponent = -line.slope;
    out.r_squared = line.r_squared;
    out.window = window;
    out.npoints = static_cast<int>(x.size());
    out.jackknife_error = jackknife_slope_error(x, y);
    return out;
}

} // namespace

FitResult fit_power(std::span<const double> xs, std::span<const double> ys, FitWindow window, double floor) {
    return fit_transformed(xs, ys, window, floor, Transform::log_log, FitKind::power);
}

FitResult fit_exponential(std::span<const double> xs, std::span<const double> ys, FitWindow window,
                          double floor) {
    return fit_transformed(xs, ys, window, floor, Transform::lin_log, FitKind::exponential);
}

FitResult fit_linear(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw FitError("length mismatch");
    if (xs.size() < 3) throw FitError("empty window");
    const std::vector<double> x(xs.begin(), xs.end()), y(ys.begin(), ys.end());
    const Line line = least_squares(x, y);
    FitResult out;
    out.kind = FitKind::linear;
    out.amplitude = line.intercept;
    out.exponent = line.slope;
    out.r_squared = line.r_squared;
    out.window = {*std::min_element(x.begin(), x.end()), *std::max_element(x.begin(), x.end())};
    out.npoints = static_cast<int>(x.size());
    out.jackknife_error = jackknife_slope_error(x, y);
    return out;
}

namespace {

struct LogCurve {
    std::vector<double> lx; // log(r/n), ascending
    std::vector<double> ly; // log(|C|)
    double log_n;
};

LogCurve to_log_curve(const ScaledProfile& p, double rmin) {
    LogCurve curve;
    curve.log_n = std::log(double(p.n));
    for (std::size_t i = 0; i < p.r.size() && i < p.c.size(); ++i) {
        if (p.r[i] < rmin || std::abs(p.c[i]) < kDecayFloor) continue;
        curve.lx.push_back(std::log(p.r[i] / double(p.n)));
        curve.ly.push_back(std::log(std::abs(p.c[i])));
    }
    return curve;
}

double interpolate(const LogCurve& c, double lx) {
    auto it = std::lower_bound(c.lx.begin(), c.lx.end(), lx);
    if (it == c.lx.begin()) return c.ly.front();
    if (it == c.lx.end()) return c.ly.back();
    const std::size_t i = static_cast<std::size_t>(it - c.lx.begin());
    const double t = (lx - c.lx[i - 1]) / (c.lx[i] - c.lx[i - 1]);
    return c.ly[i - 1] + t * (c.ly[i] - c.ly[i - 1]);
}

// Sum of squared deviations (without the nu term) split as a quadratic in nu:
// dev = nu * (log n_a - log n_b) + (ya - yb).
struct Quadratic {
    double a{0.0}, b{0.0}, c{0.0};
    long count{0};
    double at(double nu) const { return count ? (a * nu * nu + b * nu + c) / double(count) : 0.0; }
};

Quadratic collapse_quadratic(const std::vector<ScaledProfile>& profiles, double rmin) {
    if (profiles.size() < 2) throw FitError("collapse needs at least two profiles");
    std::vector<LogCurve> curves;
    for (const auto& p : profiles) {
        curves.push_back(to_log_curve(p, rmin));
        if (curves.back().lx.size() < 2) throw FitError("no common support");
    }
    Quadratic q;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            const LogCurve& ci = curves[i];
            const LogCurve& cj = curves[j];
            const double lo = std::max(ci.lx.front(), cj.lx.front());
            const double hi = std::min(ci.lx.back(), cj.lx.back());
            if (!(lo < hi)) continue;
            const double dn = ci.log_n - cj.log_n;
            auto accumulate = [&](const LogCurve& own, const LogCurve& other, double sign) {
                for (std::size_t k = 0; k < own.lx.size(); ++k) {
                    if (own.lx[k] < lo || own.lx[k] > hi) continue;
                    const double dy = sign * (own.ly[k] - interpolate(other, own.lx[k]));
                    q.a += dn * dn;
                    q.b += 2.0 * dn * dy;
                    q.c += dy * dy;
                    ++q.count;
                }
            };
            accumulate(ci, cj, 1.0);
            accumulate(cj, ci, -1.0);
        }
    if (q.count == 0) throw FitError("no common support");
    return q;
}

} // namespace

double collapse_mismatch(const std::vector<ScaledProfile>& profiles, double nu, double rmin) {
    return collapse_quadratic(profiles, rmin).at(nu);
}

CollapseResult collapse_check(const std::vector<ScaledProfile>& profiles, double nu,
                              std::span<const double> nu_grid, double rmin) {
    const Quadratic q = collapse_quadratic(profiles, rmin);
    CollapseResult out;
    out.mismatch = q.at(nu);
    out.best_nu = nu;
    out.best_mismatch = out.mismatch;
    for (double candidate : nu_grid) {
        const double m = q.at(candidate);
        if (m < out.best_mismatch) {
            out.best_mismatch = m;
            out.best_nu = candidate;
        }
    }
    return out;
}

} // namespace xyness
