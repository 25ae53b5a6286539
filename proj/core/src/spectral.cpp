#include "xyness/spectral.hpp"

#include "xyness/error.hpp"
#include "xyness/linalg.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace xyness {

using cd = std::complex<double>;

namespace {

struct Pair {
    Eigen::Index plus;
    Eigen::Index minus;
};

// Greedy +/- matching: walk eigenvalues sorted by (Im, Re) and match each
// unmatched value with the unmatched candidate minimizing |b + b'|.
std::vector<Pair> pair_eigenvalues(const Eigen::VectorXcd& ev, double tol, double imag_tol) {
    const Eigen::Index n = ev.size();
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        if (ev(i).imag() != ev(j).imag()) return ev(i).imag() < ev(j).imag();
        if (ev(i).real() != ev(j).real()) return ev(i).real() < ev(j).real();
        return i < j;
    });
    std::vector<bool> used(n, false);
    std::vector<Pair> pairs;
    pairs.reserve(n / 2);
    for (Eigen::Index i : order) {
        if (used[i]) continue;
        used[i] = true;
        double best = std::numeric_limits<double>::infinity();
        Eigen::Index arg = -1;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (used[k]) continue;
            const double d = std::abs(ev(i) + ev(k));
            if (d < best) {
                best = d;
                arg = k;
            }
        }
        if (arg < 0 || best > tol)
            throw NumericalError("pairing failure: eigenvalue " + std::to_string(ev(i).real()) + "+" +
                                 std::to_string(ev(i).imag()) + "i has no partner");
        used[arg] = true;
        const cd a = ev(i), b = ev(arg);
        bool i_is_plus;
        if (std::abs(a.real() - b.real()) <= 2.0 * imag_tol) i_is_plus = a.imag() >= b.imag();
        else i_is_plus = a.real() > b.real();
        pairs.push_back(i_is_plus ? Pair{i, arg} : Pair{arg, i});
    }
    return pairs;
}

cd bilinear(const Eigen::Ref<const Eigen::VectorXcd>& x, const Eigen::Ref<const Eigen::VectorXcd>& y) {
    return (x.transpose() * y)(0, 0);
}

} // namespace

NormalModeBasis diagonalize(const StructureMatrix& a, const SpectralOptions& opts) {
    NormalModeBasis basis = diagonalize(a.a, opts);
    basis.n = a.n;
    return basis;
}

NormalModeBasis diagonalize(const Eigen::MatrixXcd& a, const SpectralOptions& opts) {
    if (a.rows() != a.cols() || a.rows() % 4 != 0)
        throw NumericalError("diagonalize: matrix must be 4n x 4n");
    const Eigen::Index dim = a.rows();
    const Eigen::Index modes = dim / 2;

    NormalModeBasis out;
    out.n = static_cast<int>(dim / 4);
    out.norm_a = linalg::spectral_norm(a);
    const double scale = std::max(out.norm_a, std::numeric_limits<double>::min());

    const linalg::EigenDecomposition dec = linalg::eig(a);
    const std::vector<Pair> pairs = pair_eigenvalues(dec.values, opts.pairing_tol * scale, opts.imaginary_tol);

    // Deterministic mode order: by (Im beta, Re beta) of the "+" member.
    std::vector<Eigen::Index> mode_order(modes);
    std::iota(mode_order.begin(), mode_order.end(), 0);
    std::stable_sort(mode_order.begin(), mode_order.end(), [&](Eigen::Index i, Eigen::Index j) {
        const cd a1 = dec.values(pairs[i].plus), a2 = dec.values(pairs[j].plus);
        if (a1.imag() != a2.imag()) return a1.imag() < a2.imag();
        return a1.real() < a2.real();
    });

    out.beta.resize(modes);
    out.v.resize(dim, dim);
    for (Eigen::Index j = 0; j < modes; ++j) {
        const Pair& p = pairs[mode_order[j]];
        out.beta(j) = dec.values(p.plus);
        out.v.col(2 * j) = dec.vectors.col(p.plus);
        out.v.col(2 * j + 1) = dec.vectors.col(p.minus);
    }

    // Degenerate clusters of "+" rapidities; the "-" partners form the matching
    // cluster. Within a cluster, re-bi-orthogonalize by modified Gram-Schmidt
    // under the bilinear form with full pivoting.
    out.pair_scale.assign(modes, 1.0);
    std::vector<bool> done(modes, false);
    for (Eigen::Index j = 0; j < modes; ++j) {
        if (done[j]) continue;
        std::vector<Eigen::Index> cluster;
        for (Eigen::Index k = j; k < modes; ++k)
            if (!done[k] && std::abs(out.beta(k) - out.beta(j)) < opts.cluster_tol * scale) cluster.push_back(k);
        for (Eigen::Index k : cluster) done[k] = true;
        if (cluster.size() > 1) out.cluster_sizes.push_back(static_cast<int>(cluster.size()));

        const Eigen::Index d = static_cast<Eigen::Index>(cluster.size());
        Eigen::MatrixXcd xs(dim, d), ys(dim, d);
        for (Eigen::Index c = 0; c < d; ++c) {
            xs.col(c) = out.v.col(2 * cluster[c]);
            ys.col(c) = out.v.col(2 * cluster[c] + 1);
        }
        for (Eigen::Index k = 0; k < d; ++k) {
            // Pivot: largest |x_a . y_b| among the not yet accepted columns.
            double best = -1.0;
            Eigen::Index pa = k, pb = k;
            for (Eigen::Index a1 = k; a1 < d; ++a1)
                for (Eigen::Index b1 = k; b1 < d; ++b1) {
                    const double m = std::abs(bilinear(xs.col(a1), ys.col(b1))) /
                                     (xs.col(a1).norm() * ys.col(b1).norm());
                    if (m > best) {
                        best = m;
                        pa = a1;
                        pb = b1;
                    }
                }
            xs.col(k).swap(xs.col(pa));
            ys.col(k).swap(ys.col(pb));
            const cd overlap = bilinear(xs.col(k), ys.col(k));
            const double raw = std::abs(overlap) / (xs.col(k).norm() * ys.col(k).norm());
            if (d > 1 && raw < opts.degeneracy_tol) throw NumericalError("bilinear degeneracy");
            if (raw == 0.0) throw NumericalError("bilinear degeneracy");
            if (raw < 1e-10) out.ill_conditioned.push_back(static_cast<int>(cluster[k]));
            const double xn = xs.col(k).norm();
            xs.col(k) /= xn;
            ys.col(k) /= bilinear(xs.col(k), ys.col(k));
            out.pair_scale[cluster[k]] = ys.col(k).norm();
            // Remove the accepted pair from the remaining columns.
            for (Eigen::Index r = k + 1; r < d; ++r) {
                xs.col(r) -= bilinear(xs.col(r), ys.col(k)) * xs.col(k);
                ys.col(r) -= bilinear(xs.col(k), ys.col(r)) * ys.col(k);
            }
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            out.v.col(2 * cluster[c]) = xs.col(c);
            out.v.col(2 * cluster[c] + 1) = ys.col(c);
        }
    }

    out.residuals.resize(dim);
    for (Eigen::Index j = 0; j < modes; ++j) {
        const auto vp = out.v.col(2 * j);
        const auto vm = out.v.col(2 * j + 1);
        out.residuals(2 * j) = (a * vp - out.beta(j) * vp).norm() / vp.norm();
        out.residuals(2 * j + 1) = (a * vm + out.beta(j) * vm).norm() / vm.norm();
    }
    return out;
}

GapReport relaxation_gap(const NormalModeBasis& basis) {
    GapReport r;
    if (basis.beta.size() == 0) return r;
    Eigen::Index arg = 0;
    double min_re = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < basis.beta.size(); ++j)
        if (basis.beta(j).real() < min_re) {
            min_re = basis.beta(j).real();
            arg = j;
        }
    r.delta = std::max(0.0, 2.0 * min_re);
    r.min_rapidity_index = static_cast<int>(arg);
    r.unique = r.delta > 1e-10;
    return r;
}

double bilinear_gram_deviation(const NormalModeBasis& basis) {
    const Eigen::MatrixXcd gram = basis.v.transpose() * basis.v;
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(gram.rows(), gram.cols());
    for (Eigen::Index j = 0; j + 1 < target.rows(); j += 2) {
        target(j, j + 1) = 1.0;
        target(j + 1, j) = 1.0;
    }
    return (gram - target).cwiseAbs().maxCoeff();
}

double max_relative_residual(const NormalModeBasis& basis) {
    if (basis.residuals.size() == 0) return 0.0;
    return basis.residuals.maxCoeff() / std::max(basis.norm_a, std::numeric_limits<double>::min());
}

Eigen::VectorXcd mode_sum_spectrum(const NormalModeBasis& basis, ParitySector sector) {
    const int m = static_cast<int>(basis.beta.size());
    if (m > 20) throw ValidationError("too many modes for a full mode-sum spectrum");
    std::vector<std::complex<double>> out;
    for (unsigned long nu = 0; nu < (1ul << m); ++nu) {
        const bool even = std::popcount(nu) % 2 == 0;
        if ((sector == ParitySector::even && !even) || (sector == ParitySector::odd && even)) continue;
        std::complex<double> s = 0.0;
        for (int j = 0; j < m; ++j)
            if (nu >> j & 1ul) s += basis.beta(j);
        out.push_back(-2.0 * s);
    }
    return Eigen::Map<Eigen::VectorXcd>(out.data(), Eigen::Index(out.size()));
}

} // namespace xyness
