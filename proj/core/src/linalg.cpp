#include "xyness/linalg.hpp"

#include "xyness/error.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace xyness::linalg {

namespace {

lapack_complex_double* as_lapack(std::complex<double>* p) {
    return reinterpret_cast<lapack_complex_double*>(p);
}

void check_square(const Eigen::MatrixXcd& a, const char* who) {
    if (a.rows() != a.cols()) throw NumericalError(std::string(who) + ": matrix must be square");
}

} // namespace

EigenDecomposition eig(const Eigen::MatrixXcd& a) {
    check_square(a, "eig");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    EigenDecomposition out;
    if (n == 0) return out;
    Eigen::MatrixXcd work = a;
    out.values.resize(n);
    out.vectors.resize(n, n);
    std::complex<double> dummy;
    const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, as_lapack(work.data()), n,
                                          as_lapack(out.values.data()), as_lapack(&dummy), 1,
                                          as_lapack(out.vectors.data()), n);
    if (info != 0) throw NumericalError("eig: zgeev failed with info=" + std::to_string(info));
    return out;
}

Eigen::VectorXcd eigenvalues(const Eigen::MatrixXcd& a) {
    check_square(a, "eigenvalues");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    Eigen::VectorXcd values(n);
    if (n == 0) return values;
    Eigen::MatrixXcd work = a;
    std::complex<double> dummy;
    const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, as_lapack(work.data()), n,
                                          as_lapack(values.data()), as_lapack(&dummy), 1,
                                          as_lapack(&dummy), 1);
    if (info != 0) throw NumericalError("eigenvalues: zgeev failed with info=" + std::to_string(info));
    return values;
}

double spectral_norm(const Eigen::MatrixXcd& a, int max_iter) {
    if (a.size() == 0) return 0.0;
    // Deterministic start vector with no special alignment.
    Eigen::VectorXcd x(a.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        x(i) = std::complex<double>(1.0 + 0.37 * std::sin(1.3 * double(i)), 0.21 * std::cos(0.7 * double(i)));
    x.normalize();
    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXcd y = a.adjoint() * (a * x);
        const double norm = y.norm();
        if (norm == 0.0) return 0.0;
        const double next = std::sqrt(norm);
        x = y / norm;
        if (std::abs(next - sigma) <= 1e-9 * next) return next;
        sigma = next;
    }
    return sigma;
}

double condition_number(const Eigen::MatrixXcd& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 1.0;
    const double smin = s(s.size() - 1);
    return smin == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / smin;
}

double multiset_distance(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    if (x.size() != y.size()) throw NumericalError("multiset_distance: size mismatch");
    const Eigen::Index n = x.size();
    if (n == 0) return 0.0;
    // Greedy nearest assignment in order of decreasing best-match quality.
    std::vector<Eigen::Index> match(n, -1);
    std::vector<bool> taken(n, false);
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        if (x(i).real() != x(j).real()) return x(i).real() < x(j).real();
        return x(i).imag() < x(j).imag();
    });
    for (Eigen::Index i : order) {
        double best = std::numeric_limits<double>::infinity();
        Eigen::Index arg = -1;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (taken[k]) continue;
            const double d = std::abs(x(i) - y(k));
            if (d < best) {
                best = d;
                arg = k;
            }
        }
        match[i] = arg;
        taken[arg] = true;
    }
    // 2-opt refinement on the bottleneck cost.
    bool improved = true;
    for (int sweep = 0; improved && sweep < 50; ++sweep) {
        improved = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const double cur = std::max(std::abs(x(i) - y(match[i])), std::abs(x(j) - y(match[j])));
                const double alt = std::max(std::abs(x(i) - y(match[j])), std::abs(x(j) - y(match[i])));
                if (alt < cur - 1e-300) {
                    std::swap(match[i], match[j]);
                    improved = true;
                }
            }
        }
    }
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) worst = std::max(worst, std::abs(x(i) - y(match[i])));
    return worst;
}

} // namespace xyness::linalg
