#include "xyness/observables.hpp"

#include "xyness/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace xyness {

using cd = std::complex<double>;

TwoPointTable two_point_table(const NormalModeBasis& basis) {
    const int n = basis.n;
    const Eigen::Index modes = 2 * n;
    // With U1(j,m) = v_{2m-1,2j-1} - i v_{2m-1,2j} and U2(j,m) = v_{2m,2j-1} - i v_{2m,2j},
    // the four-term sum collapses to G = U2 U1^T / 2.
    Eigen::MatrixXcd u1(modes, modes), u2(modes, modes);
    const cd i(0, 1);
    for (Eigen::Index m = 0; m < modes; ++m) {
        const auto odd = basis.v.col(2 * m);      // v_{2m-1}
        const auto even = basis.v.col(2 * m + 1); // v_{2m}
        for (Eigen::Index j = 0; j < modes; ++j) {
            u1(j, m) = odd(2 * j) - i * odd(2 * j + 1);
            u2(j, m) = even(2 * j) - i * even(2 * j + 1);
        }
    }
    TwoPointTable t;
    t.n = n;
    t.g = 0.5 * u2 * u1.transpose();
    for (int j : basis.ill_conditioned) {
        std::ostringstream os;
        os << "ill-conditioned normal-mode pair " << j << " (scale " << basis.pair_scale[j] << ")";
        t.warnings.push_back(os.str());
    }
    return t;
}

double two_point_real_residual(const TwoPointTable& t) {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < t.g.rows(); ++j)
        for (Eigen::Index k = 0; k < t.g.cols(); ++k)
            if (j != k) worst = std::max(worst, std::abs(t.g(j, k).real()));
    return worst;
}

double two_point_antisymmetry_residual(const TwoPointTable& t) {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < t.g.rows(); ++j)
        for (Eigen::Index k = j + 1; k < t.g.cols(); ++k)
            worst = std::max(worst, std::abs(t.g(j, k) + t.g(k, j)));
    return worst;
}

std::vector<double> magnetization(const TwoPointTable& t) {
    std::vector<double> out(t.n);
    const cd minus_i(0, -1);
    for (int m = 0; m < t.n; ++m) out[m] = (minus_i * t.g(2 * m, 2 * m + 1)).real();
    return out;
}

CorrelationMatrix spin_spin_matrix(const TwoPointTable& t) {
    // Wick: tr(sz_l sz_m rho) - <sz_l><sz_m> = G_{2l-1,2m-1} G_{2l,2m} - G_{2l-1,2m} G_{2l,2m-1}.
    const int n = t.n;
    CorrelationMatrix out;
    out.n = n;
    out.c = Eigen::MatrixXd::Zero(n, n);
    for (int l = 0; l < n; ++l) {
        for (int m = 0; m < n; ++m) {
            if (l == m) continue;
            const cd value = t.g(2 * l, 2 * m) * t.g(2 * l + 1, 2 * m + 1) -
                             t.g(2 * l, 2 * m + 1) * t.g(2 * l + 1, 2 * m);
            out.c(l, m) = value.real();
            out.max_imag = std::max(out.max_imag, std::abs(value.imag()));
        }
    }
    return out;
}

std::complex<double> pfaffian_expansion(const Eigen::MatrixXcd& m) {
    const Eigen::Index size = m.rows();
    if (size == 0) return 1.0;
    if (size % 2 != 0) return 0.0;
    if (size == 2) return m(0, 1);
    // Pf(M) = sum_{k>0} (-1)^{k+1} M_{0k} Pf(M without rows/cols 0,k)
    cd total = 0.0;
    for (Eigen::Index k = 1; k < size; ++k) {
        if (m(0, k) == cd(0.0)) continue;
        std::vector<Eigen::Index> keep;
        for (Eigen::Index r = 1; r < size; ++r)
            if (r != k) keep.push_back(r);
        Eigen::MatrixXcd minor(size - 2, size - 2);
        for (Eigen::Index a = 0; a < size - 2; ++a)
            for (Eigen::Index b = 0; b < size - 2; ++b) minor(a, b) = m(keep[a], keep[b]);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        total += sign * m(0, k) * pfaffian_expansion(minor);
    }
    return total;
}

std::complex<double> pfaffian_parlett_reid(Eigen::MatrixXcd a) {
    const Eigen::Index size = a.rows();
    if (size % 2 != 0) return 0.0;
    cd pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < size; k += 2) {
        // Pivot the largest entry of column k below the diagonal into row k+1.
        Eigen::Index piv = k + 1;
        double best = std::abs(a(k + 1, k));
        for (Eigen::Index r = k + 2; r < size; ++r)
            if (std::abs(a(r, k)) > best) {
                best = std::abs(a(r, k));
                piv = r;
            }
        if (piv != k + 1) {
            a.row(k + 1).swap(a.row(piv));
            a.col(k + 1).swap(a.col(piv));
            pf = -pf;
        }
        if (a(k, k + 1) == cd(0.0)) return 0.0;
        pf *= a(k, k + 1);
        if (k + 2 < size) {
            // Gauss transform eliminating column/row k beyond k+1.
            const Eigen::VectorXcd tau = a.col(k).tail(size - k - 2) / a(k + 1, k);
            const Eigen::VectorXcd row = a.row(k + 1).tail(size - k - 2).transpose();
            Eigen::MatrixXcd update = tau * row.transpose();
            a.bottomRightCorner(size - k - 2, size - k - 2) += update.transpose() - update;
        }
    }
    return pf;
}

std::complex<double> pfaffian(const Eigen::MatrixXcd& m) {
    if (m.rows() <= 8) return pfaffian_expansion(m);
    return pfaffian_parlett_reid(m);
}

std::complex<double> majorana_moment(const TwoPointTable& t, std::span<const int> labels) {
    if (labels.size() % 2 != 0) throw ValidationError("odd order");
    if (labels.size() > 12) throw ValidationError("order above 12");
    std::set<int> seen;
    for (int l : labels) {
        if (l < 1 || l > 2 * t.n) throw ValidationError("label out of range");
        if (!seen.insert(l).second) throw ValidationError("repeated label");
    }
    const Eigen::Index k = static_cast<Eigen::Index>(labels.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = a + 1; b < k; ++b) {
            // tr(w_a w_b rho) for distinct labels is G_ab (delta term vanishes).
            m(a, b) = t.g(labels[a] - 1, labels[b] - 1);
            m(b, a) = -m(a, b);
        }
    return pfaffian(m);
}

std::vector<ProfilePoint> distance_profile(const CorrelationMatrix& cm, double band) {
    if (!(band > 0.0 && band < 1.0)) throw ValidationError("band must lie in (0, 1)");
    const int n = cm.n;
    std::vector<ProfilePoint> out;
    for (int r = 1; r < n; ++r) {
        double sum = 0.0;
        int count = 0;
        for (int l = 1; l + r <= n; ++l) {
            const int m = l + r;
            if (std::abs(l + m - n) <= band * n) {
                sum += 0.5 * (cm.c(l - 1, m - 1) + cm.c(m - 1, l - 1));
                ++count;
            }
        }
        if (count > 0) out.push_back({r, sum / count, count});
    }
    return out;
}

double residual_correlator(const CorrelationMatrix& cm) {
    const int n = cm.n;
    if (n < 4) throw ValidationError("residual correlator needs n >= 4");
    double sum = 0.0;
    long count = 0;
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m)
            if (2 * std::abs(l - m) > n) {
                sum += cm.c(l, m);
                ++count;
            }
    return count ? sum / double(count) : 0.0;
}

} // namespace xyness
