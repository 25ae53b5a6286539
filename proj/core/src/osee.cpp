#include "xyness/osee.hpp"

#include "xyness/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xyness {

Eigen::MatrixXcd majorana_correlation(const NormalModeBasis& basis, double* cond_k) {
    const Eigen::Index dim = basis.v.rows();
    const Eigen::Index modes = dim / 2;
    Eigen::MatrixXcd vo(dim, modes), ve(dim, modes);
    for (Eigen::Index k = 0; k < modes; ++k) {
        vo.col(k) = basis.v.col(2 * k);
        ve.col(k) = basis.v.col(2 * k + 1);
    }
    Eigen::MatrixXcd lhs(dim, dim), rhs(dim, dim);
    lhs << vo, -vo.conjugate();
    rhs << ve, -ve.conjugate();

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(lhs);
    const double rcond = lu.rcond();
    const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (cond_k) *cond_k = cond;
    if (!(cond <= 1e12)) throw NumericalError("singular basis concatenation");

    const Eigen::MatrixXcd k = -lu.solve(rhs);
    const Eigen::MatrixXcd q = vo * k.topRightCorner(modes, modes);
    const Eigen::MatrixXcd t = vo.transpose() * vo.conjugate();
    return q.conjugate() * t * q.transpose();
}

double pair_entropy(double eta) {
    auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
    const double e = std::clamp(eta, 0.0, 0.5);
    return term(0.5 + e) + term(0.5 - e);
}

OseeResult osee_from_block(const Eigen::MatrixXcd& block, int cut, double cond_k) {
    OseeResult out;
    out.cut = cut;
    out.cond_k = cond_k;
    out.hermiticity = (block - block.adjoint()).cwiseAbs().maxCoeff();
    out.trace = block.trace().real();

    const Eigen::MatrixXcd herm = 0.5 * (block + block.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("osee: Hermitian eigensolver failed");
    const Eigen::VectorXd mu = es.eigenvalues(); // ascending

    // Spectrum is symmetric about 1/2: pair mu_i with mu_{N-1-i}.
    const Eigen::Index size = mu.size();
    for (Eigen::Index i = 0; i < size / 2; ++i) {
        const double lo = mu(i), hi = mu(size - 1 - i);
        if (std::abs(lo + hi - 1.0) > 1e-6)
            throw NumericalError("osee: block spectrum not symmetric about 1/2");
        const double eta = 0.5 * (hi - lo);
        if (eta > 0.5 + 1e-6) throw NumericalError("eta out of range");
        // Each +/- pair holds two Majorana-map eigenvalues; report one eta per
        // fermionic mode of the block.
        out.eta.push_back(std::min(eta, 0.5));
    }
    std::sort(out.eta.begin(), out.eta.end());
    for (double eta : out.eta) out.entropy += pair_entropy(eta);
    return out;
}

OseeResult osee(const NormalModeBasis& basis, int cut) {
    if (cut < 1 || cut >= basis.n) throw ValidationError("cut must satisfy 1 <= cut < n");
    double cond = 0.0;
    const Eigen::MatrixXcd d = majorana_correlation(basis, &cond);
    return osee_from_block(d.topLeftCorner(4 * cut, 4 * cut), cut, cond);
}

OseeResult osee_complement(const NormalModeBasis& basis, int cut) {
    if (cut < 1 || cut >= basis.n) throw ValidationError("cut must satisfy 1 <= cut < n");
    double cond = 0.0;
    const Eigen::MatrixXcd d = majorana_correlation(basis, &cond);
    const int rest = basis.n - cut;
    OseeResult r = osee_from_block(d.bottomRightCorner(4 * rest, 4 * rest), cut, cond);
    return r;
}

FitResult fit_largest_half(const std::vector<OseeScalingPoint>& points) {
    if (points.size() < 4) throw ValidationError("osee scaling needs at least 4 sizes");
    const std::size_t first = points.size() / 2;
    std::vector<double> xs, ys;
    for (std::size_t i = first; i < points.size(); ++i) {
        xs.push_back(points[i].n);
        ys.push_back(points[i].entropy);
    }
    if (xs.size() < 3) {
        // four sizes: largest half has two points; widen to three for a fit
        xs.insert(xs.begin(), points[first - 1].n);
        ys.insert(ys.begin(), points[first - 1].entropy);
    }
    return fit_linear(xs, ys);
}

OseeScaling osee_scaling(const std::vector<ChainSpec>& specs) {
    if (specs.size() < 4) throw ValidationError("osee scaling needs at least 4 sizes");
    OseeScaling out;
    int prev = 0;
    for (const ChainSpec& s : specs) {
        if (s.n <= prev) throw ValidationError("osee scaling sizes must increase");
        if (s.n % 2 != 0) throw ValidationError("osee scaling needs even n");
        prev = s.n;
        const NormalModeBasis basis = diagonalize(build_structure_matrix(s));
        out.points.push_back({s.n, osee(basis, s.n / 2).entropy});
    }
    out.fit = fit_largest_half(out.points);
    return out;
}

} // namespace xyness
