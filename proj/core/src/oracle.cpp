#include "xyness/oracle.hpp"

#include "xyness/error.hpp"
#include "xyness/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

namespace xyness::oracle {

using cd = std::complex<double>;

namespace {

void check_size(int n) {
    if (n > kMaxSites) throw ValidationError("n too large for oracle");
    if (n < 1) throw ValidationError("n < 1");
}

Eigen::MatrixXcd kron_std(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return xyness::kron(a, b); }

} // namespace

Eigen::MatrixXcd site_operator(const Eigen::Matrix2cd& single, int site, int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = 0; k < n; ++k) out = kron_std(out, k == site ? Eigen::MatrixXcd(single) : Eigen::MatrixXcd(pauli::identity()));
    return out;
}

Eigen::MatrixXcd hamiltonian(const ChainSpec& s) {
    const int dim = 1 << s.n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = 0; m + 1 < s.n; ++m) {
        h += 0.5 * (1.0 + s.gamma) * site_operator(pauli::x(), m, s.n) * site_operator(pauli::x(), m + 1, s.n);
        h += 0.5 * (1.0 - s.gamma) * site_operator(pauli::y(), m, s.n) * site_operator(pauli::y(), m + 1, s.n);
    }
    for (int m = 0; m < s.n; ++m) h += s.h * site_operator(pauli::z(), m, s.n);
    return h;
}

std::vector<Eigen::MatrixXcd> lindblad_operators(const ChainSpec& s) {
    const cd i(0, 1);
    const Eigen::Matrix2cd lower = (pauli::x() - i * pauli::y()) / 2.0;
    const Eigen::Matrix2cd raise = (pauli::x() + i * pauli::y()) / 2.0;
    return {std::sqrt(s.gl1) * site_operator(lower, 0, s.n), std::sqrt(s.gl2) * site_operator(raise, 0, s.n),
            std::sqrt(s.gr1) * site_operator(lower, s.n - 1, s.n),
            std::sqrt(s.gr2) * site_operator(raise, s.n - 1, s.n)};
}

std::vector<Eigen::MatrixXcd> majorana_operators(int n) {
    check_size(n);
    std::vector<Eigen::MatrixXcd> w;
    const int dim = 1 << n;
    Eigen::MatrixXcd string = Eigen::MatrixXcd::Identity(dim, dim);
    for (int m = 0; m < n; ++m) {
        w.push_back(site_operator(pauli::x(), m, n) * string);
        w.push_back(site_operator(pauli::y(), m, n) * string);
        string = string * site_operator(pauli::z(), m, n);
    }
    return w;
}

DenseLiouvillean build_liouvillean(const ChainSpec& spec) {
    check_size(spec.n);
    const int dim = 1 << spec.n;
    const cd i(0, 1);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::MatrixXcd h = hamiltonian(spec);
    DenseLiouvillean out;
    out.n = spec.n;
    out.l = -i * (kron_std(h, id) - kron_std(id, h.transpose()));
    for (const Eigen::MatrixXcd& lm : lindblad_operators(spec)) {
        if (lm.cwiseAbs().maxCoeff() == 0.0) continue;
        const Eigen::MatrixXcd ldl = lm.adjoint() * lm;
        out.l += 2.0 * kron_std(lm, lm.conjugate()) - kron_std(ldl, id) - kron_std(id, ldl.transpose());
    }
    return out;
}

Eigen::VectorXcd spectrum(const DenseLiouvillean& l) { return linalg::eigenvalues(l.l); }

Eigen::VectorXcd sector_spectrum(const DenseLiouvillean& l, bool even) {
    const Eigen::MatrixXcd lp = in_majorana_basis(l);
    std::vector<int> idx;
    for (int k = 0; k < int(lp.rows()); ++k)
        if ((std::popcount(unsigned(k)) % 2 == 0) == even) idx.push_back(k);
    Eigen::MatrixXcd block(idx.size(), idx.size());
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = 0; y < idx.size(); ++y) block(x, y) = lp(idx[x], idx[y]);
    return linalg::eigenvalues(block);
}

double trace_preservation_residual(const DenseLiouvillean& l) {
    const int dim = 1 << l.n;
    Eigen::VectorXcd one = vectorize(Eigen::MatrixXcd::Identity(dim, dim));
    const double scale = std::max(1.0, l.l.cwiseAbs().maxCoeff());
    return (one.transpose() * l.l).cwiseAbs().maxCoeff() / scale;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho) {
    Eigen::VectorXcd v(rho.size());
    for (Eigen::Index r = 0; r < rho.rows(); ++r)
        for (Eigen::Index c = 0; c < rho.cols(); ++c) v(r * rho.cols() + c) = rho(r, c);
    return v;
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, int dim) {
    Eigen::MatrixXcd rho(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) rho(r, c) = v(r * dim + c);
    return rho;
}

ExactNess steady_state(const DenseLiouvillean& l) {
    const linalg::EigenDecomposition dec = linalg::eig(l.l);
    std::vector<Eigen::Index> order(dec.values.size());
    for (Eigen::Index k = 0; k < dec.values.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return std::abs(dec.values(a)) < std::abs(dec.values(b)); });
    if (order.size() > 1 && std::abs(dec.values(order[1])) <= 1e-10)
        throw NumericalError("degenerate steady space");

    const int dim = 1 << l.n;
    Eigen::MatrixXcd rho = unvectorize(dec.vectors.col(order[0]), dim);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const cd tr = rho.trace();
    if (std::abs(tr) == 0.0) throw NumericalError("steady state has zero trace");
    rho /= tr;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    ExactNess out;
    out.n = l.n;
    out.rho = rho;
    out.residual = (l.l * vectorize(rho)).norm();
    return out;
}

std::vector<Eigen::MatrixXcd> majorana_product_basis(int n) {
    const std::vector<Eigen::MatrixXcd> w = majorana_operators(n);
    const int modes = 2 * n;
    const int dim = 1 << n;
    std::vector<Eigen::MatrixXcd> basis(std::size_t(1) << modes);
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
        for (int j = 0; j < modes; ++j)
            if ((idx >> (modes - 1 - j)) & 1u) p = p * w[j];
        basis[idx] = p;
    }
    return basis;
}

Eigen::VectorXcd majorana_coefficients(const Eigen::MatrixXcd& rho, int n) {
    const auto basis = majorana_product_basis(n);
    const double norm = double(1 << n);
    Eigen::VectorXcd c(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) c(k) = (basis[k].adjoint() * rho).trace() / norm;
    return c;
}

Eigen::MatrixXcd in_majorana_basis(const DenseLiouvillean& l) {
    const auto basis = majorana_product_basis(l.n);
    const int dim = 1 << l.n;
    Eigen::MatrixXcd u(dim * dim, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) u.col(k) = vectorize(basis[k]) / std::sqrt(double(dim));
    return u.adjoint() * l.l * u;
}

std::vector<Eigen::MatrixXd> adjoint_fermi_maps(int n) {
    check_size(n);
    const int modes = 2 * n;
    const int dim = 1 << modes;
    std::vector<Eigen::MatrixXd> c;
    for (int j = 0; j < modes; ++j) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        const unsigned bit = 1u << (modes - 1 - j);
        for (int idx = 0; idx < dim; ++idx) {
            if (!(unsigned(idx) & bit)) continue;
            // bits of alpha_1..alpha_{j-1} sit above `bit`
            const unsigned before = unsigned(idx) >> (modes - j);
            const double sign = (std::popcount(before) % 2 == 0) ? 1.0 : -1.0;
            m(idx & ~int(bit), idx) = sign;
        }
        c.push_back(m);
    }
    return c;
}

std::vector<Eigen::MatrixXcd> hermitian_maps(int n) {
    const auto c = adjoint_fermi_maps(n);
    const cd i(0, 1);
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Eigen::MatrixXcd> a;
    for (const auto& cj : c) {
        const Eigen::MatrixXcd cc = cj.cast<cd>();
        a.push_back(s * (cc + cc.adjoint()));
        a.push_back(i * s * (cc - cc.adjoint()));
    }
    return a;
}

ExtractedStructure extract_structure_matrix(const DenseLiouvillean& l) {
    const int n = l.n;
    if (n < 2) throw ValidationError("extraction needs n >= 2");
    const Eigen::MatrixXcd lp = in_majorana_basis(l);
    const auto a = hermitian_maps(n);
    const int dim = int(lp.rows());
    std::vector<int> even;
    for (int idx = 0; idx < dim; ++idx)
        if (std::popcount(unsigned(idx)) % 2 == 0) even.push_back(idx);
    const int ne = int(even.size());
    auto restrict = [&](const Eigen::MatrixXcd& m) {
        Eigen::MatrixXcd r(ne, ne);
        for (int x = 0; x < ne; ++x)
            for (int y = 0; y < ne; ++y) r(x, y) = m(even[x], even[y]);
        return r;
    };
    const Eigen::MatrixXcd le = restrict(lp);
    const int nm = 4 * n;
    ExtractedStructure out;
    out.a = Eigen::MatrixXcd::Zero(nm, nm);
    // a_p a_q (p < q) restricted to the even sector are Hilbert-Schmidt orthogonal
    // with norm^2 = ne / 4; the coefficient of a_p a_q in a.A a is 2 A_pq.
    for (int p = 0; p < nm; ++p)
        for (int q = p + 1; q < nm; ++q) {
            const Eigen::MatrixXcd x = restrict(a[p] * a[q]);
            const cd coef = (x.adjoint() * le).trace() / (x.adjoint() * x).trace();
            out.a(p, q) = coef / 2.0;
            out.a(q, p) = -coef / 2.0;
        }
    Eigen::MatrixXcd form = Eigen::MatrixXcd::Zero(dim, dim);
    for (int p = 0; p < nm; ++p)
        for (int q = 0; q < nm; ++q)
            if (out.a(p, q) != cd(0.0)) form += out.a(p, q) * a[p] * a[q];
    const Eigen::MatrixXcd fe = restrict(form);
    const cd shift = (le - fe).trace() / double(ne);
    out.residual = (le - fe - shift * Eigen::MatrixXcd::Identity(ne, ne)).cwiseAbs().maxCoeff();
    return out;
}

std::complex<double> expectation(const ExactNess& ness, const Eigen::MatrixXcd& op) {
    return (op * ness.rho).trace();
}

Eigen::MatrixXcd two_point_reference(const ExactNess& ness) {
    const auto w = majorana_operators(ness.n);
    const int modes = 2 * ness.n;
    Eigen::MatrixXcd g(modes, modes);
    for (int j = 0; j < modes; ++j)
        for (int k = 0; k < modes; ++k) g(j, k) = expectation(ness, w[j] * w[k]) - (j == k ? 1.0 : 0.0);
    return g;
}

std::vector<double> magnetization_reference(const ExactNess& ness) {
    std::vector<double> out(ness.n);
    for (int m = 0; m < ness.n; ++m) out[m] = expectation(ness, site_operator(pauli::z(), m, ness.n)).real();
    return out;
}

Eigen::MatrixXd correlator_reference(const ExactNess& ness) {
    const int n = ness.n;
    const auto mz = magnetization_reference(ness);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            if (l == m) continue;
            const Eigen::MatrixXcd op = site_operator(pauli::z(), l, n) * site_operator(pauli::z(), m, n);
            c(l, m) = expectation(ness, op).real() - mz[l] * mz[m];
        }
    return c;
}

std::complex<double> moment_reference(const ExactNess& ness, std::span<const int> labels) {
    const auto w = majorana_operators(ness.n);
    const int dim = 1 << ness.n;
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(dim, dim);
    for (int l : labels) op = op * w[l - 1];
    return expectation(ness, op);
}

double exact_osee_coefficients(const Eigen::VectorXcd& coefficients, int n, int cut) {
    if (cut < 1 || cut >= n) throw ValidationError("cut must satisfy 1 <= cut < n");
    const Eigen::Index rows = Eigen::Index(1) << (2 * cut);
    const Eigen::Index cols = Eigen::Index(1) << (2 * (n - cut));
    const double norm = coefficients.norm();
    if (norm == 0.0) throw NumericalError("exact_osee: zero state");
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = coefficients(r * cols + c) / norm;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    double s = 0.0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        const double p = svd.singularValues()(k) * svd.singularValues()(k);
        if (p > 0.0) s -= p * std::log2(p);
    }
    return std::max(0.0, s);
}

double exact_osee(const ExactNess& ness, int cut) {
    return exact_osee_coefficients(majorana_coefficients(ness.rho, ness.n), ness.n, cut);
}

Eigen::MatrixXcd evolve(const DenseLiouvillean& l, const Eigen::MatrixXcd& rho, double t) {
    const Eigen::MatrixXcd prop = (t * l.l).exp();
    return unvectorize(prop * vectorize(rho), 1 << l.n);
}

} // namespace xyness::oracle
