#include "xyness/model.hpp"

#include "xyness/error.hpp"

#include <cmath>
#include <sstream>

namespace xyness {

using cd = std::complex<double>;

std::string to_string(const ChainSpec& s) {
    std::ostringstream os;
    os.precision(17);
    os << "n=" << s.n << " gamma=" << s.gamma << " h=" << s.h << " gl1=" << s.gl1
       << " gl2=" << s.gl2 << " gr1=" << s.gr1 << " gr2=" << s.gr2;
    return os.str();
}

ChainSpec validate_spec(const ChainSpec& s) {
    if (s.n < 2) throw ValidationError("n < 2");
    if (!std::isfinite(s.gamma)) throw ValidationError("non-finite gamma");
    if (!std::isfinite(s.h)) throw ValidationError("non-finite h");
    if (s.gamma < 0.0) throw ValidationError("negative gamma");
    if (s.h < 0.0) throw ValidationError("negative h");
    for (double r : {s.gl1, s.gl2, s.gr1, s.gr2}) {
        if (!std::isfinite(r)) throw ValidationError("non-finite rate");
        if (r < 0.0) throw ValidationError("negative rate");
    }
    if (s.gl1 == 0.0 && s.gl2 == 0.0 && s.gr1 == 0.0 && s.gr2 == 0.0)
        throw ValidationError("no dissipation");
    return s;
}

namespace pauli {
Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }
Eigen::Matrix2cd x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}
Eigen::Matrix2cd y() {
    Eigen::Matrix2cd m;
    m << 0, cd(0, -1), cd(0, 1), 0;
    return m;
}
Eigen::Matrix2cd z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}
} // namespace pauli

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& slow, const Eigen::MatrixXcd& fast) {
    Eigen::MatrixXcd out(slow.rows() * fast.rows(), slow.cols() * fast.cols());
    for (Eigen::Index i = 0; i < slow.rows(); ++i)
        for (Eigen::Index j = 0; j < slow.cols(); ++j)
            out.block(i * fast.rows(), j * fast.cols(), fast.rows(), fast.cols()) = slow(i, j) * fast;
    return out;
}

namespace {
// Block "X (x) Y": X on the a-type index, Y on the Majorana index.
Eigen::Matrix4cd block_product(const Eigen::Matrix2cd& atype, const Eigen::Matrix2cd& majorana) {
    return kron(majorana, atype);
}
} // namespace

Eigen::Matrix4cd hopping_block(double gamma) {
    const cd i(0, 1);
    return block_product(pauli::identity(), (i * pauli::y() - gamma * pauli::x()) / 2.0);
}

Eigen::Matrix4cd bath_block(double rate1, double rate2) {
    const cd i(0, 1);
    return -0.5 * (rate2 + rate1) * block_product(pauli::y(), pauli::identity())
           + 0.5 * (rate2 - rate1) * block_product(pauli::z() + i * pauli::x(), pauli::y());
}

StructureMatrix build_structure_matrix(const ChainSpec& spec) {
    validate_spec(spec);
    const int n = spec.n;
    StructureMatrix out;
    out.n = n;
    out.a = Eigen::MatrixXcd::Zero(4 * n, 4 * n);

    const Eigen::Matrix4cd r0 = hopping_block(0.0);
    const Eigen::Matrix4cd rg = hopping_block(spec.gamma);
    const Eigen::Matrix4cd bl = bath_block(spec.gl1, spec.gl2);
    const Eigen::Matrix4cd br = bath_block(spec.gr1, spec.gr2);

    for (int l = 0; l < n; ++l) {
        Eigen::Matrix4cd diag = -2.0 * spec.h * r0;
        if (l == 0) diag += bl;
        if (l == n - 1) diag += br;
        out.a.block<4, 4>(4 * l, 4 * l) = diag;
        if (l + 1 < n) {
            out.a.block<4, 4>(4 * l, 4 * (l + 1)) = rg;
            out.a.block<4, 4>(4 * (l + 1), 4 * l) = -rg.transpose();
        }
    }
    return out;
}

double antisymmetry_residual(const Eigen::MatrixXcd& a) {
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a + a.transpose()).cwiseAbs().maxCoeff() / scale;
}

} // namespace xyness
