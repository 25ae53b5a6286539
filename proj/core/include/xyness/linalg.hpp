// linalg.hpp: Thin dense linear-algebra helpers (LAPACK-backed eigensolver)

#pragma once

#include <Eigen/Dense>

namespace xyness::linalg {

struct EigenDecomposition {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd vectors; // right eigenvectors as unit-norm columns
};

// General complex eigendecomposition (LAPACK zgeev). Throws NumericalError when
// the QR iteration fails to converge.
EigenDecomposition eig(const Eigen::MatrixXcd& a);

// Eigenvalues only (cheaper than eig).
Eigen::VectorXcd eigenvalues(const Eigen::MatrixXcd& a);

// Largest singular value via power iteration on A^H A. Accurate to ~1e-9
// relative, which is all the tolerance scales need.
double spectral_norm(const Eigen::MatrixXcd& a, int max_iter = 500);

// 2-norm condition number via a full SVD (test / diagnostics use only).
double condition_number(const Eigen::MatrixXcd& a);

// Minimum-cost one-to-one matching distance between two multisets of complex
// numbers: max over matched pairs of |x - y|, minimized greedily on sorted
// candidates and refined by pairwise swaps. Sizes must agree.
double multiset_distance(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

} // namespace xyness::linalg
