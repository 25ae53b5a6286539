// oracle.hpp: Brute-force reference for small chains (n <= 5, hard cap 6)
//
// Density matrices are vectorized row-major: vec(rho)[i * 2^n + j] = rho(i, j),
// so vec(A X B) = (A (x) B^T) vec(X). Operator-space quantities use the
// Majorana product basis P_alpha = w_1^{alpha_1} ... w_{2n}^{alpha_{2n}},
// orthonormal under <X|Y> = 2^{-n} tr(X^dagger Y); alpha is read as a binary
// number with alpha_1 the most significant bit.

#pragma once

#include "xyness/model.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace xyness::oracle {

inline constexpr int kMaxSites = 6;

struct DenseLiouvillean {
    int n{0};
    Eigen::MatrixXcd l; // 4^n x 4^n
};

struct ExactNess {
    int n{0};
    Eigen::MatrixXcd rho; // 2^n x 2^n, unit trace, Hermitian
    double residual{0.0}; // ||L vec(rho)||
};

// Pauli operator `single` on site `site` (0-based) of an n-spin chain.
Eigen::MatrixXcd site_operator(const Eigen::Matrix2cd& single, int site, int n);
Eigen::MatrixXcd hamiltonian(const ChainSpec& spec);
std::vector<Eigen::MatrixXcd> lindblad_operators(const ChainSpec& spec);
// w_{2m-1} = sx_m prod_{m'<m} sz_{m'},  w_{2m} = sy_m prod_{m'<m} sz_{m'}
std::vector<Eigen::MatrixXcd> majorana_operators(int n);

// Throws ValidationError("n too large for oracle") for n > kMaxSites.
DenseLiouvillean build_liouvillean(const ChainSpec& spec);

// All 4^n eigenvalues.
Eigen::VectorXcd spectrum(const DenseLiouvillean& l);

// Eigenvalues of the block of L acting on even (or odd) products of Majorana
// operators; L preserves this operator parity.
Eigen::VectorXcd sector_spectrum(const DenseLiouvillean& l, bool even);

// max |vec(1)^T L| / ||L||_max
double trace_preservation_residual(const DenseLiouvillean& l);

// Throws NumericalError("degenerate steady space") when two eigenvalues lie
// within 1e-10 of zero.
ExactNess steady_state(const DenseLiouvillean& l);

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, int dim);

// Liouvillean in the Majorana product basis, and its even-parity restriction.
Eigen::MatrixXcd in_majorana_basis(const DenseLiouvillean& l);
std::vector<Eigen::MatrixXcd> majorana_product_basis(int n);

// Expansion coefficients of rho in the P_alpha basis (2^{-n} tr(P_alpha^dagger rho)).
Eigen::VectorXcd majorana_coefficients(const Eigen::MatrixXcd& rho, int n);

// Adjoint Fermi maps c_j (j = 1..2n, 0-based in the vector) on the 4^n-dim
// operator Fock space, and the Hermitian maps a_{2j-1}, a_{2j}.
std::vector<Eigen::MatrixXd> adjoint_fermi_maps(int n);
std::vector<Eigen::MatrixXcd> hermitian_maps(int n);

struct ExtractedStructure {
    Eigen::MatrixXcd a;   // 4n x 4n antisymmetric
    double residual{0.0}; // max deviation of L^+ from a.A a + const on the even sector
};

// Reads A off the even-parity block of the Liouvillean via the a-bilinear form.
ExtractedStructure extract_structure_matrix(const DenseLiouvillean& l);

// Exact observables for cross-checks.
std::complex<double> expectation(const ExactNess& ness, const Eigen::MatrixXcd& op);
Eigen::MatrixXcd two_point_reference(const ExactNess& ness);  // tr(w_j w_k rho) - delta_jk
std::vector<double> magnetization_reference(const ExactNess& ness);
Eigen::MatrixXd correlator_reference(const ExactNess& ness);  // connected sz-sz, zero diagonal
std::complex<double> moment_reference(const ExactNess& ness, std::span<const int> labels);

// Entropy (bits) of the Schmidt spectrum of the normalized P_alpha coefficient
// vector reshaped into 4^cut x 4^(n-cut).
double exact_osee(const ExactNess& ness, int cut);
double exact_osee_coefficients(const Eigen::VectorXcd& coefficients, int n, int cut);

// exp(t L) applied to rho.
Eigen::MatrixXcd evolve(const DenseLiouvillean& l, const Eigen::MatrixXcd& rho, double t);

} // namespace xyness::oracle
