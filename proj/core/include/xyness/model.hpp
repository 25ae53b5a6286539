// model.hpp: Open XY chain parameters and the 4n x 4n structure matrix
//
// Conventions used throughout the library:
//   * Pauli matrices: sx = [[0,1],[1,0]], sy = [[0,-i],[i,0]], sz = diag(1,-1).
//   * Formula indices (Majorana w_j, maps c_j, a_p, eigenvectors v_p) are 1-based
//     in documentation and 0-based in code: w_j lives at index j-1.
//   * Hermitian maps a_{2j-1}, a_{2j} are built from c_j; the 4x4 block of site l
//     covers a_{4l-3..4l}, i.e. (Majorana w_{2l-1}: a-type 1,2; w_{2l}: a-type 1,2).
//   * Block products written "X (x) Y" in the block notation act with X on the
//     fast a-type index and Y on the slow Majorana index, so they are assembled as
//     the standard Kronecker product kron(Y, X). The brute-force oracle pins this.

#pragma once

#include <Eigen/Dense>

#include <string>

namespace xyness {

struct ChainSpec {
    int n{2};          // number of spins
    double gamma{0.0}; // anisotropy
    double h{0.0};     // magnetic field
    double gl1{0.0};   // left bath, sigma^- rate
    double gl2{0.0};   // left bath, sigma^+ rate
    double gr1{0.0};   // right bath, sigma^- rate
    double gr2{0.0};   // right bath, sigma^+ rate
};

std::string to_string(const ChainSpec& spec);

// Returns spec unchanged, or throws ValidationError naming the first violated
// invariant ("n < 2", "negative rate", "no dissipation", "non-finite gamma", ...).
ChainSpec validate_spec(const ChainSpec& spec);

struct StructureMatrix {
    int n{0};
    Eigen::MatrixXcd a; // 4n x 4n, complex antisymmetric
};

namespace pauli {
Eigen::Matrix2cd identity();
Eigen::Matrix2cd x();
Eigen::Matrix2cd y();
Eigen::Matrix2cd z();
} // namespace pauli

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& slow, const Eigen::MatrixXcd& fast);

// Block coupling neighbouring sites: 1 (x) (i sy - gamma sx) / 2.
Eigen::Matrix4cd hopping_block(double gamma);
// Bath block for one end: -(G2+G1)/2 sy (x) 1 + (G2-G1)/2 (sz + i sx) (x) sy.
Eigen::Matrix4cd bath_block(double rate1, double rate2);

// Assembles A: diagonal blocks -2h R_0 (+ B_L at the first site, + B_R at the
// last), superdiagonal R_gamma, subdiagonal -R_gamma^T. Validates spec first.
StructureMatrix build_structure_matrix(const ChainSpec& spec);

// max |A + A^T| / max(1, max |A|)
double antisymmetry_residual(const Eigen::MatrixXcd& a);

} // namespace xyness
