// spectral.hpp: Rapidities and bilinearly normalized normal-master-mode vectors

#pragma once

#include "xyness/model.hpp"

#include <Eigen/Dense>

#include <vector>

namespace xyness {

// Paired eigen-decomposition of A.
//
// Column layout of `v` (0-based): column 2j holds v_{2j+1} with A v = +beta_j v,
// column 2j+1 holds v_{2j+2} with A v = -beta_j v. Pairs satisfy the plain
// (non-conjugated) bilinear normalization v_{2j+1} . v_{2j+2} = 1 and every
// other bilinear product vanishes.
struct NormalModeBasis {
    int n{0};
    Eigen::VectorXcd beta;     // 2n rapidities, Re beta >= 0
    Eigen::MatrixXcd v;        // 4n x 4n
    Eigen::VectorXd residuals; // ||A v_p -/+ beta v_p|| / ||v_p||, per column
    double norm_a{0.0};        // ||A||_2

    // Factor applied to the "-" vector of each pair to reach v.v' = 1 (as |1/(v.v')|
    // with unit-norm inputs). Large values mean nearly self-orthogonal pairs.
    std::vector<double> pair_scale;
    // Pairs whose raw bilinear overlap was below 1e-10 before rescaling.
    std::vector<int> ill_conditioned;
    // Sizes of the numerically degenerate rapidity clusters (multiplicity > 1).
    std::vector<int> cluster_sizes;

    auto plus(int j) const { return v.col(2 * j); }
    auto minus(int j) const { return v.col(2 * j + 1); }
};

struct SpectralOptions {
    double pairing_tol{1e-6};     // relative to ||A||_2
    double cluster_tol{1e-8};     // relative to ||A||_2
    double degeneracy_tol{1e-10}; // Gram pivot conditioning inside clusters
    double imaginary_tol{1e-12};  // |Re beta| below which a pair counts as purely imaginary
};

// Diagonalizes the structure matrix. Throws NumericalError("pairing failure")
// or NumericalError("bilinear degeneracy").
NormalModeBasis diagonalize(const StructureMatrix& a, const SpectralOptions& opts = {});
NormalModeBasis diagonalize(const Eigen::MatrixXcd& a, const SpectralOptions& opts = {});

struct GapReport {
    double delta{0.0};         // 2 min_j Re beta_j (clamped at 0)
    int min_rapidity_index{0}; // j of the minimizing rapidity (0-based)
    bool unique{false};        // delta > 1e-10
};

GapReport relaxation_gap(const NormalModeBasis& basis);

enum class ParitySector { all, even, odd };

// Liouvillean eigenvalues -2 sum_j nu_j beta_j over nu in {0,1}^{2n}, restricted
// to even or odd |nu| on request. Throws ValidationError for 2n > 20.
Eigen::VectorXcd mode_sum_spectrum(const NormalModeBasis& basis, ParitySector sector = ParitySector::all);

// max |V^T V - J| where J is block-diagonal with [[0,1],[1,0]] per pair.
double bilinear_gram_deviation(const NormalModeBasis& basis);

// max over p of residuals(p) / ||A||_2
double max_relative_residual(const NormalModeBasis& basis);

} // namespace xyness
