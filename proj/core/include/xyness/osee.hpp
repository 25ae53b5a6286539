// osee.hpp: Operator-space entanglement entropy of the NESS
//
// The vectorized NESS is a Gaussian state of the 2n adjoint fermions c_j, so
// its bipartite entropy follows from the 4n x 4n correlation matrix
// D_pq = <NESS| a_p a_q |NESS> / <NESS|NESS>. D is obtained by rewriting a in
// terms of the annihilators b_j and b_j^dagger:
//   K = -(V_o | -V_o^*)^{-1} (V_e | -V_e^*),  Q = V_o K_12,
//   T_jk = v_{2j-1} . v_{2k-1}^*,              D = Q^* T Q^T,
// with (X | Y) the side-by-side concatenation of two 4n x 2n blocks.

#pragma once

#include "xyness/analysis.hpp"
#include "xyness/model.hpp"
#include "xyness/spectral.hpp"

#include <Eigen/Dense>

#include <vector>

namespace xyness {

struct OseeResult {
    int cut{0};                 // number of spins in the left block
    std::vector<double> eta;    // 2*cut values in [0, 1/2]
    double entropy{0.0};        // bits
    double cond_k{0.0};         // estimated 1-norm condition number of (V_o | -V_o^*)
    double hermiticity{0.0};    // max |B - B^H| of the block before symmetrization
    double trace{0.0};          // Re tr(B); equals 2*cut
};

// Full 4n x 4n correlation matrix D. Throws NumericalError("singular basis
// concatenation") if the concatenation's condition number exceeds 1e12.
Eigen::MatrixXcd majorana_correlation(const NormalModeBasis& basis, double* cond_k = nullptr);

// Binary entropy in bits of the pair (1/2 + eta, 1/2 - eta); 0 log 0 := 0.
double pair_entropy(double eta);

// Entropy of the leading 4*cut x 4*cut block of D (sites 1..cut vs the rest).
// Requires 1 <= cut < n. Throws NumericalError("eta out of range").
OseeResult osee(const NormalModeBasis& basis, int cut);
OseeResult osee_from_block(const Eigen::MatrixXcd& block, int cut, double cond_k = 0.0);

// Same computation on the complementary (trailing) block.
OseeResult osee_complement(const NormalModeBasis& basis, int cut);

struct OseeScalingPoint {
    int n{0};
    double entropy{0.0};
};

struct OseeScaling {
    std::vector<OseeScalingPoint> points;
    FitResult fit; // linear S vs n over the largest half of sizes
};

// Symmetric cut n/2 for each spec; needs >= 4 specs with increasing even n.
OseeScaling osee_scaling(const std::vector<ChainSpec>& specs);
// Fit stage only, for callers that already hold the entropies.
FitResult fit_largest_half(const std::vector<OseeScalingPoint>& points);

} // namespace xyness
