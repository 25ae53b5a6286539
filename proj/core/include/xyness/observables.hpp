// observables.hpp: NESS two-point table and Wick-factorized spin observables

#pragma once

#include "xyness/spectral.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace xyness {

// G(j-1, k-1) = <1| c_j c_k |NESS>, Majorana labels j,k in 1..2n.
// The physical correlation is tr(w_j w_k rho) = delta_jk + G_jk.
struct TwoPointTable {
    int n{0};
    Eigen::MatrixXcd g;
    std::vector<std::string> warnings;
};

TwoPointTable two_point_table(const NormalModeBasis& basis);

// max_{j != k} |Re G_jk| and max_{j != k} |G_jk + G_kj|.
double two_point_real_residual(const TwoPointTable& t);
double two_point_antisymmetry_residual(const TwoPointTable& t);

// <sigma^z_m> = -i G_{2m-1,2m}, m = 1..n.
std::vector<double> magnetization(const TwoPointTable& t);

// Connected sigma^z sigma^z correlator; diagonal is zero by convention.
struct CorrelationMatrix {
    int n{0};
    Eigen::MatrixXd c;
    double max_imag{0.0}; // largest discarded imaginary part
};

CorrelationMatrix spin_spin_matrix(const TwoPointTable& t);

// Pfaffian of a complex antisymmetric matrix: cofactor expansion up to 8x8,
// Parlett-Reid elimination above.
std::complex<double> pfaffian(const Eigen::MatrixXcd& m);
std::complex<double> pfaffian_expansion(const Eigen::MatrixXcd& m);
std::complex<double> pfaffian_parlett_reid(Eigen::MatrixXcd m);

// tr(w_{j1} w_{j2} ... w_{j2k} rho) for distinct 1-based labels, 2k <= 12.
std::complex<double> majorana_moment(const TwoPointTable& t, std::span<const int> labels);

struct ProfilePoint {
    int r{0};
    double c{0.0};
    int count{0};
};

// C(r): mean of C_{l,m} over pairs with |l-m| = r and |l+m-n| <= band * n (1-based l, m).
std::vector<ProfilePoint> distance_profile(const CorrelationMatrix& cm, double band = 0.08);

// Mean of C_{l,m} over all pairs with |l-m| > n/2.
double residual_correlator(const CorrelationMatrix& cm);

} // namespace xyness
