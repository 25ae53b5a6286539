#include "helpers.hpp"

#include "xyness/error.hpp"
#include "xyness/linalg.hpp"
#include "xyness/oracle.hpp"
#include "xyness/spectral.hpp"
#include "xyness/theory.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace xyness;
using xyness::testing::driven;

TEST(Diagonalize, RandomSpecsSatisfyInvariants) {
    std::mt19937_64 rng(2024);
    for (int n : {2, 3, 5, 8, 16, 33}) {
        for (int t = 0; t < 4; ++t) {
            const ChainSpec s = xyness::testing::random_spec(n, rng);
            const NormalModeBasis b = diagonalize(build_structure_matrix(s));
            ASSERT_EQ(b.beta.size(), 2 * n);
            EXPECT_LT(bilinear_gram_deviation(b), 1e-8) << to_string(s);
            EXPECT_LT(max_relative_residual(b), 1e-10) << to_string(s);
            EXPECT_GE(b.beta.real().minCoeff(), 0.0);
        }
    }
}

TEST(Diagonalize, EigenpairsAndOrdering) {
    const StructureMatrix a = build_structure_matrix(driven(6, 0.5, 0.3));
    const NormalModeBasis b = diagonalize(a);
    for (int j = 0; j < 12; ++j) {
        EXPECT_LT((a.a * b.plus(j) - b.beta(j) * b.plus(j)).norm(), 1e-10);
        EXPECT_LT((a.a * b.minus(j) + b.beta(j) * b.minus(j)).norm(), 1e-10);
        EXPECT_NEAR(std::abs((b.plus(j).transpose() * b.minus(j))(0) - 1.0), 0.0, 1e-10);
    }
    for (int j = 1; j < 12; ++j) EXPECT_LE(b.beta(j - 1).imag(), b.beta(j).imag() + 1e-9);
}

TEST(Diagonalize, DegenerateRapiditiesAreBiorthogonalized) {
    // Two decoupled copies of the same chain: every rapidity is doubly degenerate,
    // so the raw eigenvectors need re-bi-orthogonalization within each cluster.
    const Eigen::MatrixXcd small = build_structure_matrix(driven(2, 0.5, 0.75)).a;
    const Eigen::MatrixXcd a = kron(Eigen::MatrixXcd::Identity(2, 2), small);
    const NormalModeBasis b = diagonalize(a);
    ASSERT_EQ(b.cluster_sizes.size(), 4u);
    for (int c : b.cluster_sizes) EXPECT_EQ(c, 2);
    EXPECT_LT(bilinear_gram_deviation(b), 1e-8);
    EXPECT_LT(max_relative_residual(b), 1e-10);
}

TEST(Diagonalize, RejectsWrongShape) {
    EXPECT_THROW(diagonalize(Eigen::MatrixXcd::Zero(6, 6)), NumericalError);
}

TEST(Diagonalize, PairingFailureOnNonAntisymmetricInput) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (int i = 0; i < 8; ++i) m(i, i) = double(i + 1);
    try {
        diagonalize(m);
        FAIL();
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("pairing failure"), std::string::npos);
    }
}

TEST(LiouvilleanSpectrum, EvenSectorMatchesOracle) {
    std::mt19937_64 rng(17);
    for (int n : {2, 3}) {
        for (int t = 0; t < 3; ++t) {
            const ChainSpec s = xyness::testing::random_spec(n, rng);
            const NormalModeBasis b = diagonalize(build_structure_matrix(s));
            const auto l = oracle::build_liouvillean(s);
            const double d = linalg::multiset_distance(mode_sum_spectrum(b, ParitySector::even),
                                                       oracle::sector_spectrum(l, true));
            EXPECT_LT(d, 1e-8) << to_string(s);
        }
    }
}

TEST(LiouvilleanSpectrum, ModeSumCounts) {
    const NormalModeBasis b = diagonalize(build_structure_matrix(driven(2, 0.5, 0.3)));
    EXPECT_EQ(mode_sum_spectrum(b).size(), 16);
    EXPECT_EQ(mode_sum_spectrum(b, ParitySector::even).size(), 8);
    EXPECT_EQ(mode_sum_spectrum(b, ParitySector::odd).size(), 8);
    EXPECT_NEAR(std::abs(mode_sum_spectrum(b)(0)), 0.0, 1e-15);
}

TEST(Gap, PositiveAndConsistent) {
    const NormalModeBasis b = diagonalize(build_structure_matrix(driven(20, 0.5, 0.9)));
    const GapReport g = relaxation_gap(b);
    EXPECT_TRUE(g.unique);
    EXPECT_NEAR(g.delta, 2.0 * b.beta(g.min_rapidity_index).real(), 1e-15);
    EXPECT_NEAR(g.delta, 2.0 * b.beta.real().minCoeff(), 1e-15);
}

TEST(Gap, ShrinksWithSize) {
    double prev = 1.0;
    for (int n : {10, 20, 40}) {
        const double d = relaxation_gap(diagonalize(build_structure_matrix(driven(n, 0.5, 0.9)))).delta;
        EXPECT_LT(d, prev);
        prev = d;
    }
}

TEST(Rapidities, BulkImaginaryPartsFollowDispersion) {
    // Im beta of bulk modes lies on the quasi-particle band, within finite-size slack.
    const double gamma = 0.5, h = 0.9;
    const NormalModeBasis b = diagonalize(build_structure_matrix(driven(160, gamma, h)));
    double emin = 1e9, emax = 0.0;
    for (int k = 0; k <= 2000; ++k) {
        const double e = dispersion(gamma, h, std::numbers::pi * k / 2000.0);
        emin = std::min(emin, e);
        emax = std::max(emax, e);
    }
    // Boundary modes may sit off the band; the bulk may not.
    int outside = 0;
    for (Eigen::Index j = 0; j < b.beta.size(); ++j) {
        const double im = std::abs(b.beta(j).imag());
        if (im < emin - 0.01 || im > emax + 0.01) ++outside;
    }
    EXPECT_LE(outside, 4);
}

TEST(Linalg, MultisetDistance) {
    Eigen::VectorXcd x(3), y(3);
    x << 1.0, 2.0, std::complex<double>(0, 3);
    y << std::complex<double>(0, 3), 1.0 + 1e-9, 2.0;
    EXPECT_NEAR(linalg::multiset_distance(x, y), 1e-9, 1e-12);
}

TEST(Linalg, SpectralNormAndEig) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = -4.0;
    d(2, 2) = 2.0;
    EXPECT_NEAR(linalg::spectral_norm(d), 4.0, 4e-8);
    const auto e = linalg::eig(d);
    EXPECT_LT((d * e.vectors - e.vectors * e.values.asDiagonal()).norm(), 1e-12);
}
