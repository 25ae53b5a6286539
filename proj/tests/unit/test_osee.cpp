#include "helpers.hpp"

#include "xyness/error.hpp"
#include "xyness/oracle.hpp"
#include "xyness/osee.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace xyness;
using xyness::testing::driven;

namespace {
NormalModeBasis basis_for(const ChainSpec& s) { return diagonalize(build_structure_matrix(s)); }
} // namespace

TEST(PairEntropy, Limits) {
    EXPECT_NEAR(pair_entropy(0.0), 1.0, 1e-15);
    EXPECT_EQ(pair_entropy(0.5), 0.0);
    EXPECT_NEAR(pair_entropy(0.25), -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25)), 1e-15);
}

TEST(Osee, MatchesOracleSvd) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 4; ++t) {
        const ChainSpec s = xyness::testing::random_spec(4, rng);
        const NormalModeBasis b = basis_for(s);
        const auto ness = oracle::steady_state(oracle::build_liouvillean(s));
        for (int cut = 1; cut < 4; ++cut)
            EXPECT_NEAR(osee(b, cut).entropy, oracle::exact_osee(ness, cut), 1e-8) << to_string(s) << " cut " << cut;
    }
}

TEST(Osee, EqualRatesGiveZero) {
    const OseeResult r = osee(basis_for({40, 0.5, 0.3, 0.2, 0.2, 0.6, 0.6}), 20);
    EXPECT_LT(r.entropy, 1e-7);
}

TEST(Osee, EtaRangeAndShape) {
    const OseeResult r = osee(basis_for(driven(24, 0.5, 0.6)), 12);
    EXPECT_EQ(r.cut, 12);
    EXPECT_EQ(r.eta.size(), 24u);
    for (double e : r.eta) {
        EXPECT_GE(e, 0.0);
        EXPECT_LE(e, 0.5);
    }
    EXPECT_GT(r.entropy, 0.0);
    EXPECT_LT(r.hermiticity, 1e-8);
    EXPECT_NEAR(r.trace, 24.0, 1e-8);
}

TEST(Osee, ComplementSymmetry) {
    const NormalModeBasis b = basis_for(driven(16, 0.5, 0.7));
    for (int cut : {3, 8, 11}) EXPECT_NEAR(osee(b, cut).entropy, osee_complement(b, cut).entropy, 1e-8);
}

TEST(Osee, CutValidation) {
    const NormalModeBasis b = basis_for(driven(6, 0.5, 0.7));
    EXPECT_THROW(osee(b, 0), ValidationError);
    EXPECT_THROW(osee(b, 6), ValidationError);
}

TEST(Osee, MajoranaCorrelationIsAProjectorLikeBlock) {
    double cond = 0.0;
    const Eigen::MatrixXcd d = majorana_correlation(basis_for(driven(8, 0.5, 0.6)), &cond);
    EXPECT_EQ(d.rows(), 32);
    EXPECT_GT(cond, 0.0);
    EXPECT_LT((d - d.adjoint()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(OseeScaling, SaturatesInShortRangePhase) {
    std::vector<ChainSpec> specs;
    for (int n : {20, 30, 40, 50}) specs.push_back(driven(n, 0.5, 0.9));
    const OseeScaling sc = osee_scaling(specs);
    EXPECT_EQ(sc.points.size(), 4u);
    EXPECT_LT(std::abs(sc.fit.slope()), 0.002);
}

TEST(OseeScaling, Validation) {
    std::vector<ChainSpec> specs = {driven(20, 0.5, 0.9), driven(10, 0.5, 0.9), driven(30, 0.5, 0.9), driven(40, 0.5, 0.9)};
    EXPECT_THROW(osee_scaling(specs), ValidationError);
    specs = {driven(20, 0.5, 0.9), driven(21, 0.5, 0.9), driven(30, 0.5, 0.9), driven(40, 0.5, 0.9)};
    EXPECT_THROW(osee_scaling(specs), ValidationError);
}
