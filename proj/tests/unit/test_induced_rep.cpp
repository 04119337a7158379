#include <gtest/gtest.h>

#include "asai/induced_rep.hpp"
#include "generators.hpp"

namespace asai {
namespace {

using testing::Gen;
using testing::frac;

constexpr std::array<ShapeKind, 4> kShapes{ShapeKind::Split, ShapeKind::QuadUnramTimesLine,
                                          ShapeKind::CubicUnramField, ShapeKind::CubicTameRamified};

RationalFunction c(long n, long d = 1) { return constant(frac(n, d)); }

TEST(Matrix, FaddeevLeVerrierSmallCases) {
  // det(1 - M T) for M = [[a, b], [c, d]] is 1 - (a + d) T + (ad - bc) T^2.
  Gen g;
  for (int k = 0; k < 30; ++k) {
    RationalFunction a = constant(g.rational()), b = constant(g.rational()), cc = constant(g.rational()),
                     d = constant(g.rational());
    auto coeffs = det_one_minus_t({{a, b}, {cc, d}});
    ASSERT_EQ(coeffs.size(), 3u);
    EXPECT_EQ(coeffs[0], c(1));
    EXPECT_EQ(coeffs[1], -(a + d));
    EXPECT_EQ(coeffs[2], a * d - b * cc);
  }
  // A 3-cycle permutation: det(1 - P T) = 1 - T^3.
  Matrix p{{c(0), c(0), c(1)}, {c(1), c(0), c(0)}, {c(0), c(1), c(0)}};
  auto coeffs = det_one_minus_t(p);
  EXPECT_EQ(coeffs[1], c(0));
  EXPECT_EQ(coeffs[2], c(0));
  EXPECT_EQ(coeffs[3], c(-1));
}

TEST(InducedRep, SymbolicMatchesClosedForm) {
  const std::map<ShapeKind, std::size_t> dims{{ShapeKind::Split, 8},
                                              {ShapeKind::QuadUnramTimesLine, 8},
                                              {ShapeKind::CubicUnramField, 8},
                                              {ShapeKind::CubicTameRamified, 4}};
  for (auto k : kShapes) {
    AsaiRepData rep = symbolic_rep(k);
    InducedRepResult r = induced_rep_oracle(rep);
    EXPECT_EQ(r.invariant_dim, dims.at(k)) << shape_name(k);
    EXPECT_EQ(r.L, asai_cube_L(rep)) << shape_name(k);
  }
}

TEST(InducedRep, RandomRationalData) {
  Gen g;
  for (auto k : kShapes) {
    for (long p : {5L, 7L}) {
      for (int n = 0; n < 10; ++n) {
        AsaiRepData rep = symbolic_rep(k, p);
        for (auto& s : rep.satake) s = {constant(g.nonzero_rational(7, 5)), constant(g.nonzero_rational(7, 5))};
        EXPECT_EQ(induced_rep_oracle(rep).L, asai_cube_L(rep)) << shape_name(k);
      }
    }
  }
}

TEST(InducedRep, SplitFrobeniusIsDiagonal) {
  InducedRepResult r = induced_rep_oracle(symbolic_rep(ShapeKind::Split));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (i != j) EXPECT_TRUE(r.frobenius[i][j].is_zero());
    }
  }
  EXPECT_EQ(r.frobenius[7][7], var(Var::b1) * var(Var::b2) * var(Var::b3));
}

TEST(InducedRep, TameEigenvalues) {
  // On the inertia invariants the Frobenius has characteristic roots α^3, β^3, α^2β, αβ^2.
  for (long p : {5L, 7L, 11L, 13L}) {
    AsaiRepData rep = symbolic_rep(ShapeKind::CubicTameRamified, p);
    InducedRepResult r = induced_rep_oracle(rep);
    const RationalFunction a = var(Var::a1), b = var(Var::b1), one(Rational(1));
    RationalFunction det;
    for (std::size_t k = 0; k < r.det_coeffs.size(); ++k) det += r.det_coeffs[k] * T().pow(static_cast<int>(k));
    EXPECT_EQ(det, (one - a.pow(3) * T()) * (one - b.pow(3) * T()) * (one - a * a * b * T()) * (one - a * b * b * T()));
    // φ τ φ^{-1} = τ^q.
    Matrix tq = identity_matrix(8);
    for (long k = 0; k < p; ++k) tq = r.inertia * tq;
    EXPECT_TRUE(matrices_equal(r.frobenius * r.inertia, tq * r.frobenius));
  }
}

TEST(InducedRep, UnramifiedCubicFrobeniusCubed) {
  InducedRepResult r = induced_rep_oracle(symbolic_rep(ShapeKind::CubicUnramField));
  Matrix f3 = r.frobenius * r.frobenius * r.frobenius;
  const RationalFunction a = var(Var::a1), b = var(Var::b1);
  // Frobenius^3 lies in W_E and acts by diag(α, β) on every tensor slot.
  for (std::size_t i = 0; i < 8; ++i) {
    RationalFunction want(Rational(1));
    for (int s = 0; s < 3; ++s) want *= (i >> s & 1U) ? b : a;
    EXPECT_EQ(f3[i][i], want);
  }
}

}  // namespace
}  // namespace asai
