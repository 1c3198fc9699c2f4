#include <gtest/gtest.h>

#include "iwahori/hecke_algebra.hpp"

using namespace iwahori;

namespace {

LaurentPoly q() { return LaurentPoly::q(); }

}  // namespace

TEST(Hecke, QuadraticRelation) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  const HeckeAlgebra h(g);
  for (std::size_t i = 0; i < g.num_simple(); ++i) {
    const HeckeElement ts = h.basis(g.simple(i));
    HeckeElement expected = LaurentPoly::q_minus_one() * ts;
    expected += q() * h.one();
    EXPECT_EQ(h.multiply(ts, ts), expected);
  }
}

TEST(Hecke, BraidRelations) {
  const AffineWeylGroup g(RootDatum::build(Family::Sp, 4));
  const HeckeAlgebra h(g);
  const HeckeElement a = h.basis(g.simple(0)), b = h.basis(g.simple(1));
  // B2 braid relation: sts t = tsts.
  EXPECT_EQ(h.multiply(h.multiply(a, b), h.multiply(a, b)), h.multiply(h.multiply(b, a), h.multiply(b, a)));
}

TEST(Hecke, InverseOfBasisElement) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  const HeckeAlgebra h(g);
  for (const auto& x : admissible_set(g, Coweight{1, 0, 0})) {
    EXPECT_EQ(h.multiply(h.basis(x), h.t_inverse(x)), h.one()) << g.to_string(x);
    EXPECT_EQ(h.multiply(h.t_inverse(x), h.basis(x)), h.one()) << g.to_string(x);
  }
}

TEST(Hecke, LengthAdditivity) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 2));
  const HeckeAlgebra h(g);
  const auto t = g.translation(Coweight{1, 0});
  EXPECT_EQ(h.multiply(h.basis(t), h.basis(t)), h.basis(g.translation(Coweight{2, 0})));
}

TEST(Hecke, BernsteinRelationThetaAdditive) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  const HeckeAlgebra h(g);
  const std::vector<Coweight> lams{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}, {1, -1, 0}, {0, 2, 0}};
  for (const auto& a : lams)
    for (const auto& b : lams) EXPECT_EQ(h.multiply(h.theta(a), h.theta(b)), h.theta(a + b)) << a << b;
}

TEST(Hecke, ThetaOfDominant) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  const HeckeAlgebra h(g);
  const Coweight lam{2, 1, 0};
  EXPECT_EQ(h.theta(lam), LaurentPoly::monomial(-g.length(g.translation(lam))) * h.basis(g.translation(lam)));
  // Independent of the dominant decomposition chosen.
  const Coweight mu{0, 1, 0};
  EXPECT_EQ(h.theta(mu), h.theta_from_decomposition(Coweight{1, 1, 0}, Coweight{1, 0, 0}));
  EXPECT_EQ(h.theta(mu), h.theta_from_decomposition(Coweight{2, 2, 0}, Coweight{2, 1, 0}));
  EXPECT_THROW(h.theta_from_decomposition(mu, Coweight{0, 0, 0}), PreconditionError);
}

TEST(Hecke, CentralityOfBernsteinFunction) {
  const AffineWeylGroup g(RootDatum::build(Family::GSp, 4));
  const HeckeAlgebra h(g);
  EXPECT_TRUE(h.is_central(h.bernstein_function(Coweight{1, 1, 1})));
  EXPECT_FALSE(h.is_central(h.basis(g.translation(Coweight{1, 1, 1}))));
  EXPECT_THROW(h.bernstein_function(Coweight{0, 1, 1}), PreconditionError);
}

TEST(Hecke, DrinfeldGL2) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 2));
  const HeckeAlgebra h(g);
  const HeckeElement z = h.normalized_bernstein_function(Coweight{1, 0});
  ASSERT_EQ(z.size(), 3u);
  for (const auto& [x, c] : z.terms()) {
    if (g.length(x) == 1) EXPECT_EQ(c, LaurentPoly(1));
    else EXPECT_EQ(c, LaurentPoly(1) - q());
  }
}

TEST(Hecke, ParahoricDescent) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  const HeckeAlgebra h(g);
  const auto [sum, poincare] = h.parahoric_descent(h.one(), {0, 1});
  EXPECT_EQ(sum.size(), 6u);
  // [3]_q! = (1 + q)(1 + q + q^2)
  EXPECT_EQ(poincare, (LaurentPoly(1) + q()) * (LaurentPoly(1) + q() + q() * q()));
  EXPECT_THROW(h.parabolic_subgroup({0, 1, 2}), PreconditionError);
  // The idempotent-like relation T_s e = q e for e the sum over W_J.
  const HeckeElement e = sum;
  EXPECT_EQ(h.left_simple(0, e), q() * e);
}
