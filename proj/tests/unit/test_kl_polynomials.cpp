#include <gtest/gtest.h>

#include "iwahori/kl_polynomials.hpp"

using namespace iwahori;

TEST(RPolynomials, SmallValues) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 2));
  const RPolynomials r(g);
  const auto e = g.identity();
  const auto s = g.simple(0);
  EXPECT_EQ(r(e, e), QPolynomial(1));
  EXPECT_EQ(r(e, s), QPolynomial(std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(r(s, e), QPolynomial());
  // Different Omega-components.
  EXPECT_EQ(r(e, g.omega_generators()[0]), QPolynomial());
}

TEST(RPolynomials, DihedralLengthTwo) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  const RPolynomials r(g);
  const auto st = g.multiply(g.simple(0), g.simple(1));
  const QPolynomial qm1(std::vector<std::int64_t>{-1, 1});
  EXPECT_EQ(r(g.identity(), st), qm1 * qm1);
  EXPECT_EQ(r(g.simple(0), st), qm1);
}

TEST(RPolynomials, InverseSymmetry) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  const RPolynomials r(g);
  const auto adm = admissible_set(g, Coweight{1, 1, 0});
  for (const auto& x : adm)
    for (const auto& y : adm) EXPECT_EQ(r(x, y), r(g.inverse(x), g.inverse(y)));
  EXPECT_GT(r.cache_size(), 0u);
}

TEST(ClosedForm, MatchesThetaRoute) {
  for (const auto& [f, n, mu] : std::vector<std::tuple<Family, int, Coweight>>{
           {Family::GL, 3, {1, 1, 0}}, {Family::GSp, 4, {1, 1, 1}}, {Family::GL, 2, {0, 0}}}) {
    const AffineWeylGroup g(RootDatum::build(f, n));
    const HeckeAlgebra h(g);
    EXPECT_EQ(closed_form_bernstein(g, mu), h.normalized_bernstein_function(mu)) << mu;
  }
}

TEST(ClosedForm, PGL3FromConfig) {
  const AffineWeylGroup g(RootDatum::from_config_file(IWAHORI_TEST_DATA_DIR "/pgl3.cfg"));
  const HeckeAlgebra h(g);
  for (const Coweight& mu : {Coweight{1, 0}, Coweight{0, 1}}) {
    const HeckeElement z = closed_form_bernstein(g, mu);
    EXPECT_EQ(z, h.normalized_bernstein_function(mu));
    EXPECT_EQ(z.size(), 7u);
    EXPECT_TRUE(h.is_central(z));
  }
}

TEST(ClosedForm, Preconditions) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 3));
  EXPECT_THROW(closed_form_bernstein(g, Coweight{2, 0, 0}), PreconditionError);
  EXPECT_THROW(closed_form_bernstein(g, Coweight{0, 1, 0}), PreconditionError);
}
