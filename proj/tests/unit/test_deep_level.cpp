#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "iwahori/deep_level.hpp"
#include "iwahori/io.hpp"

using namespace iwahori;

namespace {

TruncatedSeries mono(const FiniteField& f, int e) { return TruncatedSeries::monomial(f, 1, e); }

}  // namespace

TEST(Scholze, PinnedValuesQ2) {
  const FiniteField f(2, 1);
  const auto one = TruncatedSeries::constant(f, 1);
  EXPECT_EQ(scholze_phi(1, Matrix2::antidiag(mono(f, 1), one)), -3);
  EXPECT_EQ(scholze_phi(1, Matrix2::diag(mono(f, 1), one)), 3);
  EXPECT_EQ(scholze_phi(2, Matrix2::diag(mono(f, 1), one)), 9);
  // val det = 0: outside the support.
  EXPECT_EQ(scholze_phi(1, Matrix2::identity(f)), 0);
  // Trace not integral.
  EXPECT_EQ(scholze_phi(1, Matrix2::diag(mono(f, 2), mono(f, -1))), 0);
  EXPECT_THROW(scholze_phi(0, Matrix2::identity(f)), PreconditionError);
}

TEST(Scholze, LevelIndex) {
  EXPECT_EQ(gl2_level_index(1, 2), 6);
  EXPECT_EQ(gl2_level_index(2, 2), 96);
  EXPECT_EQ(gl2_level_index(1, 3), 48);
}

TEST(Scholze, Invariants) {
  const FiniteField f(3, 1);
  const auto one = TruncatedSeries::constant(f, 1);
  const Matrix2 g = Matrix2::antidiag(mono(f, 1), one);
  EXPECT_EQ(ell_invariant(g), 0);
  EXPECT_EQ(ell_invariant(Matrix2::diag(mono(f, 1), one)), std::nullopt);
  EXPECT_EQ(k_invariant(g), 0);
  EXPECT_EQ(ell_invariant(Matrix2::identity(f)), std::nullopt);
  EXPECT_EQ(k_invariant(Matrix2::diag(mono(f, 2), mono(f, 3))), 2);
  std::mt19937_64 rng(3);
  for (int s = 0; s < 50; ++s) {
    const Matrix2 u = random_kn_element(f, 1, rng);
    const Matrix2 h = Matrix2::diag(mono(f, 2), mono(f, -1));
    EXPECT_EQ(k_invariant(h * u), k_invariant(h));
  }
}

TEST(Scholze, GoldenCorpus) {
  for (int q : {2, 3}) {
    const std::string base = std::string(IWAHORI_TEST_DATA_DIR) + "/scholze_q" + std::to_string(q);
    const ScholzeCorpus corpus = read_scholze_corpus_file(base + ".txt");
    std::ifstream in(base + "_golden.json");
    const Json golden = Json::parse(in);
    ASSERT_EQ(corpus.rows.size(), golden["rows"].size());
    ASSERT_GE(corpus.rows.size(), 200u);
    const FiniteField f = FiniteField::of_order(q);
    for (std::size_t i = 0; i < corpus.rows.size(); ++i) {
      const Matrix2 g = corpus_matrix(corpus.rows[i], f);
      for (int n = 1; n <= 3; ++n) {
        const Json& want = golden["rows"][i]["phi" + std::to_string(n)];
        if (want.is_string()) {
          EXPECT_THROW(scholze_phi(n, g), IndeterminateError) << "line " << corpus.rows[i].line;
        } else {
          EXPECT_EQ(scholze_phi(n, g), want.get<std::int64_t>()) << "line " << corpus.rows[i].line << " n=" << n;
        }
      }
    }
  }
}

TEST(Scholze, KnBiInvariance) {
  const FiniteField f(2, 1);
  const auto one = TruncatedSeries::constant(f, 1);
  const std::vector<Matrix2> points{Matrix2::antidiag(mono(f, 1), one), Matrix2::diag(mono(f, 1), one),
                                    Matrix2::diag(mono(f, 2), mono(f, -1))};
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 2; ++n)
    for (const auto& g : points) {
      const std::int64_t phi = scholze_phi(n, g);
      for (int s = 0; s < 100; ++s)
        EXPECT_EQ(scholze_phi(n, random_kn_element(f, n, rng) * g * random_kn_element(f, n, rng)), phi);
    }
}

TEST(Scholze, LevelCompatibility) {
  const FiniteField f(2, 1);
  const auto one = TruncatedSeries::constant(f, 1);
  EXPECT_TRUE(level_compatibility_check(1, Matrix2::antidiag(mono(f, 1), one)));
  EXPECT_TRUE(level_compatibility_check(1, Matrix2::diag(mono(f, 1), one)));
  EXPECT_EQ(level_coset_representatives(f, 1).size(), 16u);
  const LevelSums s = level_sums(1, Matrix2::diag(mono(f, 1), one));
  EXPECT_EQ(s.coset_sum, s.lower_level);
}

TEST(Scholze, PrecisionStarved) {
  const FiniteField f(2, 1);
  // det is 0 mod t, so val det = 1 cannot be decided.
  const auto unknown = TruncatedSeries(f, 1);
  const auto one = TruncatedSeries::from_coefficients(f, 0, {1}, 1);
  EXPECT_THROW(scholze_phi(1, Matrix2{unknown, one, unknown, one}), IndeterminateError);
  // val det = 0 is decided even at precision 1.
  EXPECT_EQ(scholze_phi(1, Matrix2{one, unknown, unknown, one}), 0);
}

TEST(Corpus, ParsesHeadersAndOverrides) {
  std::istringstream in("# q 3\n# precision 5\n1:1 0 0 0:1\n0:2 0 0 1:1 @exact\n\n0:1,2 0 0 0:1 @2\n");
  const ScholzeCorpus c = read_scholze_corpus(in);
  EXPECT_EQ(c.q, 3);
  EXPECT_EQ(c.precision, 5);
  ASSERT_EQ(c.rows.size(), 3u);
  EXPECT_EQ(c.rows[0].line, 3);
  EXPECT_EQ(c.rows[0].precision, 5);
  EXPECT_EQ(c.rows[1].precision, TruncatedSeries::kExact);
  EXPECT_EQ(c.rows[2].precision, 2);
  EXPECT_EQ(c.rows[2].entries[0].coeffs, (std::vector<int>{1, 2}));
}

TEST(Corpus, Errors) {
  for (const char* text : {"# q 2\n1:1 0 0\n", "# q 2\n1:x 0 0 0\n", "# q 2\n0 0 0 0 @-1\n", "# q 6\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_scholze_corpus(in), std::invalid_argument) << text;
  }
}

TEST(ProPDrinfeld, SpecExamples) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 2));
  for (int p : {2, 3}) {
    const FiniteField f(p, 1);
    const DrinfeldProppEvaluator eval(g, f);
    const std::vector<FiniteField::Elem> t{1, 1};
    AffineWeylElement omega = g.omega_generators()[0];
    if (g.omega_quotient().grade(g.kottwitz_image(omega)) != 1) omega = g.inverse(omega);
    EXPECT_EQ(eval.value(t, omega), Rational(1, 1 - p));
    EXPECT_EQ(eval.value(t, g.translation(Coweight{2, -1})), Rational(0));
    if (p == 3) {
      // t_{e_1}: S = {1}, so the second norm must be 1.
      const std::vector<FiniteField::Elem> off{1, 2};
      EXPECT_EQ(eval.value(off, g.translation(Coweight{1, 0})), Rational(0));
      EXPECT_EQ(eval.value(t, g.translation(Coweight{1, 0})), Rational(2, 4));
    }
  }
}

TEST(ProPDrinfeld, CustomPredicateAndErrors) {
  const AffineWeylGroup g(RootDatum::build(Family::GL, 2));
  const FiniteField f(3, 1);
  const DrinfeldProppEvaluator all(g, f, [](std::span<const int>, std::span<const int>) { return true; });
  const std::vector<FiniteField::Elem> off{1, 2};
  EXPECT_EQ(all.value(off, g.translation(Coweight{1, 0})), Rational(2, 4));
  EXPECT_EQ(all.norm(off), (std::vector<int>{1, 2}));
  const std::vector<FiniteField::Elem> zero{0, 1};
  EXPECT_THROW(all.value(zero, g.identity()), PreconditionError);
  EXPECT_THROW(DrinfeldProppEvaluator(AffineWeylGroup(RootDatum::build(Family::Sp, 4)), f), PreconditionError);
}
