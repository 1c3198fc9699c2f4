#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/rational.hpp>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/finite_field.hpp"
#include "iwahori/truncated_series.hpp"

namespace iwahori {

using Rational = boost::rational<std::int64_t>;

/// val det(1 - g); nullopt means infinity, which needs an exact zero.
/// Throws IndeterminateError when the precision does not decide.
std::optional<int> ell_invariant(const Matrix2& g);

/// Minimum valuation of the entries. Throws PreconditionError for the zero matrix.
int k_invariant(const Matrix2& g);

/// Scholze's phi_n on GL2 over GF(q)((t)), q the field order:
///   0            unless val det g = 1, tr g in O and g in B_{1-n}
///   -1 - q                 if tr g in pO
///   1 - q^(2 l(g))         if tr g in O^x and l(g) < n + k(g)
///   1 + q^(2(n + k(g)) - 1) if tr g in O^x and l(g) >= n + k(g)
/// Conditions already decided by the tracked digits are used even if other
/// quantities are indeterminate.
std::int64_t scholze_phi(int n, const Matrix2& g);

/// [K : K_n] = q^(4(n-1)) (q^2 - 1)(q^2 - q).
std::int64_t gl2_level_index(int n, std::int64_t q);

/// z_n(g) = (q - 1) / [K : K_n] * phi_n(g).
Rational scholze_z(int n, const Matrix2& g);

/// Representatives 1 + t^n X of K_n / K_{n+1}, X running over M2(GF(q)).
std::vector<Matrix2> level_coset_representatives(const FiniteField& field, int n);

/// sum over K_n / K_{n+1} of z_{n+1}(g k), next to z_n(g).
struct LevelSums {
  Rational coset_sum;
  Rational lower_level;
};
LevelSums level_sums(int n, const Matrix2& g);
bool level_compatibility_check(int n, const Matrix2& g);

/// Random element of K_n = 1 + t^n M2(O), entries exact polynomials of
/// the given number of terms.
Matrix2 random_kn_element(const FiniteField& field, int n, std::mt19937_64& rng, int terms = 6);

/// Decides membership of N_r(t) in T_S(F_p). `norm` holds the norms as
/// integers in [1, p); `critical` is S(w), 1-based.
using TorusPredicate = std::function<bool(std::span<const int> norm, std::span<const int> critical)>;

/// t_j = 1 for every j outside S(w).
TorusPredicate default_torus_predicate();

/// The pro-p Iwahori test function for GL(n), mu = (1, 0^(n-1)), q = p^r:
///   0                                       if w is not in Adm(mu)
///   0                                       if N_r(t) is not in T_S(w)(F_p)
///   (-1)^n (p-1)^(n-|S(w)|) (1-q)^(|S(w)|-n-1)  otherwise
class DrinfeldProppEvaluator {
 public:
  /// `group` must be GL(n) and `field` GF(p^r); both must outlive the evaluator.
  DrinfeldProppEvaluator(const AffineWeylGroup& group, const FiniteField& field,
                         TorusPredicate predicate = default_torus_predicate());

  /// t: n nonzero field elements.
  Rational value(std::span<const FiniteField::Elem> t, const AffineWeylElement& w) const;
  bool in_admissible_set(const AffineWeylElement& w) const { return adm_.count(w) != 0; }
  const std::vector<AffineWeylElement>& admissible() const noexcept { return adm_list_; }
  std::vector<int> norm(std::span<const FiniteField::Elem> t) const;

 private:
  const AffineWeylGroup& g_;
  const FiniteField& f_;
  TorusPredicate pred_;
  std::vector<AffineWeylElement> adm_list_;
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> adm_;
};

Rational drinfeld_propp_value(const AffineWeylGroup& group, const FiniteField& field,
                              std::span<const FiniteField::Elem> t, const AffineWeylElement& w,
                              const TorusPredicate& predicate = default_torus_predicate());

/// Corpus of 2x2 matrices, one per line:
///   # q 2
///   # precision 12
///   1:1 0 0:1,1 0:1 [@N | @exact]
/// Entry "v:c0,c1,..." is t^v (c0 + c1 t + ...), "0" is zero. Each entry is
/// known modulo t^N with N the line override or the file precision.
struct CorpusEntry {
  int valuation = 0;
  std::vector<int> coeffs;  // empty for zero
};

struct CorpusRow {
  int line = 0;
  std::array<CorpusEntry, 4> entries;
  std::array<std::string, 4> tokens;
  int precision = TruncatedSeries::kExact;
  std::string source;
};

struct ScholzeCorpus {
  int q = 0;
  int precision = TruncatedSeries::kExact;
  std::vector<CorpusRow> rows;
};

/// Throws std::invalid_argument with the line number on malformed input.
ScholzeCorpus read_scholze_corpus(std::istream& in);
ScholzeCorpus read_scholze_corpus_file(const std::string& path);
Matrix2 corpus_matrix(const CorpusRow& row, const FiniteField& field);

}  // namespace iwahori
