#include "iwahori/deep_level.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "iwahori/laurent_poly.hpp"

namespace iwahori {

namespace {

enum class Tri { No, Yes, Unknown };

// val(s) >= bound ?
Tri valuation_at_least(const TruncatedSeries& s, int bound) {
  if (auto v = s.valuation()) return *v >= bound ? Tri::Yes : Tri::No;
  return s.precision() >= bound ? Tri::Yes : Tri::Unknown;
}

// val(s) == target ?
Tri valuation_equals(const TruncatedSeries& s, int target) {
  if (auto v = s.valuation()) return *v == target ? Tri::Yes : Tri::No;
  return s.precision() > target ? Tri::No : Tri::Unknown;
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

std::optional<int> ell_invariant(const Matrix2& g) {
  const TruncatedSeries d = g.one_minus().det();
  if (auto v = d.valuation()) return *v;
  if (d.is_exact()) return std::nullopt;
  throw IndeterminateError("det(1 - g) vanishes to precision " + std::to_string(d.precision()));
}

int k_invariant(const Matrix2& g) {
  const TruncatedSeries* entries[] = {&g.a, &g.b, &g.c, &g.d};
  std::optional<int> m;
  bool all_exact_zero = true;
  for (const auto* e : entries) {
    if (auto v = e->valuation()) m = m ? std::min(*m, *v) : *v;
    if (!(e->is_known_zero() && e->is_exact())) all_exact_zero = false;
  }
  if (all_exact_zero) throw PreconditionError("k_invariant of the zero matrix");
  if (!m) throw IndeterminateError("every entry vanishes to its precision");
  for (const auto* e : entries)
    if (e->is_known_zero() && e->precision() < *m)
      throw IndeterminateError("an entry known only modulo t^" + std::to_string(e->precision()));
  return *m;
}

std::int64_t scholze_phi(int n, const Matrix2& g) {
  if (n < 1) throw PreconditionError("scholze_phi needs n >= 1");
  const std::int64_t q = g.a.field().order();
  const TruncatedSeries tr = g.trace();

  const Tri det_ok = valuation_equals(g.det(), 1);
  const Tri tr_ok = valuation_at_least(tr, 0);
  Tri level_ok = Tri::Yes;
  for (const auto* e : {&g.a, &g.b, &g.c, &g.d}) {
    const Tri t = valuation_at_least(*e, 1 - n);
    if (t == Tri::No) level_ok = Tri::No;
    else if (t == Tri::Unknown && level_ok == Tri::Yes) level_ok = Tri::Unknown;
  }
  if (det_ok == Tri::No || tr_ok == Tri::No || level_ok == Tri::No) return 0;
  if (det_ok == Tri::Unknown || tr_ok == Tri::Unknown || level_ok == Tri::Unknown)
    throw IndeterminateError("support conditions not decided at this precision");

  const Tri tr_small = valuation_at_least(tr, 1);
  if (tr_small == Tri::Unknown) throw IndeterminateError("trace not resolved modulo t");
  if (tr_small == Tri::Yes) return -1 - q;

  const int threshold = n + k_invariant(g);
  const TruncatedSeries d = g.one_minus().det();
  if (auto ell = d.valuation()) {
    if (*ell < threshold) return 1 - ipow(q, 2 * *ell);
  } else if (!d.is_exact() && d.precision() < threshold) {
    throw IndeterminateError("det(1 - g) vanishes to precision " + std::to_string(d.precision()) +
                             " below the threshold " + std::to_string(threshold));
  }
  return 1 + ipow(q, 2 * threshold - 1);
}

std::int64_t gl2_level_index(int n, std::int64_t q) {
  if (n < 1) throw PreconditionError("gl2_level_index needs n >= 1");
  return checked_mul(ipow(q, 4 * (n - 1)), checked_mul(q * q - 1, q * q - q));
}

Rational scholze_z(int n, const Matrix2& g) {
  const std::int64_t q = g.a.field().order();
  return Rational(q - 1, gl2_level_index(n, q)) * Rational(scholze_phi(n, g));
}

std::vector<Matrix2> level_coset_representatives(const FiniteField& field, int n) {
  std::vector<Matrix2> out;
  const auto q = static_cast<FiniteField::Elem>(field.order());
  const Matrix2 one = Matrix2::identity(field);
  for (FiniteField::Elem x0 = 0; x0 < q; ++x0)
    for (FiniteField::Elem x1 = 0; x1 < q; ++x1)
      for (FiniteField::Elem x2 = 0; x2 < q; ++x2)
        for (FiniteField::Elem x3 = 0; x3 < q; ++x3) {
          auto m = [&](FiniteField::Elem c) { return TruncatedSeries::monomial(field, c, n); };
          out.push_back(one + Matrix2{m(x0), m(x1), m(x2), m(x3)});
        }
  return out;
}

LevelSums level_sums(int n, const Matrix2& g) {
  LevelSums s{Rational(0), scholze_z(n, g)};
  for (const auto& k : level_coset_representatives(g.a.field(), n)) s.coset_sum += scholze_z(n + 1, g * k);
  return s;
}

bool level_compatibility_check(int n, const Matrix2& g) {
  const LevelSums s = level_sums(n, g);
  return s.coset_sum == s.lower_level;
}

Matrix2 random_kn_element(const FiniteField& field, int n, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> pick(0, field.order() - 1);
  auto entry = [&] {
    std::vector<FiniteField::Elem> c(static_cast<std::size_t>(terms));
    for (auto& x : c) x = static_cast<FiniteField::Elem>(pick(rng));
    return TruncatedSeries::from_coefficients(field, n, c);
  };
  Matrix2 x{entry(), entry(), entry(), entry()};
  return Matrix2::identity(field) + x;
}

TorusPredicate default_torus_predicate() {
  return [](std::span<const int> norm, std::span<const int> critical) {
    for (std::size_t j = 0; j < norm.size(); ++j) {
      const int label = static_cast<int>(j + 1);
      const bool in_s = std::find(critical.begin(), critical.end(), label) != critical.end();
      if (!in_s && norm[j] != 1) return false;
    }
    return true;
  };
}

DrinfeldProppEvaluator::DrinfeldProppEvaluator(const AffineWeylGroup& group, const FiniteField& field,
                                               TorusPredicate predicate)
    : g_(group), f_(field), pred_(std::move(predicate)) {
  if (g_.root_datum().family() != Family::GL) throw PreconditionError("pro-p Drinfeld evaluator needs GL(n)");
  const std::size_t n = g_.lattice_rank();
  adm_list_ = admissible_set(g_, Coweight::unit(n, 0));
  adm_.insert(adm_list_.begin(), adm_list_.end());
}

std::vector<int> DrinfeldProppEvaluator::norm(std::span<const FiniteField::Elem> t) const {
  std::vector<int> out;
  for (auto x : t) out.push_back(f_.norm_to_prime_field(x));
  return out;
}

Rational DrinfeldProppEvaluator::value(std::span<const FiniteField::Elem> t, const AffineWeylElement& w) const {
  const int n = static_cast<int>(g_.lattice_rank());
  if (static_cast<int>(t.size()) != n) throw PreconditionError("torus point has the wrong number of entries");
  for (auto x : t)
    if (x == 0 || x >= static_cast<FiniteField::Elem>(f_.order()))
      throw PreconditionError("torus point entries must be nonzero field elements");
  if (w.translation.size() != static_cast<std::size_t>(n)) throw PreconditionError("w is not in the GL(n) group");
  if (!in_admissible_set(w)) return Rational(0);
  const std::vector<int> s = critical_indices(g_, w);
  const std::vector<int> nt = norm(t);
  if (!pred_(nt, s)) return Rational(0);
  const int size = static_cast<int>(s.size());
  const std::int64_t p = f_.characteristic();
  const std::int64_t q = f_.order();
  Rational v((n % 2 == 0) ? 1 : -1);
  v *= Rational(ipow(p - 1, n - size));
  v /= Rational(ipow(1 - q, n + 1 - size));
  return v;
}

Rational drinfeld_propp_value(const AffineWeylGroup& group, const FiniteField& field,
                              std::span<const FiniteField::Elem> t, const AffineWeylElement& w,
                              const TorusPredicate& predicate) {
  return DrinfeldProppEvaluator(group, field, predicate).value(t, w);
}

namespace {

CorpusEntry parse_entry(const std::string& tok, int line) {
  CorpusEntry e;
  if (tok == "0") return e;
  const auto colon = tok.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("line " + std::to_string(line) + ": bad entry '" + tok + "'");
  try {
    std::size_t used = 0;
    e.valuation = std::stoi(tok.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    std::stringstream ss(tok.substr(colon + 1));
    std::string c;
    while (std::getline(ss, c, ',')) {
      e.coeffs.push_back(std::stoi(c, &used));
      if (used != c.size()) throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line) + ": bad entry '" + tok + "'");
  }
  if (e.coeffs.empty()) throw std::invalid_argument("line " + std::to_string(line) + ": entry without coefficients");
  return e;
}

int parse_precision(const std::string& tok, int line) {
  if (tok == "exact") return TruncatedSeries::kExact;
  try {
    std::size_t used = 0;
    const int p = std::stoi(tok, &used);
    if (used == tok.size() && p >= 0) return p;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("line " + std::to_string(line) + ": bad precision '" + tok + "'");
}

}  // namespace

ScholzeCorpus read_scholze_corpus(std::istream& in) {
  ScholzeCorpus corpus;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ls(text);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key, value;
      if (first == "#") ls >> key;
      else key = first.substr(1);
      if (key == "q" || key == "precision") {
        if (!(ls >> value)) throw std::invalid_argument("line " + std::to_string(line) + ": missing header value");
        if (key == "q") {
          corpus.q = parse_precision(value, line);
          try {
            FiniteField::of_order(corpus.q);
          } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(line) + ": " + e.what());
          }
        } else {
          corpus.precision = parse_precision(value, line);
        }
      }
      continue;
    }
    CorpusRow row;
    row.line = line;
    row.source = text;
    row.precision = corpus.precision;
    std::vector<std::string> toks{first};
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty() && toks.back()[0] == '@') {
      row.precision = parse_precision(toks.back().substr(1), line);
      toks.pop_back();
    }
    if (toks.size() != 4) throw std::invalid_argument("line " + std::to_string(line) + ": expected 4 entries");
    for (std::size_t i = 0; i < 4; ++i) {
      row.entries[i] = parse_entry(toks[i], line);
      row.tokens[i] = toks[i];
    }
    corpus.rows.push_back(std::move(row));
  }
  return corpus;
}

ScholzeCorpus read_scholze_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open corpus " + path);
  return read_scholze_corpus(in);
}

Matrix2 corpus_matrix(const CorpusRow& row, const FiniteField& field) {
  auto series = [&](const CorpusEntry& e) {
    std::vector<FiniteField::Elem> c;
    for (int x : e.coeffs) {
      if (x < 0 || x >= field.order())
        throw std::invalid_argument("line " + std::to_string(row.line) + ": coefficient outside GF(" +
                                    std::to_string(field.order()) + ")");
      c.push_back(static_cast<FiniteField::Elem>(x));
    }
    return TruncatedSeries::from_coefficients(field, e.valuation, c, row.precision);
  };
  return {series(row.entries[0]), series(row.entries[1]), series(row.entries[2]), series(row.entries[3])};
}

}  // namespace iwahori
