// hecke: command-line front end to the iwahori library.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "iwahori/bernstein_center.hpp"
#include "iwahori/deep_level.hpp"
#include "iwahori/io.hpp"
#include "iwahori/kl_polynomials.hpp"
#include "iwahori/transfer.hpp"

using namespace iwahori;

namespace {

constexpr int kParseError = 2;
constexpr int kPrecondition = 3;
constexpr int kConsistency = 4;

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group = "GL:2";
  std::string mu;
  std::string method = "theta";
  std::optional<std::int64_t> q;
  std::string out;
  std::string format;  // empty: the natural format of the command
  std::string corpus;
  std::string levi;
  int r = 1;
  int n = 1;
  int p = 2;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string torus;
  std::string translation;
  std::string word;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

Json header(const std::string& schema, const RootDatum& rd, const Options& o) {
  Json j;
  j["schema"] = schema;
  j["group"] = o.group.rfind("custom:", 0) == 0 ? rd.name() : o.group;
  return j;
}

Coweight dominant_mu(const RootDatum& rd, const Options& o) {
  const Coweight mu = parse_coweight(rd, o.mu);
  if (!rd.is_dominant(mu)) throw PreconditionError("mu " + mu.to_string() + " is not dominant");
  return mu;
}

int cmd_adm(const Options& o) {
  const RootDatum rd = parse_group_spec(o.group);
  const Coweight mu = parse_coweight(rd, o.mu);
  const AffineWeylGroup g(rd);
  const auto adm = admissible_set(g, mu);
  Json j = header("iwahori.adm.v1", rd, o);
  j["mu"] = mu.to_vector();
  j["count"] = adm.size();
  Json els = Json::array();
  for (const auto& x : adm) {
    Json e = element_json(g, x);
    e["length"] = g.length(x);
    const OmegaElement k = g.kottwitz_image(x);
    if (g.omega_quotient().integer_graded()) e["kappa"] = g.omega_quotient().grade(k);
    else e["kappa"] = g.omega_quotient().label(k);
    els.push_back(std::move(e));
  }
  j["elements"] = std::move(els);
  emit(o, dump(j));
  return 0;
}

int cmd_zmu(const Options& o) {
  const RootDatum rd = parse_group_spec(o.group);
  const Coweight mu = dominant_mu(rd, o);
  const AffineWeylGroup g(rd);
  HeckeElement z;
  if (o.method == "theta") {
    z = HeckeAlgebra(g).normalized_bernstein_function(mu);
  } else if (o.method == "closed") {
    z = closed_form_bernstein(g, mu);
  } else {
    throw std::invalid_argument("unknown method '" + o.method + "'");
  }
  Json j = header("iwahori.zmu.v1", rd, o);
  j["mu"] = mu.to_vector();
  j["normalization"] = "v^l(t_mu) z_mu";
  j["length_t_mu"] = g.length(g.translation(mu));
  if (o.q) j["q"] = *o.q;
  j["terms"] = hecke_json(g, z, o.q);
  emit(o, dump(j));
  return 0;
}

int cmd_transfer(const Options& o) {
  const RootDatum rd = parse_group_spec(o.group);
  const Coweight mu = dominant_mu(rd, o);
  const AffineWeylGroup g(rd);
  const HeckeAlgebra h(g);
  const int lmu = g.length(g.translation(mu));
  const GradedFunction fiber = kottwitz_fiber_integrate(g, h.normalized_bernstein_function(mu));
  GradedFunction direct = normalized_transfer(g, SymmetricFunction::monomial(rd, mu));
  direct *= LaurentPoly::monomial(lmu);
  const OmegaQuotient& omega = g.omega_quotient();

  Json j = header("iwahori.transfer.v1", rd, o);
  j["mu"] = mu.to_vector();
  j["normalization"] = "v^l(t_mu)";
  if (o.q) j["q"] = *o.q;
  j["fiber_integral"] = graded_json(omega, fiber, o.q);
  j["normalized_transfer"] = graded_json(omega, direct, o.q);
  const bool agree = fiber == direct;
  j["routes_agree"] = agree;
  bool pass = agree;

  // Grassmannian comparison for GL(n), mu = (1^m, 0^(n-m)), 0 < m < n.
  const int n = static_cast<int>(rd.lattice_rank());
  int m = 0;
  bool shape = rd.family() == Family::GL;
  for (int i = 0; i < n && shape; ++i) {
    if (mu[static_cast<std::size_t>(i)] == 1 && m == i) ++m;
    else if (mu[static_cast<std::size_t>(i)] != 0) shape = false;
  }
  if (shape && 0 < m && m < n) {
    const QPolynomial expected = grassmannian_count(n, m);
    const LaurentPoly observed = fiber.at(omega.reduce(mu));
    const bool ok = expected.to_laurent() == observed;
    Json g2;
    g2["n"] = n;
    g2["m"] = m;
    g2["expected"] = expected.to_string();
    g2["observed"] = QPolynomial::from_laurent(observed) ? QPolynomial::from_laurent(observed)->to_string()
                                                         : observed.to_string();
    g2["status"] = ok ? "PASS" : "FAIL";
    j["grassmannian"] = g2;
    pass = pass && ok;
  }
  j["status"] = pass ? "PASS" : "FAIL";
  emit(o, dump(j));
  return pass ? 0 : kConsistency;
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int cmd_scholze(const Options& o) {
  if (o.corpus.empty()) throw std::invalid_argument("scholze needs --corpus");
  if (o.n < 1) throw PreconditionError("--n must be >= 1");
  const ScholzeCorpus corpus = read_scholze_corpus_file(o.corpus);
  if (corpus.q == 0 && !corpus.rows.empty() && !o.q) throw std::invalid_argument("corpus has no '# q' header");
  if (o.q && corpus.q != 0 && corpus.q != *o.q)
    throw PreconditionError("--q " + std::to_string(*o.q) + " does not match the corpus field order " +
                            std::to_string(corpus.q));
  const int q = corpus.q != 0 ? corpus.q : static_cast<int>(o.q.value_or(2));
  const FiniteField field = FiniteField::of_order(q);

  std::ostringstream csv;
  csv << "# schema=iwahori.scholze.v1 n=" << o.n << " q=" << q << "\n";
  csv << "line,g,phi,z,status\n";
  std::mt19937_64 rng(o.seed);
  int evaluated = 0, indeterminate = 0, invariance_fail = 0, level_fail = 0, level_checked = 0;
  for (const auto& row : corpus.rows) {
    const Matrix2 g = corpus_matrix(row, field);
    const std::string gtxt = row.tokens[0] + " " + row.tokens[1] + " " + row.tokens[2] + " " + row.tokens[3];
    std::int64_t phi = 0;
    try {
      phi = scholze_phi(o.n, g);
    } catch (const IndeterminateError&) {
      ++indeterminate;
      csv << row.line << ",\"" << gtxt << "\",,,INDETERMINATE\n";
      continue;
    }
    ++evaluated;
    const Rational z = scholze_z(o.n, g);
    csv << row.line << ",\"" << gtxt << "\"," << phi << "," << rational_text(z) << ",OK\n";
    for (int s = 0; s < o.samples; ++s) {
      const Matrix2 u = random_kn_element(field, o.n, rng);
      const Matrix2 v = random_kn_element(field, o.n, rng);
      try {
        if (scholze_phi(o.n, u * g * v) != phi) ++invariance_fail;
      } catch (const IndeterminateError&) {
        ++invariance_fail;
      }
    }
    try {
      ++level_checked;
      if (!level_compatibility_check(o.n, g)) ++level_fail;
    } catch (const IndeterminateError&) {
      --level_checked;
    }
  }
  emit(o, csv.str());
  std::cerr << "rows=" << corpus.rows.size() << " evaluated=" << evaluated << " indeterminate=" << indeterminate
            << " invariance_failures=" << invariance_fail << " level_checked=" << level_checked
            << " level_failures=" << level_fail << "\n";
  return (invariance_fail == 0 && level_fail == 0) ? 0 : kConsistency;
}

int cmd_propp(const Options& o) {
  const RootDatum rd = RootDatum::build(Family::GL, o.n);
  const AffineWeylGroup g(rd);
  const FiniteField field(o.p, o.r);
  const DrinfeldProppEvaluator eval(g, field);
  const bool single = !o.torus.empty() || !o.translation.empty();
  if (single && o.format == "csv") throw std::invalid_argument("a single value is written as json");
  if (!single && o.format == "json") throw std::invalid_argument("--format json needs --t and --translation");
  if (single) {
    if (o.torus.empty() || o.translation.empty()) throw std::invalid_argument("--t and --translation go together");
    std::vector<FiniteField::Elem> t;
    for (int x : parse_coweight(rd, o.torus)) t.push_back(static_cast<FiniteField::Elem>(x));
    AffineWeylElement w = g.translation(parse_coweight(rd, o.translation));
    for (int i : parse_index_list(o.word, rd.semisimple_rank())) w = g.right_simple(w, static_cast<std::size_t>(i));
    Json j = header("iwahori.propp.v1", rd, o);
    j["p"] = o.p;
    j["r"] = o.r;
    j["element"] = element_json(g, w);
    j["in_adm"] = eval.in_admissible_set(w);
    j["critical"] = critical_indices(g, w);
    j["norm"] = eval.norm(t);
    j["value"] = rational_text(eval.value(t, w));
    emit(o, dump(j));
    return 0;
  }
  // Full table over Adm(mu) and the torus points.
  std::ostringstream csv;
  csv << "# schema=iwahori.propp.v1 n=" << o.n << " p=" << o.p << " r=" << o.r << "\n";
  csv << "translation,finite_word,t,critical,value\n";
  const int q = field.order();
  std::vector<FiniteField::Elem> t(static_cast<std::size_t>(o.n), 1);
  for (const auto& w : eval.admissible()) {
    const auto crit = critical_indices(g, w);
    std::string ctxt;
    for (int c : crit) ctxt += (ctxt.empty() ? "" : " ") + std::to_string(c);
    std::string wtxt;
    for (int c : g.finite_word(w)) wtxt += (wtxt.empty() ? "" : " ") + std::to_string(c);
    std::fill(t.begin(), t.end(), 1);
    for (;;) {
      std::string ttxt;
      for (auto x : t) ttxt += (ttxt.empty() ? "" : " ") + field.to_string(x);
      csv << "\"" << w.translation.to_string() << "\",\"" << wtxt << "\",\"" << ttxt << "\",\"" << ctxt << "\","
          << rational_text(eval.value(t, w)) << "\n";
      std::size_t k = 0;
      while (k < t.size() && t[k] == static_cast<FiniteField::Elem>(q - 1)) t[k++] = 1;
      if (k == t.size()) break;
      ++t[k];
    }
  }
  emit(o, csv.str());
  return 0;
}

int cmd_constant_term(const Options& o) {
  const RootDatum rd = parse_group_spec(o.group);
  const Coweight mu = dominant_mu(rd, o);
  const std::vector<int> idx = parse_index_list(o.levi, rd.semisimple_rank());
  const RootDatum rl = rd.levi(idx);
  const AffineWeylGroup g(rd), gl(rl);
  const HeckeAlgebra hg(g), hl(gl);
  const HeckeElement z = hg.bernstein_function(mu);
  const SymmetricFunction f = bernstein_iso_inverse(hg, z, natural_height_bound(hg, z));
  const SymmetricFunction fl = restrict_to_levi(rd, rl, f);
  const HeckeElement c = bernstein_iso(hl, fl);
  if (!(c == constant_term(hg, hl, z, natural_height_bound(hg, z))))
    throw ConsistencyError("constant term differs from its composite");
  Json j = header("iwahori.constant-term.v1", rd, o);
  j["mu"] = mu.to_vector();
  Json lv = Json::array();
  for (int i : idx) lv.push_back(i + 1);
  j["levi"] = lv;
  j["symmetric_function_G"] = symmetric_json(f, o.q);
  j["symmetric_function_L"] = symmetric_json(fl, o.q);
  j["terms"] = hecke_json(gl, c, o.q);
  emit(o, dump(j));
  return 0;
}

int cmd_base_change(const Options& o) {
  const RootDatum rd = parse_group_spec(o.group);
  const Coweight mu = dominant_mu(rd, o);
  if (o.r < 1) throw PreconditionError("--r must be >= 1");
  const SymmetricFunction f = SymmetricFunction::monomial(rd, mu);
  Json j = header("iwahori.base-change.v1", rd, o);
  j["mu"] = mu.to_vector();
  j["r"] = o.r;
  j["source"] = symmetric_json(f, o.q);
  j["image"] = symmetric_json(base_change(rd, f, o.r), o.q);
  emit(o, dump(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwahori-Hecke algebra computations"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "FAMILY:N (GL, SL, Sp, GSp) or custom:<path>");
    c->add_option("--out", o.out, "output path (default stdout)");
    c->add_option("--q", o.q, "specialize q to this integer after the exact computation");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
  };
  CLI::App* adm = app.add_subcommand("adm", "admissible set Adm(mu)");
  add_group(adm);
  adm->add_option("--mu", o.mu, "dominant coweight, comma separated")->required();
  CLI::App* zmu = app.add_subcommand("zmu", "Bernstein function v^l(t_mu) z_mu in the T basis");
  add_group(zmu);
  zmu->add_option("--mu", o.mu)->required();
  zmu->add_option("--method", o.method, "theta | closed")->check(CLI::IsMember({"theta", "closed"}));
  CLI::App* tr = app.add_subcommand("transfer", "Kottwitz-fiber integral and normalized transfer");
  add_group(tr);
  tr->add_option("--mu", o.mu)->required();
  CLI::App* sch = app.add_subcommand("scholze", "GL2 deep-level test functions on a corpus");
  sch->add_option("--n", o.n, "level n >= 1");
  sch->add_option("--corpus", o.corpus)->required();
  sch->add_option("--out", o.out);
  sch->add_option("--q", o.q, "field order; must match the corpus header");
  sch->add_option("--format", o.format)->check(CLI::IsMember({"csv"}));
  sch->add_option("--samples", o.samples, "random K_n pairs per point for the invariance check");
  sch->add_option("--seed", o.seed);
  CLI::App* pp = app.add_subcommand("propp", "pro-p Iwahori Drinfeld test function for GL(n)");
  pp->add_option("--n", o.n);
  pp->add_option("--p", o.p);
  pp->add_option("--r", o.r);
  pp->add_option("--t", o.torus, "torus point as field element codes");
  pp->add_option("--translation", o.translation, "translation part of w");
  pp->add_option("--word", o.word, "finite part of w as simple reflection labels");
  pp->add_option("--out", o.out);
  pp->add_option("--format", o.format, "json for a single value, csv for the table")->check(CLI::IsMember({"json", "csv"}));
  CLI::App* ct = app.add_subcommand("constant-term", "constant term of z_mu to a standard Levi");
  add_group(ct);
  ct->add_option("--mu", o.mu)->required();
  ct->add_option("--levi", o.levi, "simple roots of the Levi, 1-based, comma separated")->required();
  CLI::App* bc = app.add_subcommand("base-change", "base change of the monomial symmetric function");
  add_group(bc);
  bc->add_option("--mu", o.mu)->required();
  bc->add_option("--r", o.r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  try {
    if (adm->parsed()) return cmd_adm(o);
    if (zmu->parsed()) return cmd_zmu(o);
    if (tr->parsed()) return cmd_transfer(o);
    if (sch->parsed()) return cmd_scholze(o);
    if (pp->parsed()) return cmd_propp(o);
    if (ct->parsed()) return cmd_constant_term(o);
    if (bc->parsed()) return cmd_base_change(o);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const IndeterminateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
