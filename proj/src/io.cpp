#include "iwahori/io.hpp"

#include <sstream>

namespace iwahori {

RootDatum parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw RootDatumError("group spec '" + spec + "' is not FAMILY:N");
  const std::string family = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (family == "custom") return RootDatum::from_config_file(arg);
  const Family f = parse_family(family);
  if (f == Family::Custom) throw RootDatumError("custom groups need custom:<path>");
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(arg, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != arg.size()) throw RootDatumError("group spec '" + spec + "' has a bad size");
  return RootDatum::build(f, n);
}

std::vector<int> parse_index_list(const std::string& text, std::size_t upper) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    if (cell.empty()) continue;
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cell.size()) throw std::invalid_argument("malformed index list '" + text + "'");
    if (x < 1 || static_cast<std::size_t>(x) > upper)
      throw PreconditionError("index " + std::to_string(x) + " outside 1.." + std::to_string(upper));
    out.push_back(x - 1);
  }
  return out;
}

Json laurent_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

Json specialize_json(const LaurentPoly& p, std::int64_t q) {
  LaurentPoly even, odd;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 == 0) even += LaurentPoly::monomial(e, c);
    else odd += LaurentPoly::monomial(e - 1, c);
  }
  auto value = [q](const LaurentPoly& x) -> std::int64_t {
    // exponents are even; negative powers of q only for q = +-1
    std::int64_t total = 0;
    for (const auto& [e, c] : x.terms()) {
      const int k = e / 2;
      if (k < 0 && q != 1 && q != -1) throw std::domain_error("negative power of q at q = " + std::to_string(q));
      std::int64_t pw = 1;
      for (int i = 0; i < (k < 0 ? -k : k); ++i) pw = checked_mul(pw, q);
      total = checked_add(total, checked_mul(c, pw));
    }
    return total;
  };
  const std::int64_t a = value(even);
  if (odd.is_zero()) return a;
  return std::to_string(a) + " + " + std::to_string(value(odd)) + "*q^(1/2)";
}

Json element_json(const AffineWeylGroup& g, const AffineWeylElement& x) {
  Json j;
  j["translation"] = x.translation.to_vector();
  j["finite_word"] = g.finite_word(x);
  return j;
}

Json hecke_json(const AffineWeylGroup& g, const HeckeElement& h, std::optional<std::int64_t> q) {
  std::vector<AffineWeylElement> xs = h.support();
  g.sort_canonical(xs);
  Json terms = Json::array();
  for (const auto& x : xs) {
    Json t;
    t["element"] = element_json(g, x);
    t["length"] = g.length(x);
    t["coeff"] = laurent_json(h.coeff(x));
    if (q) t["value"] = specialize_json(h.coeff(x), *q);
    terms.push_back(std::move(t));
  }
  return terms;
}

Json symmetric_json(const SymmetricFunction& f, std::optional<std::int64_t> q) {
  Json out = Json::array();
  for (const auto& [mu, c] : f.dominant_terms()) {
    Json t;
    t["coweight"] = mu.to_vector();
    t["coeff"] = laurent_json(c);
    if (q) t["value"] = specialize_json(c, *q);
    out.push_back(std::move(t));
  }
  return out;
}

Json graded_json(const OmegaQuotient& omega, const GradedFunction& f, std::optional<std::int64_t> q) {
  Json out = Json::object();
  std::vector<std::pair<OmegaElement, LaurentPoly>> terms(f.terms().begin(), f.terms().end());
  if (omega.integer_graded())
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return omega.grade(a.first) < omega.grade(b.first); });
  for (const auto& [m, c] : terms) out[omega.label(m)] = q ? specialize_json(c, *q) : laurent_json(c);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace iwahori
