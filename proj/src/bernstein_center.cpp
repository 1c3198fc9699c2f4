#include "iwahori/bernstein_center.hpp"

#include <algorithm>
#include <cstdlib>

namespace iwahori {

int coweight_height(const RootDatum& rd, const Coweight& lam) {
  int h = 0;
  for (int x : rd.dominant_representative(lam)) h = std::max(h, std::abs(x));
  return h;
}

SymmetricFunction SymmetricFunction::monomial(const RootDatum& rd, const Coweight& mu, LaurentPoly c) {
  if (!rd.is_dominant(mu)) throw PreconditionError("monomial_symmetric: " + mu.to_string() + " is not dominant");
  SymmetricFunction f;
  f.add(rd, mu, c);
  return f;
}

SymmetricFunction SymmetricFunction::from_values(const RootDatum& rd, const std::map<Coweight, LaurentPoly>& values) {
  SymmetricFunction f;
  for (const auto& [lam, c] : values) {
    if (c.is_zero()) continue;
    for (const auto& other : weyl_orbit(rd, lam)) {
      auto it = values.find(other);
      if (it == values.end() || !(it->second == c))
        throw PreconditionError("function is not W0-invariant at " + other.to_string());
    }
    if (rd.is_dominant(lam)) f.terms_[lam] = c;
  }
  return f;
}

void SymmetricFunction::add(const RootDatum& rd, const Coweight& mu, const LaurentPoly& c) {
  if (!rd.is_dominant(mu)) throw PreconditionError("SymmetricFunction::add needs a dominant coweight");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly SymmetricFunction::value(const RootDatum& rd, const Coweight& lam) const {
  auto it = terms_.find(rd.dominant_representative(lam));
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::map<Coweight, LaurentPoly> SymmetricFunction::expand(const RootDatum& rd) const {
  std::map<Coweight, LaurentPoly> out;
  for (const auto& [mu, c] : terms_)
    for (const auto& lam : weyl_orbit(rd, mu)) out[lam] = c;
  return out;
}

int SymmetricFunction::height(const RootDatum& rd) const {
  int h = 0;
  for (const auto& [mu, c] : terms_) h = std::max(h, coweight_height(rd, mu));
  return h;
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& o) {
  for (const auto& [mu, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SymmetricFunction multiply(const RootDatum& rd, const SymmetricFunction& f, const SymmetricFunction& g) {
  const auto ef = f.expand(rd);
  const auto eg = g.expand(rd);
  std::map<Coweight, LaurentPoly> prod;
  for (const auto& [a, ca] : ef)
    for (const auto& [b, cb] : eg) prod[a + b] += ca * cb;
  SymmetricFunction out;
  for (const auto& [lam, c] : prod)
    if (rd.is_dominant(lam)) out.add(rd, lam, c);
  return out;
}

HeckeElement bernstein_iso(const HeckeAlgebra& h, const SymmetricFunction& f) {
  HeckeElement z;
  for (const auto& [mu, c] : f.dominant_terms()) z += c * h.bernstein_function(mu);
  return z;
}

int natural_height_bound(const HeckeAlgebra& h, const HeckeElement& z) {
  int b = 0;
  for (const auto& [x, c] : z.terms()) b = std::max(b, coweight_height(h.group().root_datum(), x.translation));
  return b;
}

SymmetricFunction bernstein_iso_inverse(const HeckeAlgebra& h, const HeckeElement& z, int height_bound) {
  if (!h.is_central(z)) throw NotCentralError("bernstein_iso_inverse: element is not central");
  const AffineWeylGroup& g = h.group();
  const RootDatum& rd = g.root_datum();
  SymmetricFunction f;
  HeckeElement rest = z;
  // The longest elements in the support of sum_nu c_nu z_nu are the
  // translations t_lambda with lambda in the orbits of maximal l(t_nu);
  // the coefficient of T_{t_nu} in z_nu is v^{-l(t_nu)}.
  while (!rest.is_zero()) {
    const AffineWeylElement* top = nullptr;
    int top_len = -1;
    for (const auto& [x, c] : rest.terms()) {
      const int l = g.length(x);
      if (l > top_len || (l == top_len && x < *top)) {
        top = &x;
        top_len = l;
      }
    }
    if (top->finite != g.finite_group().identity())
      throw NotCentralError("bernstein_iso_inverse: leading term is not a translation");
    const Coweight nu = rd.dominant_representative(top->translation);
    if (coweight_height(rd, nu) > height_bound)
      throw HeightBoundError("bernstein_iso_inverse: expansion needs " + nu.to_string() + " beyond height bound " +
                             std::to_string(height_bound));
    const LaurentPoly c = rest.coeff(*top).shifted(g.length(g.translation(nu)));
    f.add(rd, nu, c);
    rest -= c * h.bernstein_function(nu);
  }
  return f;
}

SymmetricFunction restrict_to_levi(const RootDatum& g, const RootDatum& l, const SymmetricFunction& f) {
  if (g.lattice_rank() != l.lattice_rank()) throw PreconditionError("Levi has a different lattice");
  for (const auto& a : l.simple_roots())
    if (std::find(g.simple_roots().begin(), g.simple_roots().end(), a) == g.simple_roots().end())
      throw PreconditionError("not a standard Levi: simple root " + a.to_string() + " is not simple in G");
  SymmetricFunction out;
  for (const auto& [lam, c] : f.expand(g))
    if (l.is_dominant(lam)) out.add(l, lam, c);
  return out;
}

HeckeElement constant_term(const HeckeAlgebra& hg, const HeckeAlgebra& hl, const HeckeElement& z, int height_bound) {
  const SymmetricFunction f = bernstein_iso_inverse(hg, z, height_bound);
  return bernstein_iso(hl, restrict_to_levi(hg.group().root_datum(), hl.group().root_datum(), f));
}

}  // namespace iwahori
