#include "iwahori/transfer.hpp"

namespace iwahori {

void GradedFunction::add(const OmegaElement& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly GradedFunction::at(const OmegaElement& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

GradedFunction& GradedFunction::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedFunction multiply(const OmegaQuotient& omega, const GradedFunction& a, const GradedFunction& b) {
  GradedFunction out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add(omega.add(ma, mb), ca * cb);
  return out;
}

GradedFunction normalized_transfer(const AffineWeylGroup& g, const SymmetricFunction& f) {
  const RootDatum& rd = g.root_datum();
  GradedFunction out;
  for (const auto& [mu, c] : f.dominant_terms())
    for (const auto& lam : weyl_orbit(rd, mu))
      out.add(g.omega_quotient().reduce(lam), c.shifted(pair_two_rho(rd, lam)));
  return out;
}

GradedFunction kottwitz_fiber_integrate(const AffineWeylGroup& g, const HeckeElement& z) {
  GradedFunction out;
  for (const auto& [x, c] : z.terms()) out.add(g.kottwitz_image(x), c.shifted(2 * g.length(x)));
  return out;
}

QPolynomial grassmannian_count(int n, int m) {
  if (!(0 < m && m < n)) throw PreconditionError("grassmannian_count needs 0 < m < n");
  // [n, k] = [n-1, k-1] + q^k [n-1, k]
  std::vector<std::vector<QPolynomial>> t(static_cast<std::size_t>(n + 1));
  for (int a = 0; a <= n; ++a) {
    t[a].assign(static_cast<std::size_t>(a + 1), QPolynomial(1));
    for (int k = 1; k < a; ++k) {
      std::vector<std::int64_t> qk(static_cast<std::size_t>(k + 1), 0);
      qk.back() = 1;
      t[a][k] = t[a - 1][k - 1] + QPolynomial(qk) * t[a - 1][k];
    }
  }
  return t[n][m];
}

SymmetricFunction base_change(const RootDatum& rd, const SymmetricFunction& f, int r) {
  if (r < 1) throw PreconditionError("base_change needs r >= 1");
  SymmetricFunction out;
  for (const auto& [mu, c] : f.dominant_terms()) out.add(rd, r * mu, c.substitute_power(r));
  return out;
}

}  // namespace iwahori
