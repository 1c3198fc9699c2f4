#pragma once

#include <map>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/bernstein_center.hpp"
#include "iwahori/hecke_algebra.hpp"
#include "iwahori/laurent_poly.hpp"

namespace iwahori {

/// Finitely supported function Omega -> Z[v, v^-1].
class GradedFunction {
 public:
  void add(const OmegaElement& m, const LaurentPoly& c);
  LaurentPoly at(const OmegaElement& m) const;
  const std::map<OmegaElement, LaurentPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  GradedFunction& operator*=(const LaurentPoly& c);
  friend bool operator==(const GradedFunction&, const GradedFunction&) = default;

 private:
  std::map<OmegaElement, LaurentPoly> terms_;
};

/// Convolution on Omega.
GradedFunction multiply(const OmegaQuotient& omega, const GradedFunction& a, const GradedFunction& b);

/// (t f)(m) = sum_{kappa(lambda) = m} f(lambda) v^{<lambda, 2 rho>}, with
/// delta_B(lambda(pi)) = q^{-<lambda, 2 rho>}.
GradedFunction normalized_transfer(const AffineWeylGroup& g, const SymmetricFunction& f);

/// (int z)(m) = sum_{kappa(x) = m} z(x) q^{l(x)}.
GradedFunction kottwitz_fiber_integrate(const AffineWeylGroup& g, const HeckeElement& z);

/// Gaussian binomial [n choose m]_q, 0 < m < n.
QPolynomial grassmannian_count(int n, int m);

/// e^lambda -> e^{r lambda} and v -> v^r.
SymmetricFunction base_change(const RootDatum& rd, const SymmetricFunction& f, int r);

}  // namespace iwahori
