#pragma once

#include <mutex>
#include <unordered_map>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/hecke_algebra.hpp"
#include "iwahori/laurent_poly.hpp"

namespace iwahori {

/// Kazhdan-Lusztig R-polynomials on the extended affine Weyl group, memoized.
///
/// For a simple s with sy < y:
///   R_{x,y} = R_{sx,sy}                          if sx < x
///   R_{x,y} = (q - 1) R_{x,sy} + q R_{sx,sy}     otherwise
/// The recursion always uses the smallest such s. Pairs in different
/// Omega-components give 0.
class RPolynomials {
 public:
  explicit RPolynomials(const AffineWeylGroup& group) : g_(group) {}

  QPolynomial operator()(const AffineWeylElement& x, const AffineWeylElement& y) const;
  /// One recursion step with the given left descent s of y, then memoized values.
  QPolynomial via(const AffineWeylElement& x, const AffineWeylElement& y, std::size_t s) const;

  std::size_t cache_size() const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<AffineWeylElement, AffineWeylElement>& p) const noexcept {
      AffineWeylElementHash h;
      return h(p.first) * 31 + h(p.second);
    }
  };

  const AffineWeylGroup& g_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::pair<AffineWeylElement, AffineWeylElement>, QPolynomial, PairHash> memo_;
};

/// sum_{x in Adm(mu)} (-1)^{l(t_mu) + l(x)} R_{x, t_lambda(x)}(q) T_x, where
/// x = t_lambda(x) w. Equal to v^{l(t_mu)} z_mu. Requires mu dominant and minuscule.
HeckeElement closed_form_bernstein(const AffineWeylGroup& g, const Coweight& mu);
HeckeElement closed_form_bernstein(const AffineWeylGroup& g, const RPolynomials& r, const Coweight& mu);

}  // namespace iwahori
