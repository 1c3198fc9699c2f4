#pragma once

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/laurent_poly.hpp"

namespace iwahori {

/// Finitely supported sum of c_x T_x. Zero coefficients are never stored.
class HeckeElement {
 public:
  using Map = std::unordered_map<AffineWeylElement, LaurentPoly, AffineWeylElementHash>;

  HeckeElement() = default;
  static HeckeElement basis(const AffineWeylElement& x, LaurentPoly c = 1) {
    HeckeElement h;
    h.add(x, std::move(c));
    return h;
  }

  void add(const AffineWeylElement& x, const LaurentPoly& c);
  LaurentPoly coeff(const AffineWeylElement& x) const;
  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<AffineWeylElement> support() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, HeckeElement a) { return a *= c; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Iwahori-Hecke algebra of an extended affine Weyl group with equal
/// parameters over Z[v, v^-1], q = v^2:
///   T_s T_w = T_{sw}                     if l(sw) > l(w)
///   T_s T_w = (q - 1) T_w + q T_{sw}     if l(sw) < l(w)
///   T_w T_w' = T_{ww'}                   if l(ww') = l(w) + l(w')
///
/// The group must outlive the algebra. theta() results are cached; the cache
/// is guarded by a mutex so one instance can be shared between threads.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const AffineWeylGroup& group);

  const AffineWeylGroup& group() const noexcept { return g_; }

  HeckeElement one() const { return HeckeElement::basis(g_.identity()); }
  HeckeElement basis(const AffineWeylElement& x) const { return HeckeElement::basis(x); }

  HeckeElement left_simple(std::size_t i, const HeckeElement& h) const;   ///< T_s h
  HeckeElement right_simple(const HeckeElement& h, std::size_t i) const;  ///< h T_s
  HeckeElement left_length_zero(const AffineWeylElement& omega, const HeckeElement& h) const;
  HeckeElement right_length_zero(const HeckeElement& h, const AffineWeylElement& omega) const;
  /// h T_s^{-1} with T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
  HeckeElement right_simple_inverse(const HeckeElement& h, std::size_t i) const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement t_inverse(const AffineWeylElement& x) const;

  /// Bernstein element theta_lambda; v^{-l(t_lambda)} T_{t_lambda} for dominant lambda.
  HeckeElement theta(const Coweight& lam) const;
  /// theta(lam1) * theta(lam2)^{-1} for explicitly given dominant lam1, lam2.
  HeckeElement theta_from_decomposition(const Coweight& lam1, const Coweight& lam2) const;
  /// Dominant pair (lam1, lam2) with lam = lam1 - lam2 used by theta().
  std::pair<Coweight, Coweight> dominant_decomposition(const Coweight& lam) const;

  /// z_mu = sum over the W0-orbit of mu of theta_lambda. Requires mu dominant.
  HeckeElement bernstein_function(const Coweight& mu) const;
  /// v^{l(t_mu)} z_mu, the normalization with coefficients in Z[q].
  HeckeElement normalized_bernstein_function(const Coweight& mu) const;

  /// Commutes with every T_s and with T_omega for generators of Omega.
  bool is_central(const HeckeElement& h) const;

  /// Elements of the parabolic subgroup W_J generated by the given internal
  /// simple indices. Throws PreconditionError when W_J is infinite.
  std::vector<AffineWeylElement> parabolic_subgroup(const std::vector<std::size_t>& J) const;
  /// (h * sum_{w in W_J} T_w, sum_{w in W_J} q^{l(w)}).
  std::pair<HeckeElement, LaurentPoly> parahoric_descent(const HeckeElement& h,
                                                         const std::vector<std::size_t>& J) const;

 private:
  const AffineWeylGroup& g_;
  std::vector<Coweight> fundamental_;  // per simple root: <phi_i, alpha_j> = d_i delta_ij
  std::vector<int> fundamental_scale_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Coweight, HeckeElement, LatticeHash> theta_cache_;
};

}  // namespace iwahori
