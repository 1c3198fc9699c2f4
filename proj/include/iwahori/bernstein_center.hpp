#pragma once

#include <map>
#include <vector>

#include "iwahori/hecke_algebra.hpp"
#include "iwahori/laurent_poly.hpp"
#include "iwahori/root_datum.hpp"

namespace iwahori {

/// z is not in the center of the Hecke algebra.
class NotCentralError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The expansion of a central element needs coweights above the height bound.
class HeightBoundError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Sup-norm of the dominant representative of lam.
int coweight_height(const RootDatum& rd, const Coweight& lam);

/// A W0-invariant finitely supported function Coweight -> Z[v, v^-1],
/// stored by its values on dominant representatives.
class SymmetricFunction {
 public:
  SymmetricFunction() = default;

  static SymmetricFunction monomial(const RootDatum& rd, const Coweight& mu, LaurentPoly c = 1);
  /// From values on arbitrary coweights; throws PreconditionError if they are not W0-invariant.
  static SymmetricFunction from_values(const RootDatum& rd, const std::map<Coweight, LaurentPoly>& values);

  /// Adds c to the orbit of the dominant coweight mu.
  void add(const RootDatum& rd, const Coweight& mu, const LaurentPoly& c);
  LaurentPoly value(const RootDatum& rd, const Coweight& lam) const;

  const std::map<Coweight, LaurentPoly>& dominant_terms() const noexcept { return terms_; }
  /// Values on every coweight of the support.
  std::map<Coweight, LaurentPoly> expand(const RootDatum& rd) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int height(const RootDatum& rd) const;

  SymmetricFunction& operator+=(const SymmetricFunction& o);
  friend SymmetricFunction operator+(SymmetricFunction a, const SymmetricFunction& b) { return a += b; }
  friend bool operator==(const SymmetricFunction&, const SymmetricFunction&) = default;

 private:
  std::map<Coweight, LaurentPoly> terms_;
};

/// Pointwise-convolution product in Z[X_*(T)]^W0.
SymmetricFunction multiply(const RootDatum& rd, const SymmetricFunction& f, const SymmetricFunction& g);

/// sum_mu f(mu) z_mu over dominant mu.
HeckeElement bernstein_iso(const HeckeAlgebra& h, const SymmetricFunction& f);

/// Inverse of bernstein_iso. Peels off the longest translation in the support
/// and subtracts the matching multiple of z_nu until nothing is left.
/// Throws NotCentralError or HeightBoundError.
SymmetricFunction bernstein_iso_inverse(const HeckeAlgebra& h, const HeckeElement& z, int height_bound);

/// Largest height of a translation part occurring in the support of z.
int natural_height_bound(const HeckeAlgebra& h, const HeckeElement& z);

/// f viewed as a W(L)-invariant function, with L a Levi of the datum of f.
SymmetricFunction restrict_to_levi(const RootDatum& g, const RootDatum& l, const SymmetricFunction& f);

/// c^G_L = bernstein_iso_L o restriction o bernstein_iso_inverse_G.
HeckeElement constant_term(const HeckeAlgebra& hg, const HeckeAlgebra& hl, const HeckeElement& z, int height_bound);

}  // namespace iwahori
