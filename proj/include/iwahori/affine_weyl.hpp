#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iwahori/lattice.hpp"
#include "iwahori/root_datum.hpp"
#include "iwahori/weyl_group.hpp"

namespace iwahori {

/// The element t_translation * finite of the extended affine Weyl group
/// X_*(T) x| W0 (translation on the left).
struct AffineWeylElement {
  Coweight translation;
  FiniteWeylElement finite;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend std::strong_ordering operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (auto c = a.translation <=> b.translation; c != 0) return c;
    return a.finite <=> b.finite;
  }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& x) const noexcept {
    return x.translation.hash() * 1000003u ^ x.finite.index;
  }
};

/// A class in X_*(T) / (coroot lattice), stored by a canonical representative.
struct OmegaElement {
  Coweight representative;
  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
  friend auto operator<=>(const OmegaElement& a, const OmegaElement& b) {
    return a.representative <=> b.representative;
  }
};

/// Canonical reduction of cocharacters modulo the coroot lattice.
class OmegaQuotient {
 public:
  explicit OmegaQuotient(const RootDatum& rd);

  OmegaElement reduce(const Coweight& x) const;
  OmegaElement add(const OmegaElement& a, const OmegaElement& b) const {
    return reduce(a.representative + b.representative);
  }
  /// Set when the quotient is Z (or trivial) with the grade read off one coordinate.
  bool integer_graded() const noexcept { return grade_coord_.has_value() || trivial_; }
  /// Integer grade; only meaningful when integer_graded().
  long grade(const OmegaElement& w) const;
  /// Integer grade as a decimal string when graded, otherwise the representative.
  std::string label(const OmegaElement& w) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::pair<std::size_t, std::vector<long>>> rows_;  // (pivot column, row)
  std::optional<std::size_t> grade_coord_;
  bool trivial_ = false;
};

struct ReducedWord {
  std::vector<int> letters;  ///< internal affine simple reflection indices
  AffineWeylElement omega;   ///< length-zero tail: x = s_{l1} ... s_{lk} * omega
};

/// The extended affine Weyl group of a split root datum with its Iwahori-Matsumoto
/// length, affine simple reflections and Bruhat order.
///
/// The base alcove lies in the dominant chamber with a vertex at the origin:
/// { x : 0 < <x, alpha> < 1 for all positive roots alpha }. Its walls give the
/// affine simple reflections: the finite simple reflections s_1..s_r and, for
/// each irreducible component with highest root theta, s_0 = t_{theta^vee} s_theta.
///
/// Internally the affine simple reflections are numbered 0..r-1 (finite, in
/// the order of the simple roots) followed by one affine reflection per
/// component. Externally (labels) finite reflections are 1..r and the affine
/// reflection of component c is -c (so the single-component case uses 0).
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum rd);

  const RootDatum& root_datum() const noexcept { return rd_; }
  const FiniteWeylGroup& finite_group() const noexcept { return w0_; }
  const OmegaQuotient& omega_quotient() const noexcept { return omega_; }
  std::size_t lattice_rank() const noexcept { return rd_.lattice_rank(); }

  AffineWeylElement identity() const { return {rd_.zero(), w0_.identity()}; }
  AffineWeylElement translation(const Coweight& lam) const;
  AffineWeylElement finite(FiniteWeylElement w) const { return {rd_.zero(), w}; }

  std::size_t num_simple() const noexcept { return simple_.size(); }
  const AffineWeylElement& simple(std::size_t i) const noexcept { return simple_[i]; }
  int label(std::size_t i) const noexcept;
  std::size_t index_of_label(int label) const;

  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;
  AffineWeylElement left_simple(std::size_t i, const AffineWeylElement& x) const;
  AffineWeylElement right_simple(const AffineWeylElement& x, std::size_t i) const;

  /// Iwahori-Matsumoto length.
  int length(const AffineWeylElement& x) const;

  ReducedWord reduced_word(const AffineWeylElement& x) const;
  /// s_{l1} ... s_{lk} * omega.
  AffineWeylElement evaluate(const std::vector<int>& letters, const AffineWeylElement& omega) const;

  OmegaElement kottwitz_image(const AffineWeylElement& x) const { return omega_.reduce(x.translation); }

  /// Length-zero elements whose classes generate Omega (identity excluded).
  std::vector<AffineWeylElement> omega_generators() const;

  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const;

  /// Reduced word of the finite part in 1-based simple reflection labels.
  std::vector<int> finite_word(const AffineWeylElement& x) const;
  std::string to_string(const AffineWeylElement& x) const;

  /// Canonical order: length, then translation, then finite reduced word.
  bool canonical_less(const AffineWeylElement& a, const AffineWeylElement& b) const;
  void sort_canonical(std::vector<AffineWeylElement>& xs) const;

 private:
  RootDatum rd_;
  FiniteWeylGroup w0_;
  OmegaQuotient omega_;
  std::vector<AffineWeylElement> simple_;
  std::vector<std::vector<int>> pos_roots_;  // dense copies for the length loop
};

/// Adm(mu): the downward Bruhat closure of { t_lambda : lambda in W0 mu }.
/// Requires mu dominant. Returned in canonical order.
std::vector<AffineWeylElement> admissible_set(const AffineWeylGroup& g, const Coweight& mu);

/// Critical indices { j : w <= t_{e_j} } for GL(n), 1-based and increasing.
std::vector<int> critical_indices(const AffineWeylGroup& g, const AffineWeylElement& w);

}  // namespace iwahori
