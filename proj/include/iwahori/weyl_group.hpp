#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "iwahori/lattice.hpp"
#include "iwahori/root_datum.hpp"

namespace iwahori {

/// Handle to an element of a FiniteWeylGroup. Index 0 is the identity.
struct FiniteWeylElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const FiniteWeylElement&, const FiniteWeylElement&) = default;
};

/// The finite Weyl group W0 of a root datum, fully enumerated.
///
/// Each element is stored as its integer matrix on the cocharacter lattice,
/// its length, and its lexicographically smallest reduced word in the simple
/// reflections (0-based indices).
class FiniteWeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 200000;

  explicit FiniteWeylGroup(const RootDatum& rd);

  std::size_t order() const noexcept { return lengths_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  FiniteWeylElement identity() const noexcept { return {0}; }
  FiniteWeylElement simple(std::size_t i) const noexcept { return {left_[rank_ * 0 + i]}; }

  int length(FiniteWeylElement w) const noexcept { return lengths_[w.index]; }
  const std::vector<int>& reduced_word(FiniteWeylElement w) const noexcept { return words_[w.index]; }

  FiniteWeylElement left_simple(std::size_t i, FiniteWeylElement w) const noexcept {
    return {left_[w.index * rank_ + i]};
  }
  FiniteWeylElement right_simple(FiniteWeylElement w, std::size_t i) const noexcept {
    return {right_[w.index * rank_ + i]};
  }
  FiniteWeylElement multiply(FiniteWeylElement a, FiniteWeylElement b) const noexcept;
  FiniteWeylElement inverse(FiniteWeylElement w) const noexcept { return {inverse_[w.index]}; }

  Coweight apply(FiniteWeylElement w, const Coweight& x) const noexcept;

  /// True iff w^{-1}(alpha_k) is a negative root, alpha_k the k-th positive root.
  bool inverse_makes_negative(FiniteWeylElement w, std::size_t k) const noexcept {
    return neg_[w.index * num_pos_ + k] != 0;
  }

  /// Element given by an integer matrix, or throws if it is not in W0.
  FiniteWeylElement from_matrix(const std::vector<int>& m) const;
  /// The reflection through a root with the given coroot.
  FiniteWeylElement reflection(const Character& root, const Coweight& coroot) const;

  const std::vector<int>& matrix(FiniteWeylElement w) const noexcept { return matrices_[w.index]; }

 private:
  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  std::size_t num_pos_ = 0;
  std::vector<std::vector<int>> matrices_;  // row-major dim x dim
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::pair<std::vector<int>, std::uint32_t>> sorted_index_;
};

}  // namespace iwahori
