#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwahori {

/// Largest lattice dimension supported by the fixed-capacity vectors below.
inline constexpr std::size_t kMaxLatticeRank = 8;

struct CoweightTag {};
struct CharacterTag {};

/// Integer vector of small fixed capacity. The tag keeps cocharacters and
/// characters from being mixed up; they only meet through `pair`.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;

  explicit LatticeVector(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
    if (n > kMaxLatticeRank) throw std::length_error("lattice rank exceeds kMaxLatticeRank");
  }

  LatticeVector(std::initializer_list<int> xs) : LatticeVector(xs.size()) {
    std::copy(xs.begin(), xs.end(), c_.begin());
  }

  explicit LatticeVector(std::span<const int> xs) : LatticeVector(xs.size()) {
    std::copy(xs.begin(), xs.end(), c_.begin());
  }

  static LatticeVector unit(std::size_t n, std::size_t i) {
    LatticeVector v(n);
    v[i] = 1;
    return v;
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  int& operator[](std::size_t i) noexcept { return c_[i]; }
  int operator[](std::size_t i) const noexcept { return c_[i]; }

  const int* begin() const noexcept { return c_.data(); }
  const int* end() const noexcept { return c_.data() + n_; }
  int* begin() noexcept { return c_.data(); }
  int* end() noexcept { return c_.data() + n_; }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  bool is_zero() const noexcept {
    return std::all_of(begin(), end(), [](int x) { return x == 0; });
  }

  LatticeVector& operator+=(const LatticeVector& o) noexcept {
    for (std::size_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) noexcept {
    for (std::size_t i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LatticeVector& operator*=(int k) noexcept {
    for (std::size_t i = 0; i < n_; ++i) c_[i] *= k;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) noexcept { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) noexcept { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector a) noexcept { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) noexcept { return a *= -1; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) noexcept {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }
  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ n_;
    for (std::size_t i = 0; i < n_; ++i) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c_[i]));
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

 private:
  std::array<int, kMaxLatticeRank> c_{};
  std::uint8_t n_ = 0;
};

using Coweight = LatticeVector<CoweightTag>;
using Character = LatticeVector<CharacterTag>;

inline int pair(const Coweight& x, const Character& chi) noexcept {
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * chi[i];
  return s;
}

struct LatticeHash {
  template <class Tag>
  std::size_t operator()(const LatticeVector<Tag>& v) const noexcept {
    return v.hash();
  }
};

}  // namespace iwahori
