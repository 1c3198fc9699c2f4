#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iwahori {

/// GF(p^r) with p^r <= 256, elements encoded as integers 0..q-1 whose base-p
/// digits are the coefficients of a polynomial modulo a fixed irreducible
/// polynomial (the lexicographically first monic one). Elements < p form the
/// prime field. Arithmetic goes through precomputed tables.
class FiniteField {
 public:
  using Elem = std::uint32_t;
  static constexpr int kMaxOrder = 256;

  FiniteField(int p, int r);
  /// Field with q elements; q must be a prime power <= kMaxOrder.
  static FiniteField of_order(int q);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return r_; }
  int order() const noexcept { return q_; }
  /// Coefficients of the monic modulus, constant term first (r + 1 entries).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  /// Requires a != 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Reduction of an integer into the prime field.
  Elem from_int(long k) const noexcept;
  /// N(a) = a^(1 + p + ... + p^(r-1)), returned as an integer in [0, p).
  int norm_to_prime_field(Elem a) const;

  std::string to_string(Elem a) const;

 private:
  int p_ = 0;
  int r_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

}  // namespace iwahori
