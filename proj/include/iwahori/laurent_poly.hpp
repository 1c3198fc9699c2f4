#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwahori {

/// Thrown when an int64 coefficient would overflow.
class CoefficientOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Integer Laurent polynomial in v. q stands for v^2 throughout.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) {  // NOLINT: implicit constants are convenient
    if (c != 0) c_[0] = c;
  }

  static LaurentPoly monomial(int exponent, std::int64_t c = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly q() { return monomial(2); }
  /// (q - 1)
  static LaurentPoly q_minus_one() { return monomial(2) - LaurentPoly(1); }

  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const noexcept { return c_; }
  int min_exponent() const;  ///< requires !is_zero()
  int max_exponent() const;  ///< requires !is_zero()

  /// True when every exponent is even (the element lies in Z[q, q^-1]).
  bool is_even() const noexcept;
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// v -> v^r.
  LaurentPoly substitute_power(int r) const;
  /// Value at v = value (requires exponents >= 0 unless value = +-1).
  std::int64_t evaluate_v(std::int64_t value) const;
  /// Value at q = value; requires is_even() and no negative q-exponent.
  std::int64_t evaluate_q(std::int64_t value) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int k) const;

  /// Human-readable form in v, e.g. "-v^2 + 1".
  std::string to_string() const;

 private:
  std::map<int, std::int64_t> c_;  // exponent -> nonzero coefficient
};

/// Polynomial in q with integer coefficients and nonnegative exponents.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::int64_t c) {  // NOLINT
    if (c != 0) c_.push_back(c);
  }
  explicit QPolynomial(std::vector<std::int64_t> coeffs);

  static QPolynomial q() { return QPolynomial(std::vector<std::int64_t>{0, 1}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : 0;
  }
  std::int64_t leading_coefficient() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
  std::int64_t evaluate(std::int64_t q) const;

  LaurentPoly to_laurent() const;
  /// Inverse of to_laurent; nullopt unless the input is even with exponents >= 0.
  static std::optional<QPolynomial> from_laurent(const LaurentPoly& p);

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;  // c_[k] is the coefficient of q^k
};

}  // namespace iwahori
