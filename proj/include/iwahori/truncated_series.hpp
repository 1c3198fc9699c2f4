#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iwahori/finite_field.hpp"

namespace iwahori {

/// A result depends on coefficients beyond the tracked precision.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent series over GF(q) known modulo t^precision, or exactly.
///
/// The value is sum_i c_i t^(lo + i) + O(t^precision). The field must outlive
/// every series built over it.
class TruncatedSeries {
 public:
  using Elem = FiniteField::Elem;
  static constexpr int kExact = 1 << 29;

  explicit TruncatedSeries(const FiniteField& field, int precision = kExact) : f_(&field), prec_(precision) {}

  /// t^valuation * (c_0 + c_1 t + ...) + O(t^precision).
  static TruncatedSeries from_coefficients(const FiniteField& field, int valuation, const std::vector<Elem>& coeffs,
                                           int precision = kExact);
  static TruncatedSeries constant(const FiniteField& field, Elem c, int precision = kExact) {
    return from_coefficients(field, 0, {c}, precision);
  }
  /// c t^e, exact.
  static TruncatedSeries monomial(const FiniteField& field, Elem c, int e) { return from_coefficients(field, e, {c}); }

  const FiniteField& field() const noexcept { return *f_; }
  int precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ >= kExact; }
  /// No nonzero coefficient below the precision.
  bool is_known_zero() const noexcept { return c_.empty(); }
  /// Exact valuation, or nullopt when the series is zero to its precision.
  std::optional<int> valuation() const noexcept;
  /// The valuation, or the precision for an indeterminate zero.
  int valuation_lower_bound() const noexcept { return c_.empty() ? prec_ : lo_; }
  Elem coeff(int e) const noexcept;

  TruncatedSeries with_precision(int precision) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);

  /// Same precision and coefficients.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.prec_ == b.prec_ && a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  /// "v:c0,c1,..." (or "0"), optionally followed by "+O(t^N)".
  std::string to_string(bool with_precision = false) const;

 private:
  void normalize();

  const FiniteField* f_;
  int lo_ = 0;
  std::vector<Elem> c_;
  int prec_;
};

/// 2x2 matrix [[a, b], [c, d]] over truncated series.
struct Matrix2 {
  TruncatedSeries a, b, c, d;

  static Matrix2 identity(const FiniteField& field);
  static Matrix2 diag(const TruncatedSeries& x, const TruncatedSeries& y);
  static Matrix2 antidiag(const TruncatedSeries& x, const TruncatedSeries& y);

  TruncatedSeries det() const { return a * d - b * c; }
  TruncatedSeries trace() const { return a + d; }
  Matrix2 one_minus() const;
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y);

  std::string to_string() const;
};

}  // namespace iwahori
