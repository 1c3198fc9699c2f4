#include "iwahori/truncated_series.hpp"

#include <algorithm>

namespace iwahori {

namespace {

int add_prec(int a, int b) {
  if (a >= TruncatedSeries::kExact || b >= TruncatedSeries::kExact) return TruncatedSeries::kExact;
  return std::min(a + b, TruncatedSeries::kExact);
}

}  // namespace

TruncatedSeries TruncatedSeries::from_coefficients(const FiniteField& field, int valuation,
                                                   const std::vector<Elem>& coeffs, int precision) {
  TruncatedSeries s(field, precision);
  s.lo_ = valuation;
  s.c_ = coeffs;
  for (Elem x : s.c_)
    if (x >= static_cast<Elem>(field.order())) throw std::invalid_argument("coefficient outside the field");
  s.normalize();
  return s;
}

void TruncatedSeries::normalize() {
  // drop coefficients at or beyond the precision, then trailing and leading zeros
  if (prec_ < kExact) {
    const long keep = static_cast<long>(prec_) - lo_;
    if (keep <= 0) c_.clear();
    else if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<int>(k);
  }
  if (c_.empty()) lo_ = 0;
}

std::optional<int> TruncatedSeries::valuation() const noexcept {
  if (c_.empty()) return std::nullopt;
  return lo_;
}

TruncatedSeries::Elem TruncatedSeries::coeff(int e) const noexcept {
  const long i = static_cast<long>(e) - lo_;
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::with_precision(int precision) const {
  TruncatedSeries s = *this;
  s.prec_ = std::min(prec_, precision);
  s.normalize();
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const FiniteField& f = *a.f_;
  TruncatedSeries s(f, std::min(a.prec_, b.prec_));
  if (a.c_.empty() && b.c_.empty()) return s;
  int lo = a.c_.empty() ? b.lo_ : (b.c_.empty() ? a.lo_ : std::min(a.lo_, b.lo_));
  int hi = std::max(a.c_.empty() ? lo : a.lo_ + static_cast<int>(a.c_.size()),
                    b.c_.empty() ? lo : b.lo_ + static_cast<int>(b.c_.size()));
  s.lo_ = lo;
  s.c_.assign(static_cast<std::size_t>(hi - lo), 0);
  for (int e = lo; e < hi; ++e) s.c_[static_cast<std::size_t>(e - lo)] = f.add(a.coeff(e), b.coeff(e));
  s.normalize();
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries s = a;
  for (auto& x : s.c_) x = a.f_->neg(x);
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const FiniteField& f = *a.f_;
  const int prec = std::min(add_prec(a.valuation_lower_bound(), b.prec_), add_prec(b.valuation_lower_bound(), a.prec_));
  TruncatedSeries s(f, prec);
  if (a.c_.empty() || b.c_.empty()) return s;
  s.lo_ = a.lo_ + b.lo_;
  s.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) s.c_[i + j] = f.add(s.c_[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  s.normalize();
  return s;
}

std::string TruncatedSeries::to_string(bool with_precision) const {
  std::string s;
  if (c_.empty()) {
    s = "0";
  } else {
    s = std::to_string(lo_) + ":";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  }
  if (with_precision && !is_exact()) s += "+O(t^" + std::to_string(prec_) + ")";
  return s;
}

Matrix2 Matrix2::identity(const FiniteField& field) {
  return diag(TruncatedSeries::constant(field, 1), TruncatedSeries::constant(field, 1));
}

Matrix2 Matrix2::diag(const TruncatedSeries& x, const TruncatedSeries& y) {
  const TruncatedSeries zero(x.field());
  return {x, zero, zero, y};
}

Matrix2 Matrix2::antidiag(const TruncatedSeries& x, const TruncatedSeries& y) {
  const TruncatedSeries zero(x.field());
  return {zero, x, y, zero};
}

Matrix2 Matrix2::one_minus() const {
  const TruncatedSeries one = TruncatedSeries::constant(a.field(), 1);
  return {one - a, -b, -c, one - d};
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2 operator+(const Matrix2& x, const Matrix2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

std::string Matrix2::to_string() const {
  return a.to_string() + " " + b.to_string() + " " + c.to_string() + " " + d.to_string();
}

}  // namespace iwahori
