#include "iwahori/laurent_poly.hpp"

#include <sstream>

namespace iwahori {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in multiplication");
  return r;
}

namespace {

std::string format_terms(const std::map<int, std::int64_t>& terms, const char* var) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const int e = it->first;
    std::int64_t c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t c) {
  LaurentPoly p;
  if (c != 0) p.c_[exponent] = c;
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (c_.empty()) throw std::logic_error("min_exponent of zero");
  return c_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (c_.empty()) throw std::logic_error("max_exponent of zero");
  return c_.rbegin()->first;
}

bool LaurentPoly::is_even() const noexcept {
  for (const auto& [e, c] : c_)
    if (e % 2 != 0) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int r) const {
  if (r < 1) throw std::invalid_argument("substitute_power needs r >= 1");
  LaurentPoly out;
  for (const auto& [e, c] : c_) out.c_.emplace_hint(out.c_.end(), e * r, c);
  return out;
}

std::int64_t LaurentPoly::evaluate_v(std::int64_t value) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : c_) {
    if (e < 0 && value != 1 && value != -1) throw std::domain_error("negative exponent at a non-unit value");
    std::int64_t p = 1;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) p = checked_mul(p, value);
    total = checked_add(total, checked_mul(c, p));
  }
  return total;
}

std::int64_t LaurentPoly::evaluate_q(std::int64_t value) const {
  auto qp = QPolynomial::from_laurent(*this);
  if (!qp) throw std::domain_error("not a polynomial in q: " + to_string());
  return qp->evaluate(value);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto [it, inserted] = c_.try_emplace(e, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      auto [it, inserted] = r.c_.try_emplace(ea + eb, 0);
      it->second = checked_add(it->second, checked_mul(ca, cb));
    }
  std::erase_if(r.c_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.c_) c = checked_mul(c, -1);
  return a;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
  LaurentPoly r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string LaurentPoly::to_string() const { return format_terms(c_, "v"); }

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t QPolynomial::evaluate(std::int64_t q) const {
  std::int64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = checked_add(checked_mul(r, q), *it);
  return r;
}

LaurentPoly QPolynomial::to_laurent() const {
  LaurentPoly r;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) r += LaurentPoly::monomial(static_cast<int>(2 * k), c_[k]);
  return r;
}

std::optional<QPolynomial> QPolynomial::from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return QPolynomial();
  if (!p.is_even() || p.min_exponent() < 0) return std::nullopt;
  std::vector<std::int64_t> c(static_cast<std::size_t>(p.max_exponent() / 2 + 1), 0);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e / 2)] = v;
  return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], checked_mul(o.c_[k], -1));
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const {
  std::map<int, std::int64_t> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) terms[static_cast<int>(k)] = c_[k];
  return format_terms(terms, "q");
}

}  // namespace iwahori
