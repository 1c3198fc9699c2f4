#include "iwahori/kl_polynomials.hpp"

namespace iwahori {

QPolynomial RPolynomials::via(const AffineWeylElement& x, const AffineWeylElement& y, std::size_t s) const {
  const AffineWeylElement sx = g_.left_simple(s, x);
  const AffineWeylElement sy = g_.left_simple(s, y);
  if (g_.length(sy) >= g_.length(y)) throw PreconditionError("R-polynomial step needs a left descent of y");
  if (g_.length(sx) < g_.length(x)) return (*this)(sx, sy);
  const QPolynomial q = QPolynomial::q();
  return (q - QPolynomial(1)) * (*this)(x, sy) + q * (*this)(sx, sy);
}

QPolynomial RPolynomials::operator()(const AffineWeylElement& x, const AffineWeylElement& y) const {
  const int lx = g_.length(x);
  const int ly = g_.length(y);
  if (lx > ly) return {};
  if (ly == 0) return x == y ? QPolynomial(1) : QPolynomial();
  if (g_.kottwitz_image(x) != g_.kottwitz_image(y)) return {};
  if (lx == ly) return x == y ? QPolynomial(1) : QPolynomial();
  const auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::size_t s = 0;
  while (g_.length(g_.left_simple(s, y)) > ly) ++s;
  QPolynomial r = via(x, y, s);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, r);
  return r;
}

std::size_t RPolynomials::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

HeckeElement closed_form_bernstein(const AffineWeylGroup& g, const Coweight& mu) {
  RPolynomials r(g);
  return closed_form_bernstein(g, r, mu);
}

HeckeElement closed_form_bernstein(const AffineWeylGroup& g, const RPolynomials& r, const Coweight& mu) {
  const RootDatum& rd = g.root_datum();
  if (!rd.is_dominant(mu)) throw PreconditionError("closed_form_bernstein: " + mu.to_string() + " is not dominant");
  if (!is_minuscule(rd, mu)) throw PreconditionError("closed_form_bernstein: " + mu.to_string() + " is not minuscule");
  const int lmu = g.length(g.translation(mu));
  HeckeElement out;
  for (const auto& x : admissible_set(g, mu)) {
    QPolynomial c = r(x, g.translation(x.translation));
    LaurentPoly lc = c.to_laurent();
    if ((lmu + g.length(x)) % 2 != 0) lc = -lc;
    out.add(x, lc);
  }
  return out;
}

}  // namespace iwahori
