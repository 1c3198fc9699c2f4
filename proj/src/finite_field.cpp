#include "iwahori/finite_field.hpp"

#include <stdexcept>

#include "iwahori/root_datum.hpp"

namespace iwahori {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // coefficients mod p, constant term first

Poly poly_mod(Poly a, const Poly& m, int p) {
  // m monic
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

Poly decode(int x, int p, int len) {
  Poly c(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < len; ++i, x /= p) c[static_cast<std::size_t>(i)] = x % p;
  return c;
}

int encode(const Poly& c, int p) {
  int x = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) x = x * p + *it;
  return x;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int x = 0; x < count; ++x) {
      Poly g = decode(x, p, d);
      g.push_back(1);
      Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (int v : r) zero = zero && v == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int r) : p_(p), r_(r) {
  if (!is_prime(p) || r < 1) throw PreconditionError("finite field needs a prime p and r >= 1");
  q_ = 1;
  for (int i = 0; i < r; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) throw PreconditionError("finite field too large");
  }
  for (int x = 0; x < q_; ++x) {
    Poly f = decode(x, p, r);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  const std::size_t q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly pa = decode(a, p, r);
    Poly na(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    neg_[static_cast<std::size_t>(a)] = static_cast<Elem>(encode(na, p));
    for (int b = 0; b < q_; ++b) {
      const Poly pb = decode(b, p, r);
      Poly s(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i) s[i] = (pa[i] + pb[i]) % p;
      Poly m(2 * static_cast<std::size_t>(r) - 1, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[static_cast<std::size_t>(i + j)] = (m[static_cast<std::size_t>(i + j)] + pa[i] * pb[j]) % p;
      m = poly_mod(m, modulus_, p);
      m.resize(static_cast<std::size_t>(r), 0);
      add_[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)] = static_cast<Elem>(encode(s, p));
      mul_[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)] = static_cast<Elem>(encode(m, p));
    }
  }
  for (Elem a = 1; a < q; ++a)
    for (Elem b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
}

FiniteField FiniteField::of_order(int q) {
  if (q < 2) throw PreconditionError("field order must be a prime power");
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int r = 0;
    int m = q;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    if (m != 1) throw PreconditionError("field order " + std::to_string(q) + " is not a prime power");
    return FiniteField(p, r);
  }
  throw PreconditionError("field order must be a prime power");
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in a finite field");
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::from_int(long k) const noexcept {
  return static_cast<Elem>(((k % p_) + p_) % p_);
}

int FiniteField::norm_to_prime_field(Elem a) const {
  std::uint64_t e = 0;
  std::uint64_t pk = 1;
  for (int i = 0; i < r_; ++i, pk *= static_cast<std::uint64_t>(p_)) e += pk;
  const Elem n = pow(a, e);
  if (n >= static_cast<Elem>(p_)) throw std::logic_error("norm left the prime field");
  return static_cast<int>(n);
}

std::string FiniteField::to_string(Elem a) const {
  if (r_ == 1) return std::to_string(a);
  const Poly c = decode(static_cast<int>(a), p_, r_);
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace iwahori
