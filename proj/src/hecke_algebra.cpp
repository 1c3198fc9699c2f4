#include "iwahori/hecke_algebra.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace iwahori {

void HeckeElement::add(const AffineWeylElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly HeckeElement::coeff(const AffineWeylElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::vector<AffineWeylElement> HeckeElement::support() const {
  std::vector<AffineWeylElement> s;
  s.reserve(terms_.size());
  for (const auto& [x, c] : terms_) s.push_back(x);
  std::sort(s.begin(), s.end());
  return s;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, v] : terms_) v *= c;
  return *this;
}

namespace {

// Smallest vector phi in a box with <phi, alpha_j> = 0 (j != i), <phi, alpha_i> > 0.
bool search_fundamental(const RootDatum& rd, std::size_t i, Coweight& best, int& best_scale) {
  const std::size_t d = rd.lattice_rank();
  const int bound = d <= 6 ? 2 : 1;
  std::vector<int> x(d, -bound);
  bool found = false;
  int best_norm = 0;
  for (;;) {
    Coweight c{std::span<const int>(x)};
    bool ok = true;
    int scale = 0;
    for (std::size_t j = 0; j < rd.semisimple_rank() && ok; ++j) {
      const int p = pair(c, rd.simple_roots()[j]);
      if (j == i) {
        scale = p;
        ok = p > 0;
      } else {
        ok = p == 0;
      }
    }
    if (ok) {
      int norm = 0;
      for (int v : x) norm = std::max(norm, std::abs(v));
      if (!found || scale < best_scale || (scale == best_scale && norm < best_norm)) {
        found = true;
        best = c;
        best_scale = scale;
        best_norm = norm;
      }
    }
    std::size_t k = 0;
    while (k < d && x[k] == bound) x[k++] = -bound;
    if (k == d) break;
    ++x[k];
  }
  return found;
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(const AffineWeylGroup& group) : g_(group) {
  const RootDatum& rd = g_.root_datum();
  Coweight two_rho_check = rd.zero();
  for (const auto& c : rd.positive_coroots()) two_rho_check += c;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    Coweight phi;
    int scale = 0;
    if (!search_fundamental(rd, i, phi, scale)) {
      phi = two_rho_check;
      scale = pair(phi, rd.simple_roots()[i]);
    }
    fundamental_.push_back(phi);
    fundamental_scale_.push_back(scale);
  }
}

HeckeElement HeckeAlgebra::left_simple(std::size_t i, const HeckeElement& h) const {
  HeckeElement out;
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = LaurentPoly::q_minus_one();
  for (const auto& [w, c] : h.terms()) {
    const AffineWeylElement sw = g_.left_simple(i, w);
    if (g_.length(sw) > g_.length(w)) {
      out.add(sw, c);
    } else {
      out.add(w, c * qm1);
      out.add(sw, c * q);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::right_simple(const HeckeElement& h, std::size_t i) const {
  HeckeElement out;
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = LaurentPoly::q_minus_one();
  for (const auto& [w, c] : h.terms()) {
    const AffineWeylElement ws = g_.right_simple(w, i);
    if (g_.length(ws) > g_.length(w)) {
      out.add(ws, c);
    } else {
      out.add(w, c * qm1);
      out.add(ws, c * q);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::left_length_zero(const AffineWeylElement& omega, const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) out.add(g_.multiply(omega, w), c);
  return out;
}

HeckeElement HeckeAlgebra::right_length_zero(const HeckeElement& h, const AffineWeylElement& omega) const {
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) out.add(g_.multiply(w, omega), c);
  return out;
}

HeckeElement HeckeAlgebra::right_simple_inverse(const HeckeElement& h, std::size_t i) const {
  // h T_s^{-1} = q^{-1} (h T_s) + (q^{-1} - 1) h
  HeckeElement out = LaurentPoly::monomial(-2) * right_simple(h, i);
  out += (LaurentPoly::monomial(-2) - LaurentPoly(1)) * h;
  return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [x, c] : a.terms()) {
    const ReducedWord rw = g_.reduced_word(x);
    HeckeElement h = left_length_zero(rw.omega, b);
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) h = left_simple(static_cast<std::size_t>(*it), h);
    h *= c;
    out += h;
  }
  return out;
}

HeckeElement HeckeAlgebra::t_inverse(const AffineWeylElement& x) const {
  // x = s_1 ... s_k omega, so T_x^{-1} = T_{omega^{-1}} T_{s_k}^{-1} ... T_{s_1}^{-1}.
  const ReducedWord rw = g_.reduced_word(x);
  HeckeElement h = basis(g_.inverse(rw.omega));
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
    h = right_simple_inverse(h, static_cast<std::size_t>(*it));
  return h;
}

std::pair<Coweight, Coweight> HeckeAlgebra::dominant_decomposition(const Coweight& lam) const {
  const RootDatum& rd = g_.root_datum();
  Coweight lam2 = rd.zero();
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    const int b = std::max(0, -pair(lam, rd.simple_roots()[i]));
    const int d = fundamental_scale_[i];
    lam2 += ((b + d - 1) / d) * fundamental_[i];
  }
  return {lam + lam2, lam2};
}

HeckeElement HeckeAlgebra::theta_from_decomposition(const Coweight& lam1, const Coweight& lam2) const {
  const RootDatum& rd = g_.root_datum();
  if (!rd.is_dominant(lam1) || !rd.is_dominant(lam2))
    throw PreconditionError("theta decomposition needs dominant coweights");
  const AffineWeylElement t1 = g_.translation(lam1);
  const AffineWeylElement t2 = g_.translation(lam2);
  const int l1 = g_.length(t1);
  const int l2 = g_.length(t2);
  HeckeElement h = basis(t1);
  if (!lam2.is_zero()) {
    const ReducedWord rw = g_.reduced_word(t2);
    h = right_length_zero(h, g_.inverse(rw.omega));
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
      h = right_simple_inverse(h, static_cast<std::size_t>(*it));
  }
  h *= LaurentPoly::monomial(l2 - l1);
  return h;
}

HeckeElement HeckeAlgebra::theta(const Coweight& lam) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = theta_cache_.find(lam);
    if (it != theta_cache_.end()) return it->second;
  }
  const auto [lam1, lam2] = dominant_decomposition(lam);
  HeckeElement h = theta_from_decomposition(lam1, lam2);
  std::lock_guard<std::mutex> lock(mutex_);
  theta_cache_.emplace(lam, h);
  return h;
}

HeckeElement HeckeAlgebra::bernstein_function(const Coweight& mu) const {
  const RootDatum& rd = g_.root_datum();
  if (!rd.is_dominant(mu)) throw PreconditionError("bernstein_function: " + mu.to_string() + " is not dominant");
  HeckeElement z;
  for (const auto& lam : weyl_orbit(rd, mu)) z += theta(lam);
  return z;
}

HeckeElement HeckeAlgebra::normalized_bernstein_function(const Coweight& mu) const {
  HeckeElement z = bernstein_function(mu);
  z *= LaurentPoly::monomial(g_.length(g_.translation(mu)));
  return z;
}

bool HeckeAlgebra::is_central(const HeckeElement& h) const {
  for (std::size_t i = 0; i < g_.num_simple(); ++i)
    if (!(left_simple(i, h) == right_simple(h, i))) return false;
  for (const auto& omega : g_.omega_generators())
    if (!(left_length_zero(omega, h) == right_length_zero(h, omega))) return false;
  return true;
}

std::vector<AffineWeylElement> HeckeAlgebra::parabolic_subgroup(const std::vector<std::size_t>& J) const {
  const RootDatum& rd = g_.root_datum();
  for (std::size_t j : J)
    if (j >= g_.num_simple()) throw PreconditionError("parabolic subset contains an unknown reflection");
  const std::size_t r = rd.semisimple_rank();
  for (std::size_t c = 0; c < rd.components().size(); ++c) {
    bool all = std::find(J.begin(), J.end(), r + c) != J.end();
    for (int i : rd.components()[c]) all = all && std::find(J.begin(), J.end(), static_cast<std::size_t>(i)) != J.end();
    if (all) throw PreconditionError("parabolic subset generates an infinite group");
  }
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{g_.identity()};
  std::deque<AffineWeylElement> queue{g_.identity()};
  while (!queue.empty()) {
    const AffineWeylElement w = queue.front();
    queue.pop_front();
    for (std::size_t j : J) {
      AffineWeylElement sw = g_.left_simple(j, w);
      if (seen.insert(sw).second) queue.push_back(sw);
    }
  }
  std::vector<AffineWeylElement> out(seen.begin(), seen.end());
  g_.sort_canonical(out);
  return out;
}

std::pair<HeckeElement, LaurentPoly> HeckeAlgebra::parahoric_descent(const HeckeElement& h,
                                                                     const std::vector<std::size_t>& J) const {
  HeckeElement sum;
  LaurentPoly poincare;
  for (const auto& w : parabolic_subgroup(J)) {
    sum.add(w, 1);
    poincare += LaurentPoly::monomial(2 * g_.length(w));
  }
  return {multiply(h, sum), poincare};
}

}  // namespace iwahori
