#include "iwahori/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace iwahori {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

OmegaQuotient::OmegaQuotient(const RootDatum& rd) : dim_(rd.lattice_rank()) {
  std::vector<std::vector<long>> m;
  for (const auto& c : rd.simple_coroots()) m.emplace_back(c.begin(), c.end());
  std::size_t next = 0;
  for (std::size_t col = 0; col < dim_ && next < m.size(); ++col) {
    // Euclid on column `col` among rows next..end.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = next; i < m.size(); ++i)
        if (m[i][col] != 0 && (best == m.size() || std::labs(m[i][col]) < std::labs(m[best][col]))) best = i;
      if (best == m.size()) break;
      std::swap(m[next], m[best]);
      bool done = true;
      for (std::size_t i = next + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        const long k = m[i][col] / m[next][col];
        for (std::size_t j = 0; j < dim_; ++j) m[i][j] -= k * m[next][j];
        if (m[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (next < m.size() && m[next][col] != 0) {
      if (m[next][col] < 0)
        for (auto& x : m[next]) x = -x;
      rows_.emplace_back(col, m[next]);
      ++next;
    }
  }
  bool unit_pivots = std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.second[r.first] == 1; });
  bool leading = true;
  for (std::size_t i = 0; i < rows_.size(); ++i) leading = leading && rows_[i].first == i;
  if (unit_pivots && leading) {
    if (rows_.size() == dim_) trivial_ = true;
    else if (rows_.size() + 1 == dim_) grade_coord_ = dim_ - 1;
  }
}

OmegaElement OmegaQuotient::reduce(const Coweight& x) const {
  std::vector<long> v(x.begin(), x.end());
  for (const auto& [p, row] : rows_) {
    const long k = floor_div(v[p], row[p]);
    if (k != 0)
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= k * row[j];
  }
  Coweight r(dim_);
  for (std::size_t j = 0; j < dim_; ++j) r[j] = static_cast<int>(v[j]);
  return {r};
}

long OmegaQuotient::grade(const OmegaElement& w) const {
  if (trivial_) return 0;
  if (!grade_coord_) throw PreconditionError("Omega is not graded by Z for this root datum");
  return w.representative[*grade_coord_];
}

std::string OmegaQuotient::label(const OmegaElement& w) const {
  if (integer_graded()) return std::to_string(grade(w));
  return w.representative.to_string();
}

AffineWeylGroup::AffineWeylGroup(RootDatum rd) : rd_(std::move(rd)), w0_(rd_), omega_(rd_) {
  for (std::size_t i = 0; i < rd_.semisimple_rank(); ++i) simple_.push_back(finite(w0_.simple(i)));
  for (std::size_t h : rd_.highest_roots()) {
    const auto& theta = rd_.positive_roots()[h];
    const auto& thetav = rd_.positive_coroots()[h];
    simple_.push_back({thetav, w0_.reflection(theta, thetav)});
  }
  for (const auto& a : rd_.positive_roots()) pos_roots_.emplace_back(a.begin(), a.end());
}

AffineWeylElement AffineWeylGroup::translation(const Coweight& lam) const {
  if (lam.size() != rd_.lattice_rank()) throw PreconditionError("translation has wrong dimension");
  return {lam, w0_.identity()};
}

int AffineWeylGroup::label(std::size_t i) const noexcept {
  const std::size_t r = rd_.semisimple_rank();
  return i < r ? static_cast<int>(i + 1) : -static_cast<int>(i - r);
}

std::size_t AffineWeylGroup::index_of_label(int lab) const {
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (label(i) == lab) return i;
  throw PreconditionError("no affine simple reflection with label " + std::to_string(lab));
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  return {x.translation + w0_.apply(x.finite, y.translation), w0_.multiply(x.finite, y.finite)};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  const FiniteWeylElement winv = w0_.inverse(x.finite);
  return {-w0_.apply(winv, x.translation), winv};
}

AffineWeylElement AffineWeylGroup::left_simple(std::size_t i, const AffineWeylElement& x) const {
  if (i < rd_.semisimple_rank()) return {rd_.simple_reflection(x.translation, i), w0_.left_simple(i, x.finite)};
  return multiply(simple_[i], x);
}

AffineWeylElement AffineWeylGroup::right_simple(const AffineWeylElement& x, std::size_t i) const {
  if (i < rd_.semisimple_rank()) return {x.translation, w0_.right_simple(x.finite, i)};
  return multiply(x, simple_[i]);
}

int AffineWeylGroup::length(const AffineWeylElement& x) const {
  const std::size_t d = rd_.lattice_rank();
  int len = 0;
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
    int p = 0;
    for (std::size_t j = 0; j < d; ++j) p += x.translation[j] * pos_roots_[k][j];
    len += w0_.inverse_makes_negative(x.finite, k) ? std::abs(p - 1) : std::abs(p);
  }
  return len;
}

ReducedWord AffineWeylGroup::reduced_word(const AffineWeylElement& x) const {
  ReducedWord out;
  AffineWeylElement y = x;
  int len = length(y);
  while (len > 0) {
    bool found = false;
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      AffineWeylElement z = left_simple(i, y);
      const int lz = length(z);
      if (lz < len) {
        out.letters.push_back(static_cast<int>(i));
        y = z;
        len = lz;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no left descent for an element of positive length");
  }
  out.omega = y;
  return out;
}

AffineWeylElement AffineWeylGroup::evaluate(const std::vector<int>& letters, const AffineWeylElement& omega) const {
  AffineWeylElement x = omega;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = left_simple(static_cast<std::size_t>(*it), x);
  return x;
}

std::vector<AffineWeylElement> AffineWeylGroup::omega_generators() const {
  std::vector<AffineWeylElement> gens;
  for (std::size_t j = 0; j < rd_.lattice_rank(); ++j) {
    AffineWeylElement w = reduced_word(translation(Coweight::unit(rd_.lattice_rank(), j))).omega;
    if (w == identity()) continue;
    if (std::find(gens.begin(), gens.end(), w) == gens.end()) gens.push_back(w);
  }
  return gens;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& x0, const AffineWeylElement& y0) const {
  if (kottwitz_image(x0) != kottwitz_image(y0)) return false;
  AffineWeylElement x = x0;
  AffineWeylElement y = y0;
  int lx = length(x);
  int ly = length(y);
  // Deodhar's lifting property: for a left descent s of y, x <= y iff
  // sx <= sy (when sx < x) or x <= sy (when sx > x).
  for (;;) {
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    if (lx == ly) return x == y;
    std::size_t s = simple_.size();
    AffineWeylElement sy;
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      sy = left_simple(i, y);
      if (length(sy) < ly) {
        s = i;
        break;
      }
    }
    AffineWeylElement sx = left_simple(s, x);
    const int lsx = length(sx);
    y = sy;
    --ly;
    if (lsx < lx) {
      x = sx;
      lx = lsx;
    }
  }
}

std::vector<int> AffineWeylGroup::finite_word(const AffineWeylElement& x) const {
  std::vector<int> w = w0_.reduced_word(x.finite);
  for (int& i : w) ++i;
  return w;
}

std::string AffineWeylGroup::to_string(const AffineWeylElement& x) const {
  std::string s = "t" + x.translation.to_string();
  for (int i : finite_word(x)) s += " s" + std::to_string(i);
  return s;
}

bool AffineWeylGroup::canonical_less(const AffineWeylElement& a, const AffineWeylElement& b) const {
  const int la = length(a);
  const int lb = length(b);
  if (la != lb) return la < lb;
  if (a.translation != b.translation) return a.translation < b.translation;
  return w0_.reduced_word(a.finite) < w0_.reduced_word(b.finite);
}

void AffineWeylGroup::sort_canonical(std::vector<AffineWeylElement>& xs) const {
  std::sort(xs.begin(), xs.end(), [this](const auto& a, const auto& b) { return canonical_less(a, b); });
}

std::vector<AffineWeylElement> admissible_set(const AffineWeylGroup& g, const Coweight& mu) {
  const RootDatum& rd = g.root_datum();
  if (!rd.is_dominant(mu)) throw PreconditionError("admissible_set: " + mu.to_string() + " is not dominant");
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen;
  std::deque<AffineWeylElement> queue;
  for (const auto& lam : weyl_orbit(rd, mu)) {
    auto t = g.translation(lam);
    if (seen.insert(t).second) queue.push_back(t);
  }
  // Lower covers of y: delete one letter of a reduced word, keep length - 1.
  while (!queue.empty()) {
    const AffineWeylElement y = queue.front();
    queue.pop_front();
    const ReducedWord rw = g.reduced_word(y);
    const int ly = static_cast<int>(rw.letters.size());
    for (std::size_t j = 0; j < rw.letters.size(); ++j) {
      std::vector<int> letters;
      letters.reserve(rw.letters.size() - 1);
      for (std::size_t k = 0; k < rw.letters.size(); ++k)
        if (k != j) letters.push_back(rw.letters[k]);
      AffineWeylElement z = g.evaluate(letters, rw.omega);
      if (g.length(z) != ly - 1) continue;
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  std::vector<AffineWeylElement> out(seen.begin(), seen.end());
  g.sort_canonical(out);
  return out;
}

std::vector<int> critical_indices(const AffineWeylGroup& g, const AffineWeylElement& w) {
  if (g.root_datum().family() != Family::GL) throw PreconditionError("critical_indices requires GL(n)");
  std::vector<int> out;
  const std::size_t n = g.lattice_rank();
  for (std::size_t j = 0; j < n; ++j)
    if (g.bruhat_leq(w, g.translation(Coweight::unit(n, j)))) out.push_back(static_cast<int>(j + 1));
  return out;
}

}  // namespace iwahori
