#include "iwahori/weyl_group.hpp"

#include <algorithm>
#include <map>

namespace iwahori {

namespace {

std::vector<int> matmul(const std::vector<int>& a, const std::vector<int>& b, std::size_t n) {
  std::vector<int> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

}  // namespace

FiniteWeylGroup::FiniteWeylGroup(const RootDatum& rd)
    : dim_(rd.lattice_rank()), rank_(rd.semisimple_rank()), num_pos_(rd.positive_roots().size()) {
  const std::size_t n = dim_;
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 0; i < rank_; ++i) {
    std::vector<int> m(n * n, 0);
    const auto& a = rd.simple_roots()[i];
    const auto& c = rd.simple_coroots()[i];
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) m[row * n + col] = (row == col ? 1 : 0) - a[col] * c[row];
    gens.push_back(std::move(m));
  }

  std::vector<int> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;

  // Breadth-first in the left Cayley graph: BFS depth is the length.
  std::map<std::vector<int>, std::uint32_t> index;
  matrices_.push_back(id);
  lengths_.push_back(0);
  index.emplace(id, 0);
  for (std::size_t k = 0; k < matrices_.size(); ++k) {
    for (std::size_t i = 0; i < rank_; ++i) {
      auto m = matmul(gens[i], matrices_[k], n);
      auto [it, inserted] = index.emplace(m, static_cast<std::uint32_t>(matrices_.size()));
      if (inserted) {
        if (matrices_.size() >= kMaxOrder) throw RootDatumError("finite Weyl group too large");
        matrices_.push_back(std::move(m));
        lengths_.push_back(lengths_[k] + 1);
      }
    }
  }
  const std::size_t order = matrices_.size();
  left_.assign(order * rank_, 0);
  right_.assign(order * rank_, 0);
  for (std::size_t k = 0; k < order; ++k)
    for (std::size_t i = 0; i < rank_; ++i) {
      left_[k * rank_ + i] = index.at(matmul(gens[i], matrices_[k], n));
      right_[k * rank_ + i] = index.at(matmul(matrices_[k], gens[i], n));
    }

  // Lexicographically smallest reduced words, by increasing length.
  std::vector<std::uint32_t> by_length(order);
  for (std::size_t k = 0; k < order; ++k) by_length[k] = static_cast<std::uint32_t>(k);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return lengths_[a] < lengths_[b]; });
  words_.assign(order, {});
  for (std::uint32_t k : by_length) {
    if (lengths_[k] == 0) continue;
    for (std::size_t i = 0; i < rank_; ++i) {
      const std::uint32_t shorter = left_[k * rank_ + i];
      if (lengths_[shorter] < lengths_[k]) {
        words_[k].push_back(static_cast<int>(i));
        words_[k].insert(words_[k].end(), words_[shorter].begin(), words_[shorter].end());
        break;
      }
    }
  }

  inverse_.assign(order, 0);
  for (std::size_t k = 0; k < order; ++k) {
    std::uint32_t w = 0;
    // left-multiplying by the letters in order yields the reversed word
    for (int i : words_[k]) w = left_[w * rank_ + static_cast<std::size_t>(i)];
    inverse_[k] = w;
  }

  neg_.assign(order * num_pos_, 0);
  for (std::size_t k = 0; k < order; ++k) {
    const auto& m = matrices_[k];
    for (std::size_t p = 0; p < num_pos_; ++p) {
      // (w^{-1} alpha)(e_j) = alpha(w e_j)
      const auto& alpha = rd.positive_roots()[p];
      Character img(n);
      for (std::size_t j = 0; j < n; ++j) {
        int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += alpha[i] * m[i * n + j];
        img[j] = s;
      }
      const long idx = rd.root_index(img);
      if (idx == RootDatum::kNotARoot) throw RootDatumError("Weyl group does not preserve the roots");
      neg_[k * num_pos_ + p] = idx < 0 ? 1 : 0;
    }
  }

  sorted_index_.assign(index.begin(), index.end());
}

FiniteWeylElement FiniteWeylGroup::multiply(FiniteWeylElement a, FiniteWeylElement b) const noexcept {
  const auto& w = words_[a.index];
  std::uint32_t x = b.index;
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = left_[x * rank_ + static_cast<std::size_t>(*it)];
  return {x};
}

Coweight FiniteWeylGroup::apply(FiniteWeylElement w, const Coweight& x) const noexcept {
  const auto& m = matrices_[w.index];
  Coweight y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < dim_; ++j) s += m[i * dim_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

FiniteWeylElement FiniteWeylGroup::from_matrix(const std::vector<int>& m) const {
  auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), m,
                             [](const auto& entry, const std::vector<int>& key) { return entry.first < key; });
  if (it == sorted_index_.end() || it->first != m) throw PreconditionError("matrix is not in the finite Weyl group");
  return {it->second};
}

FiniteWeylElement FiniteWeylGroup::reflection(const Character& root, const Coweight& coroot) const {
  std::vector<int> m(dim_ * dim_, 0);
  for (std::size_t row = 0; row < dim_; ++row)
    for (std::size_t col = 0; col < dim_; ++col) m[row * dim_ + col] = (row == col ? 1 : 0) - root[col] * coroot[row];
  return from_matrix(m);
}

}  // namespace iwahori
