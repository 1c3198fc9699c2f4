#include "iwahori/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace iwahori {

namespace {

constexpr std::size_t kMaxPositiveRoots = 512;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::vector<int>> parse_matrix(const std::string& key, const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream rows_in(text);
  std::string row;
  while (std::getline(rows_in, row, ';')) {
    row = trim(row);
    if (row.empty()) continue;
    std::vector<int> r;
    std::stringstream cells(row);
    std::string cell;
    while (cells >> cell) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw RootDatumError("config key '" + key + "': not an integer: '" + cell + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::GSp: return "GSp";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family parse_family(const std::string& tag) {
  if (tag == "GL") return Family::GL;
  if (tag == "SL") return Family::SL;
  if (tag == "Sp") return Family::Sp;
  if (tag == "GSp") return Family::GSp;
  if (tag == "custom") return Family::Custom;
  throw RootDatumError("unknown group family '" + tag + "'");
}

RootDatum RootDatum::build(Family family, int n) {
  std::vector<Character> roots;
  std::vector<Coweight> coroots;
  std::size_t d = 0;
  switch (family) {
    case Family::GL: {
      if (n < 1) throw RootDatumError("GL(n) requires n >= 1");
      d = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i + 1 < d; ++i) {
        Character a(d);
        a[i] = 1;
        a[i + 1] = -1;
        Coweight c(d);
        c[i] = 1;
        c[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(c);
      }
      break;
    }
    case Family::SL: {
      if (n < 2) throw RootDatumError("SL(n) requires n >= 2");
      // Basis of the cocharacter lattice: the simple coroots.
      d = static_cast<std::size_t>(n - 1);
      for (std::size_t j = 0; j < d; ++j) {
        Character a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = (i == j) ? 2 : ((i + 1 == j || j + 1 == i) ? -1 : 0);
        roots.push_back(a);
        coroots.push_back(Coweight::unit(d, j));
      }
      break;
    }
    case Family::Sp:
    case Family::GSp: {
      if (n < 2 || n % 2 != 0)
        throw RootDatumError(to_string(family) + "(n) requires an even n >= 2");
      const std::size_t m = static_cast<std::size_t>(n / 2);
      d = family == Family::Sp ? m : m + 1;  // GSp: (a_1..a_m, a_0)
      for (std::size_t i = 0; i + 1 < m; ++i) {
        Character a(d);
        a[i] = 1;
        a[i + 1] = -1;
        Coweight c(d);
        c[i] = 1;
        c[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(c);
      }
      Character a(d);
      a[m - 1] = 2;
      if (family == Family::GSp) a[m] = -1;
      roots.push_back(a);
      coroots.push_back(Coweight::unit(d, m - 1));
      break;
    }
    case Family::Custom:
      throw RootDatumError("custom root data are loaded from a config file");
  }
  RootDatum rd = from_simple(to_string(family) + ":" + std::to_string(n), d, std::move(roots), std::move(coroots));
  rd.family_ = family;
  rd.param_ = n;
  return rd;
}

RootDatum RootDatum::from_simple(std::string name, std::size_t lattice_rank, std::vector<Character> simple_roots,
                                 std::vector<Coweight> simple_coroots) {
  if (lattice_rank == 0 || lattice_rank > kMaxLatticeRank)
    throw RootDatumError("lattice rank must be between 1 and " + std::to_string(kMaxLatticeRank));
  if (simple_roots.size() != simple_coroots.size())
    throw RootDatumError("need as many simple coroots as simple roots");
  for (const auto& a : simple_roots)
    if (a.size() != lattice_rank) throw RootDatumError("simple root has wrong dimension");
  for (const auto& c : simple_coroots)
    if (c.size() != lattice_rank) throw RootDatumError("simple coroot has wrong dimension");

  RootDatum rd;
  rd.name_ = std::move(name);
  rd.lattice_rank_ = lattice_rank;
  rd.simple_roots_ = std::move(simple_roots);
  rd.simple_coroots_ = std::move(simple_coroots);
  rd.expand();
  return rd;
}

void RootDatum::expand() {
  const std::size_t r = simple_roots_.size();
  cartan_.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan_[i][j] = pair(simple_coroots_[i], simple_roots_[j]);

  for (std::size_t i = 0; i < r; ++i) {
    if (cartan_[i][i] != 2) throw RootDatumError("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw RootDatumError("Cartan matrix has a positive off-diagonal entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw RootDatumError("Cartan matrix zero pattern is not symmetric");
    }
  }

  // Positive roots by closing the simple roots under simple reflections.
  positive_roots_.clear();
  positive_coroots_.clear();
  root_coords_.clear();
  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    seen.emplace(c, positive_roots_.size());
    root_coords_.push_back(c);
    positive_roots_.push_back(simple_roots_[i]);
    positive_coroots_.push_back(simple_coroots_[i]);
  }
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      const int p = pair(simple_coroots_[i], positive_roots_[k]);
      if (p == 0) continue;
      std::vector<int> c = root_coords_[k];
      c[i] -= p;
      if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) continue;
      if (seen.count(c)) continue;
      if (positive_roots_.size() >= kMaxPositiveRoots)
        throw RootDatumError("Cartan matrix is not of finite type");
      seen.emplace(c, positive_roots_.size());
      root_coords_.push_back(c);
      Character beta = positive_roots_[k] - p * simple_roots_[i];
      Coweight betav = positive_coroots_[k] - pair(positive_coroots_[k], simple_roots_[i]) * simple_coroots_[i];
      positive_roots_.push_back(beta);
      positive_coroots_.push_back(betav);
    }
  }
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (pair(positive_coroots_[k], positive_roots_[k]) != 2) throw RootDatumError("inconsistent root/coroot pair");

  two_rho_ = Character(lattice_rank_);
  for (const auto& a : positive_roots_) two_rho_ += a;

  // Dynkin components.
  components_.clear();
  std::vector<int> comp(r, -1);
  for (std::size_t i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    components_.emplace_back();
    std::vector<std::size_t> stack{i};
    comp[i] = id;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      components_[id].push_back(static_cast<int>(a));
      for (std::size_t b = 0; b < r; ++b)
        if (comp[b] < 0 && cartan_[a][b] != 0) {
          comp[b] = id;
          stack.push_back(b);
        }
    }
    std::sort(components_[id].begin(), components_[id].end());
  }
  highest_roots_.clear();
  for (const auto& c : components_) {
    std::size_t best = 0;
    int best_height = -1;
    for (std::size_t k = 0; k < root_coords_.size(); ++k) {
      bool inside = true;
      int h = 0;
      for (std::size_t i = 0; i < r; ++i) {
        const bool in_c = std::find(c.begin(), c.end(), static_cast<int>(i)) != c.end();
        if (!in_c && root_coords_[k][i] != 0) inside = false;
        h += root_coords_[k][i];
      }
      if (inside && h > best_height) {
        best_height = h;
        best = k;
      }
    }
    highest_roots_.push_back(best);
  }
}

long RootDatum::root_index(const Character& chi) const {
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    if (positive_roots_[k] == chi) return static_cast<long>(k);
    if (-positive_roots_[k] == chi) return -1 - static_cast<long>(k);
  }
  return kNotARoot;
}

RootDatum RootDatum::levi(std::span<const int> simple_indices) const {
  std::vector<int> idx(simple_indices.begin(), simple_indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<Character> roots;
  std::vector<Coweight> coroots;
  std::string label;
  for (int i : idx) {
    if (i < 0 || static_cast<std::size_t>(i) >= simple_roots_.size())
      throw PreconditionError("Levi index out of range: " + std::to_string(i));
    roots.push_back(simple_roots_[i]);
    coroots.push_back(simple_coroots_[i]);
    label += (label.empty() ? "" : ",") + std::to_string(i + 1);
  }
  RootDatum l = from_simple(name_ + "/levi{" + label + "}", lattice_rank_, std::move(roots), std::move(coroots));
  l.family_ = Family::Custom;
  return l;
}

bool RootDatum::is_dominant(const Coweight& mu) const {
  for (const auto& a : simple_roots_)
    if (pair(mu, a) < 0) return false;
  return true;
}

Coweight RootDatum::simple_reflection(const Coweight& x, std::size_t i) const {
  return x - pair(x, simple_roots_[i]) * simple_coroots_[i];
}

Character RootDatum::simple_reflection(const Character& chi, std::size_t i) const {
  return chi - pair(simple_coroots_[i], chi) * simple_roots_[i];
}

Coweight RootDatum::dominant_representative(const Coweight& x) const {
  Coweight y = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < simple_roots_.size(); ++i)
      if (pair(y, simple_roots_[i]) < 0) {
        y = simple_reflection(y, i);
        changed = true;
      }
  }
  return y;
}

RootDatum RootDatum::from_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw RootDatumError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw RootDatumError("config key '" + key + "' given twice");
    kv[key] = trim(line.substr(eq + 1));
  }
  for (const char* required : {"lattice_rank", "simple_roots", "simple_coroots"})
    if (!kv.count(required)) throw RootDatumError(std::string("config is missing key '") + required + "'");
  for (const auto& [k, v] : kv)
    if (k != "name" && k != "lattice_rank" && k != "simple_roots" && k != "simple_coroots" && k != "cartan")
      throw RootDatumError("unknown config key '" + k + "'");

  int d = 0;
  try {
    d = std::stoi(kv["lattice_rank"]);
  } catch (const std::exception&) {
    throw RootDatumError("config key 'lattice_rank' is not an integer");
  }
  if (d <= 0 || static_cast<std::size_t>(d) > kMaxLatticeRank) throw RootDatumError("lattice_rank out of range");

  auto roots_m = parse_matrix("simple_roots", kv["simple_roots"]);
  auto coroots_m = parse_matrix("simple_coroots", kv["simple_coroots"]);
  std::vector<Character> roots;
  std::vector<Coweight> coroots;
  for (const auto& row : roots_m) {
    if (row.size() != static_cast<std::size_t>(d)) throw RootDatumError("simple_roots row has wrong length");
    roots.emplace_back(std::span<const int>(row));
  }
  for (const auto& row : coroots_m) {
    if (row.size() != static_cast<std::size_t>(d)) throw RootDatumError("simple_coroots row has wrong length");
    coroots.emplace_back(std::span<const int>(row));
  }
  RootDatum rd = from_simple(kv.count("name") ? kv["name"] : "custom", static_cast<std::size_t>(d),
                             std::move(roots), std::move(coroots));
  if (kv.count("cartan")) {
    if (parse_matrix("cartan", kv["cartan"]) != rd.cartan_)
      throw RootDatumError("declared cartan matrix does not match the root/coroot pairings");
  }
  rd.family_ = Family::Custom;
  return rd;
}

RootDatum RootDatum::from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RootDatumError("cannot open root datum config '" + path + "'");
  return from_config(in);
}

std::vector<Coweight> weyl_orbit(const RootDatum& rd, const Coweight& mu) {
  if (mu.size() != rd.lattice_rank()) throw PreconditionError("coweight has wrong dimension");
  std::unordered_set<Coweight, LatticeHash> seen{mu};
  std::vector<Coweight> out{mu};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
      Coweight y = rd.simple_reflection(out[k], i);
      if (seen.insert(y).second) out.push_back(y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

int pair_two_rho(const RootDatum& rd, const Coweight& lam) { return pair(lam, rd.two_rho()); }

bool is_minuscule(const RootDatum& rd, const Coweight& mu) {
  if (!rd.is_dominant(mu)) throw PreconditionError("is_minuscule: " + mu.to_string() + " is not dominant");
  for (const auto& a : rd.positive_roots()) {
    const int p = pair(mu, a);
    if (p != 0 && p != 1) return false;
  }
  return true;
}

Coweight parse_coweight(const RootDatum& rd, const std::string& text) {
  std::vector<int> xs;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    cell = trim(cell);
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(cell, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed coweight '" + text + "'");
    }
    if (used != cell.size()) throw std::invalid_argument("malformed coweight '" + text + "'");
    xs.push_back(x);
  }
  if (xs.size() != rd.lattice_rank())
    throw std::invalid_argument("coweight '" + text + "' has " + std::to_string(xs.size()) +
                                " entries, expected " + std::to_string(rd.lattice_rank()));
  return Coweight(std::span<const int>(xs));
}

}  // namespace iwahori
