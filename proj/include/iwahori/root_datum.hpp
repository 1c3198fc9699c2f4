#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "iwahori/lattice.hpp"

namespace iwahori {

/// Raised when a root datum cannot be built or a config file is malformed.
class RootDatumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's documented precondition does not hold
/// (non-dominant input, non-minuscule coweight, wrong group, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { GL, SL, Sp, GSp, Custom };

std::string to_string(Family f);
Family parse_family(const std::string& tag);

/// A based root datum of a split reductive group.
///
/// The cocharacter lattice is Z^d in a fixed basis and characters live in the
/// dual basis, so pairing is the dot product. Positive roots are stored fully
/// expanded together with their coroots. A coweight is dominant when it pairs
/// non-negatively with every simple root (upper-triangular Borel for GL(n)).
class RootDatum {
 public:
  /// GL:n (n >= 1), SL:n (n >= 2), Sp:2m and GSp:2m (2m >= 2). The integer is
  /// always the size of the defining matrices.
  static RootDatum build(Family family, int n);

  /// Parses the plain-text key/value format described in docs/root_datum_config.md.
  static RootDatum from_config(std::istream& in);
  static RootDatum from_config_file(const std::string& path);

  /// Builds a root datum directly from simple roots and coroots and validates it.
  static RootDatum from_simple(std::string name, std::size_t lattice_rank, std::vector<Character> simple_roots,
                               std::vector<Coweight> simple_coroots);

  /// Standard Levi subgroup attached to a subset of the simple roots
  /// (0-based indices). Same lattice, same dominance convention.
  RootDatum levi(std::span<const int> simple_indices) const;

  Family family() const noexcept { return family_; }
  int family_parameter() const noexcept { return param_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t lattice_rank() const noexcept { return lattice_rank_; }
  std::size_t semisimple_rank() const noexcept { return simple_roots_.size(); }

  const std::vector<std::vector<int>>& cartan() const noexcept { return cartan_; }
  const std::vector<Character>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const noexcept { return simple_coroots_; }
  const std::vector<Character>& positive_roots() const noexcept { return positive_roots_; }
  const std::vector<Coweight>& positive_coroots() const noexcept { return positive_coroots_; }
  /// Coordinates of each positive root in the basis of simple roots.
  const std::vector<std::vector<int>>& positive_root_coordinates() const noexcept { return root_coords_; }
  const Character& two_rho() const noexcept { return two_rho_; }

  /// Connected components of the Dynkin diagram, as lists of simple indices.
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  /// Index (into positive_roots) of the highest root of each component.
  const std::vector<std::size_t>& highest_roots() const noexcept { return highest_roots_; }

  /// Index of `chi` among positive roots, or -1 - index among negatives, or
  /// `kNotARoot`.
  static constexpr long kNotARoot = 1L << 40;
  long root_index(const Character& chi) const;

  Coweight zero() const { return Coweight(lattice_rank_); }
  bool is_dominant(const Coweight& mu) const;
  Coweight simple_reflection(const Coweight& x, std::size_t i) const;
  Character simple_reflection(const Character& chi, std::size_t i) const;
  Coweight dominant_representative(const Coweight& x) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.lattice_rank_ == b.lattice_rank_ && a.simple_roots_ == b.simple_roots_ &&
           a.simple_coroots_ == b.simple_coroots_;
  }

 private:
  RootDatum() = default;
  void expand();

  Family family_ = Family::Custom;
  int param_ = 0;
  std::string name_;
  std::size_t lattice_rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Character> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  std::vector<Character> positive_roots_;
  std::vector<Coweight> positive_coroots_;
  std::vector<std::vector<int>> root_coords_;
  Character two_rho_;
  std::vector<std::vector<int>> components_;
  std::vector<std::size_t> highest_roots_;
};

/// Full W0-orbit of `mu`, sorted lexicographically.
std::vector<Coweight> weyl_orbit(const RootDatum& rd, const Coweight& mu);

/// <lam, 2 rho>.
int pair_two_rho(const RootDatum& rd, const Coweight& lam);

/// True iff <mu, alpha> is 0 or 1 for every positive root. Requires mu dominant.
bool is_minuscule(const RootDatum& rd, const Coweight& mu);

/// Parses "1,0,-2" into a coweight of the datum's lattice rank.
Coweight parse_coweight(const RootDatum& rd, const std::string& text);

}  // namespace iwahori
