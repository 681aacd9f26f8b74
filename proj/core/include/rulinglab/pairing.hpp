#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rulinglab/errors.hpp"

namespace rulinglab {

/// A partial pairing of strand positions 0..n-1: mate[i] == j pairs i with j,
/// mate[i] == i leaves i unpaired ("homological"). Used both as a boundary
/// ruling (no unpaired strands) and as an isomorphism type U/L/H with the
/// pairing map U -> L, where i in U iff i < mate[i].
struct Pairing {
  std::vector<int> mate;

  Pairing() = default;
  explicit Pairing(int n) : mate(n) {
    for (int i = 0; i < n; ++i) mate[i] = i;
  }

  int size() const { return static_cast<int>(mate.size()); }
  bool is_homological(int i) const { return mate[i] == i; }
  bool is_upper(int i) const { return mate[i] > i; }
  bool is_lower(int i) const { return mate[i] < i; }

  void pair(int i, int j) {
    mate[i] = j;
    mate[j] = i;
  }

  /// Ordered pairs (i, j) with i < j.
  std::vector<std::pair<int, int>> pairs() const;
  std::vector<int> homological() const;
  bool is_perfect() const { return homological().empty(); }

  auto operator<=>(const Pairing&) const = default;
};

/// Multiplicity of unpaired strands per potential class mod m.
using HomologyType = std::map<int, int>;

HomologyType homology_type(const Pairing& p, const std::vector<int>& mu, int m);

/// Checks mate consistency and the potential condition
/// mu(upper) = mu(lower) + 1 (mod m) on every pair.
bool pairing_valid(const Pairing& p, const std::vector<int>& mu, int m,
                   bool allow_homological);

/// All valid pairings for the given potentials; perfect ones only unless
/// allow_homological. Sorted by mate vector (deterministic basis order).
std::vector<Pairing> enumerate_pairings(const std::vector<int>& mu, int m,
                                        bool allow_homological);

/// Parses "(1,2)(3,4)[5]" with 1-based strand labels; "()" or "" denote the
/// empty pairing on n = 0 strands.
Pairing parse_pairing(const std::string& text, int n);

std::string to_string(const Pairing& p);

}  // namespace rulinglab
