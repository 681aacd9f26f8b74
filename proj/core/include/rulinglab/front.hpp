#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rulinglab/errors.hpp"

namespace rulinglab {

/// Congruence modulo `mod`, where mod == 0 means equality in Z.
inline bool congruent(long a, long b, long mod) {
  if (mod == 0) return a == b;
  return ((a - b) % mod + mod) % mod == 0;
}

/// Canonical representative in [0, mod); identity when mod == 0.
inline int reduce_mod(long v, long mod) {
  if (mod == 0) return static_cast<int>(v);
  return static_cast<int>((v % mod + mod) % mod);
}

/// Strand orientation is forced by the Maslov potential: even potential
/// values move rightward, odd ones leftward.
inline bool right_moving(int mu) { return ((mu % 2) + 2) % 2 == 0; }

enum class SliceKind { Crossing, LeftCusp, RightCusp, BasePoint };

/// One elementary event of a front. `pos` is the 1-based strand position,
/// counted from the top, at the slice's left edge. Left cusps carry the
/// potential of the upper new strand; right cusps may be marked with a
/// base point.
struct Slice {
  SliceKind kind;
  int pos;
  bool marked = false;  // right cusps only
  int cusp_mu = 1;      // left cusps only: potential of the new upper strand

  static Slice crossing(int k) { return {SliceKind::Crossing, k}; }
  static Slice left_cusp(int k, int mu_upper = 1) { return {SliceKind::LeftCusp, k, false, mu_upper}; }
  static Slice right_cusp(int k, bool marked = false) { return {SliceKind::RightCusp, k, marked}; }
  static Slice base_point(int k) { return {SliceKind::BasePoint, k}; }

  bool operator==(const Slice&) const = default;
};

/// A Legendrian tangle front as left-boundary data plus elementary slices.
/// r = 0 encodes Z-valued potentials; otherwise potentials live in Z/2r.
struct TangleFront {
  int r = 0;
  int n_left = 0;
  std::vector<int> mu_left;
  std::vector<Slice> slices;

  int two_r() const { return 2 * r; }
  bool operator==(const TangleFront&) const = default;
};

/// Per-boundary strand data derived from a front: potentials, orientations,
/// crossing degrees and right-cusp signs.
struct PotentialTable {
  int two_r = 0;
  /// mu[b] lists the strand potentials at the boundary left of slice b;
  /// mu[slices.size()] is the right boundary.
  std::vector<std::vector<int>> mu;
  /// Reduced degree per slice; meaningful at crossings only.
  std::vector<int> crossing_degree;
  /// +1 for a down cusp, -1 for an up cusp; meaningful at right cusps only.
  std::vector<int> cusp_sign;

  const std::vector<int>& left_mu() const { return mu.front(); }
  const std::vector<int>& right_mu() const { return mu.back(); }
  int n_right() const { return static_cast<int>(mu.back().size()); }

  bool degree_zero(int slice_index, int m) const {
    return congruent(crossing_degree[slice_index], 0, m);
  }
};

struct Diagnostics {
  bool strand_counts_ok = true;
  bool cusp_potentials_ok = true;
  bool base_point_hypothesis_ok = true;   // cusped components carry a base point
  bool all_right_cusps_marked = true;     // structure-theorem mode
  std::vector<std::string> messages;

  bool ok() const { return strand_counts_ok && cusp_potentials_ok && base_point_hypothesis_ok; }
};

struct ClassicalInvariants {
  long long tb = 0;
  long long rot_num = 0;  // rotation number as rot_num / rot_den, reduced
  long long rot_den = 1;
};

/// Parses the line-oriented tangle DSL. Throws ParseError with position.
TangleFront parse_tangle(const std::string& text);

/// Deterministic inverse of parse_tangle.
std::string serialize(const TangleFront& front);

/// Strand counts at every slice boundary; throws InputError when a slice
/// position is out of range.
std::vector<int> strand_counts(const TangleFront& front);

/// Extends the left-boundary potential across every slice. Throws InputError
/// on inconsistent potentials (e.g. around a closed component).
PotentialTable propagate_potential(const TangleFront& front);

/// Non-throwing health report; callers decide severity.
Diagnostics validate(const TangleFront& front);

/// Concatenates two fronts along a matching boundary.
TangleFront compose(const TangleFront& t1, const TangleFront& t2);

/// tb and rotation number of a closed front (n_left == n_right == 0).
ClassicalInvariants classical_invariants(const TangleFront& front);

int right_cusp_count(const TangleFront& front);

/// Base points = bp slices plus marked right cusps.
int base_point_count(const TangleFront& front);

}  // namespace rulinglab
