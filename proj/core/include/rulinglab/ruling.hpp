#pragma once

#include <optional>
#include <vector>

#include "rulinglab/front.hpp"
#include "rulinglab/pairing.hpp"

namespace rulinglab {

/// Pairing of the strands at one slice boundary; homological strands allowed
/// only for generalized rulings.
using BoundaryRuling = Pairing;

enum class CrossingBehavior {
  None,             // slice is not a crossing
  Switch,           // degree 0, disjoint or nested; pairing kept in place
  Return,           // degree 0, properly interleaved; strands swap
  Departure,        // degree 0, disjoint or nested; strands swap
  PassNonzeroDegree,
  HomologicalCrossing,  // both strands homological, degree 0
};

/// The branch set available at one crossing, in exploration order.
struct CrossingBranches {
  bool invalid = false;  // the two strands are paired with each other
  std::vector<CrossingBehavior> options;
};

/// Relative position of the two pairing intervals at a crossing between
/// positions k, k+1 (0-based k). A homological strand counts as paired with
/// a phantom strand below everything.
CrossingBranches classify_crossing(const BoundaryRuling& state, int k, bool degree_zero);

/// One enumerated ruling: per-slice behavior, counters, and the pairing at
/// every slice boundary.
struct RulingPath {
  std::vector<CrossingBehavior> behavior;  // indexed by slice
  std::vector<int> switch_slices;
  std::vector<BoundaryRuling> states;      // indexed by boundary, size slices+1
  int s = 0;        // switches
  int r_prime = 0;  // graded returns
  int d = 0;        // graded departures
  int h = 0;        // graded homological crossings
  int right_cusps = 0;
  bool m_is_one = false;

  int r() const { return r_prime + (m_is_one ? right_cusps : 0); }
  int chi() const { return right_cusps - s - h; }
};

struct RulingStats {
  int s = 0, r = 0, d = 0, h = 0, chi = 0;
};

RulingStats ruling_stats(const RulingPath& path);

/// Depth-first left-to-right sweep over all (generalized) normal rulings of
/// the front restricting to rho_l and rho_r. Output sorted by switch-set.
std::vector<RulingPath> enumerate_rulings(const TangleFront& front, int m,
                                          const BoundaryRuling& rho_l,
                                          const BoundaryRuling& rho_r,
                                          bool generalized = false);

/// Boundary rulings of the trivial tangle with the given potentials.
std::vector<BoundaryRuling> boundary_rulings(const std::vector<int>& mu, int m,
                                             bool generalized = false);

/// Homology class multiplicities encoded as counts for classes 0..len-1.
/// For m > 0 the length must not exceed m.
using HomologySpec = std::vector<int>;

/// Adds parallel strands above the front, one block per homology class, with
/// potentials congruent to class+1 mod m (smallest nonnegative lift).
TangleFront hat_construction(const TangleFront& front, const HomologySpec& h, int m);

/// Requires m to divide 2r (any m when r = 0).
void check_modulus(const TangleFront& front, int m);

}  // namespace rulinglab
