#include "rulinglab/ruling.hpp"

#include <algorithm>

namespace rulinglab {

namespace {

enum class IntervalRelation { DisjointOrNested, Interleaved };

IntervalRelation relate(int a1, int b1, int a2, int b2) {
  if (b1 < a2 || b2 < a1) return IntervalRelation::DisjointOrNested;
  if ((a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2)) return IntervalRelation::DisjointOrNested;
  return IntervalRelation::Interleaved;
}

}  // namespace

CrossingBranches classify_crossing(const BoundaryRuling& state, int k, bool degree_zero) {
  CrossingBranches out;
  const int n = state.size();
  if (state.mate[k] == k + 1) {
    out.invalid = true;  // paired strands never cross (eyes are embedded)
    return out;
  }
  bool h1 = state.is_homological(k);
  bool h2 = state.is_homological(k + 1);
  if (h1 && h2) {
    out.options.push_back(degree_zero ? CrossingBehavior::HomologicalCrossing
                                      : CrossingBehavior::PassNonzeroDegree);
    return out;
  }
  // A homological strand behaves as if paired with a phantom strand below
  // everything; n stands in for its index.
  int a = h1 ? n : state.mate[k];
  int b = h2 ? n : state.mate[k + 1];
  IntervalRelation rel =
      relate(std::min(k, a), std::max(k, a), std::min(k + 1, b), std::max(k + 1, b));
  if (!degree_zero) {
    out.options.push_back(CrossingBehavior::PassNonzeroDegree);
  } else if (rel == IntervalRelation::DisjointOrNested) {
    out.options.push_back(CrossingBehavior::Switch);
    out.options.push_back(CrossingBehavior::Departure);
  } else {
    out.options.push_back(CrossingBehavior::Return);
  }
  return out;
}

RulingStats ruling_stats(const RulingPath& path) {
  return {path.s, path.r(), path.d, path.h, path.chi()};
}

namespace {

struct Sweep {
  const TangleFront& front;
  const PotentialTable& table;
  int m;
  bool generalized;
  const BoundaryRuling& target;
  std::vector<RulingPath>* out;

  std::vector<CrossingBehavior> behavior;
  std::vector<BoundaryRuling> states;

  void finish(const BoundaryRuling& state) {
    if (state != target) return;
    RulingPath path;
    path.behavior = behavior;
    path.states = states;
    path.states.push_back(state);
    path.right_cusps = right_cusp_count(front);
    path.m_is_one = (m == 1);
    for (std::size_t i = 0; i < behavior.size(); ++i) {
      switch (behavior[i]) {
        case CrossingBehavior::Switch:
          ++path.s;
          path.switch_slices.push_back(static_cast<int>(i));
          break;
        case CrossingBehavior::Return: ++path.r_prime; break;
        case CrossingBehavior::Departure: ++path.d; break;
        case CrossingBehavior::HomologicalCrossing: ++path.h; break;
        default: break;
      }
    }
    out->push_back(std::move(path));
  }

  void step(std::size_t slice_index, BoundaryRuling state) {
    if (slice_index == front.slices.size()) {
      finish(state);
      return;
    }
    states.push_back(state);
    const Slice& sl = front.slices[slice_index];
    const int k = sl.pos - 1;
    switch (sl.kind) {
      case SliceKind::BasePoint:
        behavior.push_back(CrossingBehavior::None);
        step(slice_index + 1, state);
        behavior.pop_back();
        break;
      case SliceKind::LeftCusp: {
        BoundaryRuling next(state.size() + 2);
        for (int i = 0; i < state.size(); ++i) {
          int ni = i < k ? i : i + 2;
          int mi = state.mate[i];
          next.mate[ni] = mi < k ? mi : mi + 2;
        }
        next.pair(k, k + 1);
        behavior.push_back(CrossingBehavior::None);
        step(slice_index + 1, next);
        behavior.pop_back();
        break;
      }
      case SliceKind::RightCusp: {
        if (state.mate[k] != k + 1) break;  // cusp strands must close one eye
        BoundaryRuling next(state.size() - 2);
        for (int i = 0; i < state.size(); ++i) {
          if (i == k || i == k + 1) continue;
          int ni = i < k ? i : i - 2;
          int mi = state.mate[i];
          next.mate[ni] = mi < k ? mi : mi - 2;
        }
        behavior.push_back(CrossingBehavior::None);
        step(slice_index + 1, next);
        behavior.pop_back();
        break;
      }
      case SliceKind::Crossing: {
        bool deg0 = table.degree_zero(static_cast<int>(slice_index), m);
        CrossingBranches branches = classify_crossing(state, k, deg0);
        if (branches.invalid) break;
        for (CrossingBehavior choice : branches.options) {
          BoundaryRuling next = state;
          if (choice != CrossingBehavior::Switch) {
            // Conjugate the pairing by the transposition (k, k+1).
            std::swap(next.mate[k], next.mate[k + 1]);
            for (int& v : next.mate) {
              if (v == k) v = k + 1;
              else if (v == k + 1) v = k;
            }
          }
          behavior.push_back(choice);
          step(slice_index + 1, next);
          behavior.pop_back();
        }
        break;
      }
    }
    states.pop_back();
  }
};

}  // namespace

void check_modulus(const TangleFront& front, int m) {
  if (m < 0) throw InputError("grading modulus m must be nonnegative");
  int two_r = front.two_r();
  if (two_r == 0) return;  // Z-valued potentials admit every m
  if (m == 0 || two_r % m != 0)
    throw InputError("m = " + std::to_string(m) + " does not divide 2r = " + std::to_string(two_r));
}

std::vector<RulingPath> enumerate_rulings(const TangleFront& front, int m,
                                          const BoundaryRuling& rho_l,
                                          const BoundaryRuling& rho_r,
                                          bool generalized) {
  check_modulus(front, m);
  PotentialTable table = propagate_potential(front);
  if (!pairing_valid(rho_l, table.left_mu(), m, generalized))
    throw InputError("left boundary ruling " + to_string(rho_l) +
                     " is inconsistent with the boundary potentials");
  if (!pairing_valid(rho_r, table.right_mu(), m, generalized))
    throw InputError("right boundary ruling " + to_string(rho_r) +
                     " is inconsistent with the boundary potentials");
  if (!generalized && (!rho_l.is_perfect() || !rho_r.is_perfect()))
    throw InputError("ordinary boundary rulings cannot have homological strands");

  std::vector<RulingPath> paths;
  Sweep sweep{front, table, m, generalized, rho_r, &paths};
  sweep.step(0, rho_l);
  std::sort(paths.begin(), paths.end(), [](const RulingPath& a, const RulingPath& b) {
    if (a.switch_slices != b.switch_slices) return a.switch_slices < b.switch_slices;
    return a.behavior < b.behavior;
  });
  return paths;
}

std::vector<BoundaryRuling> boundary_rulings(const std::vector<int>& mu, int m,
                                             bool generalized) {
  return enumerate_pairings(mu, m, generalized);
}

TangleFront hat_construction(const TangleFront& front, const HomologySpec& h, int m) {
  check_modulus(front, m);
  if (m > 0 && static_cast<int>(h.size()) > m)
    throw InputError("homology type lists " + std::to_string(h.size()) +
                     " classes for modulus m = " + std::to_string(m));
  for (int k : h)
    if (k < 0) throw InputError("homology multiplicities must be nonnegative");

  TangleFront out = front;
  std::vector<int> block_mu;
  for (std::size_t i = 0; i < h.size(); ++i) {
    int lift = m > 0 ? reduce_mod(static_cast<long>(i) + 1, m) : static_cast<int>(i) + 1;
    for (int c = 0; c < h[i]; ++c) block_mu.push_back(lift);
  }
  int extra = static_cast<int>(block_mu.size());
  if (extra == 0) return out;

  out.n_left += extra;
  out.mu_left.insert(out.mu_left.begin(), block_mu.begin(), block_mu.end());
  for (int& v : out.mu_left) v = reduce_mod(v, out.two_r());
  for (Slice& s : out.slices) s.pos += extra;
  return out;
}

}  // namespace rulinglab
