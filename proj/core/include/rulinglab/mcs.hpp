#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rulinglab/front.hpp"
#include "rulinglab/linalg.hpp"

namespace rulinglab {

/// Vertical segment between two strands of a trivial tangle, carrying a field
/// coefficient; represents the elementary transformation e_top -> e_top -
/// coeff * e_bottom.
struct Handleslide {
  int top = 0;     // 0-based strand
  int bottom = 0;  // 0-based strand, top < bottom
  FieldElem coeff = 0;

  bool operator==(const Handleslide&) const = default;
};

/// Events of a handleslide diagram in a trivial tangle, read left to right.
struct DiagramEvent {
  enum class Kind { Handleslide, Crossing };
  Kind kind = Kind::Handleslide;
  Handleslide hs;
  int crossing_pos = 0;  // 0-based upper strand of the transposition

  static DiagramEvent handleslide(int top, int bottom, FieldElem coeff) {
    DiagramEvent e;
    e.kind = Kind::Handleslide;
    e.hs = {top, bottom, coeff};
    return e;
  }
  static DiagramEvent crossing(int pos) {
    DiagramEvent e;
    e.kind = Kind::Crossing;
    e.crossing_pos = pos;
    return e;
  }
  bool operator==(const DiagramEvent&) const = default;
};

struct HandleslideDiagram {
  int strands = 0;
  int m = 0;
  std::vector<int> mu;  // potentials at the left edge
  std::vector<DiagramEvent> events;

  bool operator==(const HandleslideDiagram&) const = default;
};

/// Composite of the events' elementary transformations, leftmost applied
/// first. Rows give images: row i is the image of e_i.
Matrix composite_matrix(const HandleslideDiagram& d, const PrimeField& f);

/// Checks the grading constraint on every handleslide (zero coefficient or
/// equal potentials mod m at both endpoints).
void check_diagram(const HandleslideDiagram& d);

/// Local rewriting moves. Every move preserves the composite map exactly.
struct Move {
  enum class Kind {
    RemoveZero,        // type 0: drop a zero-coefficient handleslide at index
    IntroduceZero,     // type 0: insert a zero handleslide before index
    SlidePastCrossing, // type 1: handleslide at index hops over the adjacent crossing
    Interchange,       // type 2: swap handleslides at index, index+1
    Merge,             // type 3: merge equal-endpoint handleslides at index, index+1
    IntroduceCancelingPair,  // type 4: insert H_r, H_{-r} before index
    Incorporate,       // type 5: absorb the handleslide at index into the
                       //         adjacent collection [range_begin, range_end)
    RemoveFromCollection  // type 6: extract the handleslide at index out of
                          //         [range_begin, range_end) to its boundary
  };
  Kind kind;
  std::size_t index = 0;
  int top = 0, bottom = 0;      // IntroduceZero / IntroduceCancelingPair
  FieldElem coeff = 0;          // IntroduceCancelingPair
  bool to_left = false;         // SlidePastCrossing / RemoveFromCollection
  std::size_t range_begin = 0;  // Incorporate / RemoveFromCollection
  std::size_t range_end = 0;
};

HandleslideDiagram apply_move(const HandleslideDiagram& d, const Move& move,
                              const PrimeField& f);

/// h < h' ordering of handleslides used by collections: higher top first,
/// then lower bottom.
bool handleslide_less(const Handleslide& a, const Handleslide& b);

/// True when every pair of events in [begin, end) is ordered (all events
/// must be handleslides).
bool properly_ordered(const HandleslideDiagram& d, std::size_t begin, std::size_t end);

// --- slice transfer and sweep -----------------------------------------------

enum class ParamKind { CrossingValue, CuspValue, BasePointUnit };

struct ParamEntry {
  int slice = 0;
  ParamKind kind = ParamKind::CrossingValue;
  FieldElem value = 0;
};

using ParamAssignment = std::vector<ParamEntry>;

struct TransferOutcome {
  std::optional<FilteredComplex> next;       // nullopt marks a dead branch
  std::optional<FieldElem> determined_unit;  // marked right cusps
};

/// Advances the boundary complex across one slice. `value` is the
/// augmentation value at the slice's generator: the crossing value, the cusp
/// value (nonzero only when m = 1), or the base-point unit.
TransferOutcome transfer_slice(const FilteredComplex& state, const Slice& slice,
                               FieldElem value, const PotentialTable& table,
                               int slice_index);

struct SweepOptions {
  std::uint64_t budget = 10'000'000;
  bool collect_witnesses = false;
  bool check_invariants = false;  // homology dimensions preserved per slice
};

struct SweepResult {
  std::uint64_t count = 0;
  std::uint64_t branches_visited = 0;
  std::vector<ParamAssignment> witnesses;
};

/// Exhaustive enumeration of the augmentations extending eps_left whose right
/// boundary lands in the orbit of rho_right. Throws BudgetExceeded rather
/// than undercounting.
SweepResult sweep_enumerate(const TangleFront& front, int m, const PrimeField& f,
                            const FilteredComplex& eps_left, const IsoType& rho_right,
                            const SweepOptions& options = {});

/// Complex attached to a boundary ruling: the canonical augmentation values.
FilteredComplex boundary_complex(const IsoType& rho, const std::vector<int>& mu, int m,
                                 const PrimeField& f);

/// Homology dimension per potential class (classes with dimension 0 omitted).
std::map<int, int> homology_dimensions(const FilteredComplex& c);

}  // namespace rulinglab
