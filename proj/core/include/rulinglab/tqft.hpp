#pragma once

#include <string>
#include <vector>

#include "rulinglab/poly.hpp"
#include "rulinglab/ruling.hpp"

namespace rulinglab {

/// Sum of z^{-chi(rho)} over rulings restricting to the given boundary pair.
LaurentPoly ruling_polynomial(const TangleFront& front, int m,
                              const BoundaryRuling& rho_l, const BoundaryRuling& rho_r);

/// Generalized count: sum of z^{-chi(rho)} * (q/(q-1))^{h(rho)} over
/// generalized rulings; boundary pairings may have homological strands.
GenPoly generalized_ruling_polynomial(const TangleFront& front, int m,
                                      const BoundaryRuling& rho_l,
                                      const BoundaryRuling& rho_r);

/// Ruling polynomials of a tangle assembled over the boundary bases.
struct RulingMatrix {
  std::vector<BoundaryRuling> row_basis;  // boundary rulings of the left piece
  std::vector<BoundaryRuling> col_basis;
  std::vector<std::vector<LaurentPoly>> entries;

  bool operator==(const RulingMatrix&) const = default;
};

RulingMatrix ruling_matrix(const TangleFront& front, int m);

/// Entrywise product over the shared middle basis; throws on basis mismatch.
RulingMatrix multiply(const RulingMatrix& a, const RulingMatrix& b);

struct CompositionMismatch {
  BoundaryRuling row;
  BoundaryRuling col;
  LaurentPoly whole;    // entry of matrix(t1 o t2)
  LaurentPoly product;  // entry of matrix(t1) * matrix(t2)
};

struct CompositionReport {
  bool ok = true;
  std::vector<CompositionMismatch> mismatches;
};

/// Verifies matrix(t1 o t2) == matrix(t1) * matrix(t2) entry by entry.
CompositionReport compose_check(const TangleFront& t1, const TangleFront& t2, int m);

}  // namespace rulinglab
