#include "rulinglab/tqft.hpp"

namespace rulinglab {

LaurentPoly ruling_polynomial(const TangleFront& front, int m,
                              const BoundaryRuling& rho_l, const BoundaryRuling& rho_r) {
  LaurentPoly sum;
  for (const RulingPath& path : enumerate_rulings(front, m, rho_l, rho_r))
    sum += LaurentPoly::monomial(-path.chi());
  return sum;
}

GenPoly generalized_ruling_polynomial(const TangleFront& front, int m,
                                      const BoundaryRuling& rho_l,
                                      const BoundaryRuling& rho_r) {
  GenPoly sum;
  for (const RulingPath& path : enumerate_rulings(front, m, rho_l, rho_r, /*generalized=*/true))
    sum.add_term(-path.chi(), path.h, 1);
  return sum;
}

RulingMatrix ruling_matrix(const TangleFront& front, int m) {
  PotentialTable table = propagate_potential(front);
  RulingMatrix out;
  out.row_basis = boundary_rulings(table.left_mu(), m);
  out.col_basis = boundary_rulings(table.right_mu(), m);
  out.entries.resize(out.row_basis.size());
  for (std::size_t i = 0; i < out.row_basis.size(); ++i) {
    out.entries[i].reserve(out.col_basis.size());
    for (std::size_t j = 0; j < out.col_basis.size(); ++j)
      out.entries[i].push_back(ruling_polynomial(front, m, out.row_basis[i], out.col_basis[j]));
  }
  return out;
}

RulingMatrix multiply(const RulingMatrix& a, const RulingMatrix& b) {
  if (a.col_basis != b.row_basis)
    throw InputError("ruling matrix product: middle bases do not match");
  RulingMatrix out;
  out.row_basis = a.row_basis;
  out.col_basis = b.col_basis;
  out.entries.assign(a.row_basis.size(), std::vector<LaurentPoly>(b.col_basis.size()));
  for (std::size_t i = 0; i < a.row_basis.size(); ++i)
    for (std::size_t j = 0; j < b.col_basis.size(); ++j)
      for (std::size_t k = 0; k < a.col_basis.size(); ++k)
        out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
  return out;
}

CompositionReport compose_check(const TangleFront& t1, const TangleFront& t2, int m) {
  TangleFront whole = compose(t1, t2);
  RulingMatrix lhs = ruling_matrix(whole, m);
  RulingMatrix rhs = multiply(ruling_matrix(t1, m), ruling_matrix(t2, m));

  CompositionReport report;
  if (lhs.row_basis != rhs.row_basis || lhs.col_basis != rhs.col_basis)
    throw InternalError("composition bases disagree");
  for (std::size_t i = 0; i < lhs.row_basis.size(); ++i)
    for (std::size_t j = 0; j < lhs.col_basis.size(); ++j)
      if (lhs.entries[i][j] != rhs.entries[i][j]) {
        report.ok = false;
        report.mismatches.push_back(
            {lhs.row_basis[i], lhs.col_basis[j], lhs.entries[i][j], rhs.entries[i][j]});
      }
  return report;
}

}  // namespace rulinglab
