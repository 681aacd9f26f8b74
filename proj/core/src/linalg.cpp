#include "rulinglab/linalg.hpp"

#include <algorithm>

#include "rulinglab/front.hpp"

namespace rulinglab {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mul(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InternalError("matrix shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      FieldElem aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return r;
}

Matrix inverse(const PrimeField& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw InternalError("inverse of non-square matrix");
  int n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (work.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw InternalError("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    FieldElem scale = f.inv(work.at(col, col));
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = f.mul(work.at(col, j), scale);
      inv.at(col, j) = f.mul(inv.at(col, j), scale);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      FieldElem factor = work.at(row, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(row, j) = f.sub(work.at(row, j), f.mul(factor, work.at(col, j)));
        inv.at(row, j) = f.sub(inv.at(row, j), f.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

int rank(const PrimeField& f, Matrix a) {
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int pivot = -1;
    for (int row = r; row < a.rows(); ++row)
      if (a.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    FieldElem scale = f.inv(a.at(r, col));
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), scale);
    for (int row = 0; row < a.rows(); ++row) {
      if (row == r) continue;
      FieldElem factor = a.at(row, col);
      if (factor == 0) continue;
      for (int j = 0; j < a.cols(); ++j)
        a.at(row, j) = f.sub(a.at(row, j), f.mul(factor, a.at(r, j)));
    }
    ++r;
  }
  return r;
}

void check_complex(const FilteredComplex& c) {
  const int n = c.size();
  if (c.d.rows() != n || c.d.cols() != n) throw InternalError("differential shape mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (c.d.at(i, j) == 0) continue;
      if (i >= j) throw InternalError("differential is not strictly filtration-lowering");
      if (!congruent(c.mu[i], long(c.mu[j]) + 1, c.m))
        throw InternalError("differential entry violates the degree constraint");
    }
  Matrix sq = mul(c.field, c.d, c.d);
  if (sq != Matrix(n, n)) throw InternalError("d^2 != 0");
}

bool complex_invariants_hold(const FilteredComplex& c) {
  try {
    check_complex(c);
    return true;
  } catch (const InternalError&) {
    return false;
  }
}

namespace {

// Row-reduction data shared by the normal form and standardization: for each
// index i, an i-admissible combination (combo) whose boundary (reduced) has
// the maximal achievable leading index, recorded in leading (-1 if closed).
struct ReductionData {
  IsoType type;
  std::vector<std::vector<FieldElem>> combo;
  std::vector<std::vector<FieldElem>> reduced;
  std::vector<int> leading;
};

ReductionData reduce_complex(const FilteredComplex& c) {
  check_complex(c);
  const int n = c.size();
  const PrimeField& f = c.field;

  ReductionData data;
  data.combo.assign(n, {});
  data.reduced.assign(n, {});
  data.leading.assign(n, -1);

  auto leading_index = [&](const std::vector<FieldElem>& v) {
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) return j;
    return -1;
  };

  for (int i = n - 1; i >= 0; --i) {
    std::vector<FieldElem> combo(n, 0);
    combo[i] = 1;
    std::vector<FieldElem> v(n, 0);
    for (int j = 0; j < n; ++j) v[j] = c.d.at(i, j);

    while (true) {
      int l = leading_index(v);
      if (l < 0) break;
      int other = -1;
      for (int j = i + 1; j < n; ++j)
        if (data.leading[j] == l && congruent(c.mu[j], c.mu[i], c.m)) {
          other = j;
          break;
        }
      if (other < 0) break;
      FieldElem factor = f.mul(v[l], f.inv(data.reduced[other][l]));
      for (int j = 0; j < n; ++j) {
        v[j] = f.sub(v[j], f.mul(factor, data.reduced[other][j]));
        combo[j] = f.sub(combo[j], f.mul(factor, data.combo[other][j]));
      }
    }
    data.combo[i] = std::move(combo);
    data.leading[i] = leading_index(v);
    data.reduced[i] = std::move(v);
  }

  data.type = IsoType(n);
  for (int i = 0; i < n; ++i) {
    int l = data.leading[i];
    if (l < 0) continue;
    if (data.type.mate[l] != l || data.leading[l] >= 0)
      throw InternalError("normal-form pairing is not a partial matching");
    data.type.pair(i, l);
  }
  return data;
}

}  // namespace

IsoType barannikov(const FilteredComplex& c) { return reduce_complex(c).type; }

FilteredComplex canonical_complex(const IsoType& t, const std::vector<int>& mu, int m,
                                  const PrimeField& field) {
  if (!pairing_valid(t, mu, m, /*allow_homological=*/true))
    throw InputError("isomorphism type " + to_string(t) + " is inconsistent with the potentials");
  FilteredComplex c;
  c.field = field;
  c.m = m;
  c.mu = mu;
  c.d = Matrix(t.size(), t.size());
  for (auto [i, j] : t.pairs()) c.d.at(i, j) = entry_from_eps(field, mu[i], 1);
  return c;
}

FieldElem eps_from_entry(const PrimeField& f, int mu_i, FieldElem entry) {
  return f.mul(f.sign(mu_i), entry);
}

FieldElem entry_from_eps(const PrimeField& f, int mu_i, FieldElem eps) {
  return f.mul(f.sign(mu_i), eps);
}

Standardization standardize(const FilteredComplex& c) {
  ReductionData data = reduce_complex(c);
  const int n = c.size();
  const PrimeField& f = c.field;
  const IsoType& t = data.type;

  // A(i) = same-class upper indices past i whose partner closes earlier.
  auto in_a_set = [&](int i, int j) {
    if (!(j > i && t.is_upper(j) && congruent(c.mu[j], c.mu[i], c.m))) return false;
    long rho_i = t.is_upper(i) ? t.mate[i] : n;  // infinity on homological
    return t.mate[j] < rho_i;
  };

  std::vector<std::vector<FieldElem>> basis(n);  // rows of phi0
  for (int i = 0; i < n; ++i) {
    if (t.is_lower(i)) {
      int u = t.mate[i];
      FieldElem pivot = data.reduced[u][i];
      std::vector<FieldElem> row = data.reduced[u];
      FieldElem scale = f.inv(pivot);
      for (FieldElem& x : row) x = f.mul(x, scale);
      basis[i] = std::move(row);
      continue;
    }
    // Clear the admissible combination down to support {i} u A(i). Closed
    // representatives handle lower/homological indices; for upper j the
    // recorded combination keeps the boundary's leading position intact.
    std::vector<FieldElem> x = data.combo[i];
    for (int j = i + 1; j < n; ++j) {
      if (x[j] == 0 || in_a_set(i, j)) continue;
      FieldElem coeff = x[j];
      std::vector<FieldElem> y;
      if (t.is_lower(j)) {
        int u = t.mate[j];
        y = data.reduced[u];
        FieldElem scale = f.inv(data.reduced[u][j]);
        for (FieldElem& e : y) e = f.mul(e, scale);
      } else {
        y = data.combo[j];
      }
      for (int l = 0; l < n; ++l) x[l] = f.sub(x[l], f.mul(coeff, y[l]));
    }
    basis[i] = std::move(x);
  }

  Standardization out;
  out.phi0 = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.phi0.at(i, j) = basis[i][j];

  Matrix phi_inv = inverse(f, out.phi0);
  out.standard = c;
  out.standard.d = mul(f, mul(f, out.phi0, c.d), phi_inv);

  out.pivots.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!t.is_upper(i)) continue;
    out.pivots[t.mate[i]] = out.standard.d.at(i, t.mate[i]);
    if (out.pivots[t.mate[i]] == 0) throw InternalError("vanishing pivot after standardization");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out.standard.d.at(i, j) != 0 && t.mate[i] != j)
        throw InternalError("standardized differential has an off-pairing entry");
  return out;
}

OrbitStats orbit_stats(const IsoType& t, const std::vector<int>& mu, int m,
                       const PrimeField& field) {
  const int n = t.size();
  if (!pairing_valid(t, mu, m, /*allow_homological=*/true))
    throw InputError("isomorphism type " + to_string(t) + " is inconsistent with the potentials");

  auto in_class = [&](int i, int j) { return congruent(mu[i], mu[j], m); };
  OrbitStats stats;
  for (int i = 0; i < n; ++i) {
    if (t.is_lower(i)) {
      ++stats.lower_count;
      for (int j = i + 1; j < n; ++j)
        if (in_class(i, j)) ++stats.a_index;  // |I(i)|
    } else {
      long rho_i = t.is_upper(i) ? t.mate[i] : n;
      for (int j = i + 1; j < n; ++j)
        if (in_class(i, j) && t.is_upper(j) && t.mate[j] < rho_i) ++stats.a_index;  // |A(i)|
    }
  }
  mpz_class qm1 = mpz_class(field.q()) - 1;
  mpz_class size;
  mpz_pow_ui(size.get_mpz_t(), qm1.get_mpz_t(), stats.lower_count);
  mpz_class qa;
  mpz_pow_ui(qa.get_mpz_t(), mpz_class(field.q()).get_mpz_t(), stats.a_index);
  stats.size = size * qa;
  return stats;
}

bool in_orbit(const FilteredComplex& c, const IsoType& t) {
  if (c.size() != t.size()) throw InputError("isomorphism type size mismatch");
  return barannikov(c) == t;
}

}  // namespace rulinglab
