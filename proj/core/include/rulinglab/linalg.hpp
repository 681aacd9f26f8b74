#pragma once

#include <gmpxx.h>

#include <vector>

#include "rulinglab/field.hpp"
#include "rulinglab/pairing.hpp"

namespace rulinglab {

/// Isomorphism type of a filtered graded complex: the index partition
/// U/L/H together with the pairing U -> L. Upper indices are those i with
/// mate[i] > i, lower mate[i] < i, homological mate[i] == i.
using IsoType = Pairing;

/// Square matrix over F_q, row-major; rows index sources: d(e_i) has
/// coefficient entry(i, j) on e_j.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldElem& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  FieldElem at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<FieldElem> data_;

  friend Matrix mul(const PrimeField& f, const Matrix& a, const Matrix& b);
};

Matrix mul(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix inverse(const PrimeField& f, const Matrix& a);  // throws on singular
int rank(const PrimeField& f, Matrix a);

/// Z/m-graded filtered chain complex on the strands of a trivial tangle:
/// strictly upper-triangular differential d with <d e_i, e_j> = d.at(i, j),
/// nonzero only when mu(j) = mu(i) - 1 (mod m).
struct FilteredComplex {
  PrimeField field{2};
  int m = 0;
  std::vector<int> mu;
  Matrix d;

  int size() const { return static_cast<int>(mu.size()); }
  bool operator==(const FilteredComplex&) const = default;
};

/// Throws InternalError when triangularity, the degree constraint, or
/// d^2 = 0 fails.
void check_complex(const FilteredComplex& c);

bool complex_invariants_hold(const FilteredComplex& c);

/// The normal-form pairing of a filtered graded complex: for each index the
/// maximal achievable leading target over admissible column combinations.
/// Invariant under conjugation by graded filtered automorphisms.
IsoType barannikov(const FilteredComplex& c);

/// The representative of the isomorphism class normalized so that the
/// corresponding augmentation values on the pairs equal 1; the matrix
/// entry at (i, rho(i)) is (-1)^{mu(i)}.
FilteredComplex canonical_complex(const IsoType& t, const std::vector<int>& mu, int m,
                                  const PrimeField& field);

/// Translation between augmentation values on pair generators and matrix
/// entries: eps(a_ij) = (-1)^{mu(i)} * <d e_i, e_j>, and back. (Involution:
/// applying it twice is the identity.)
FieldElem eps_from_entry(const PrimeField& f, int mu_i, FieldElem entry);
FieldElem entry_from_eps(const PrimeField& f, int mu_i, FieldElem eps);

struct Standardization {
  Matrix phi0;              // unipotent; phi0(e_i) = row i
  FilteredComplex standard; // conjugated by phi0^{-1}: entries only at pairs
  std::vector<FieldElem> pivots;  // indexed by lower index j = rho(i)
};

/// Canonical unipotent automorphism taking the complex to its standard form
/// (entries only at the pairing positions, with unit pivots).
Standardization standardize(const FilteredComplex& c);

struct OrbitStats {
  long long lower_count = 0;  // |L|
  long long a_index = 0;      // A(rho)
  mpz_class size;             // (q-1)^|L| * q^A
};

OrbitStats orbit_stats(const IsoType& t, const std::vector<int>& mu, int m,
                       const PrimeField& field);

bool in_orbit(const FilteredComplex& c, const IsoType& t);

}  // namespace rulinglab
