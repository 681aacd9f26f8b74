#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace rulinglab {

/// Exact Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients. No zero coefficients are stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(long constant);
  explicit LaurentPoly(const mpz_class& constant);

  static LaurentPoly monomial(int exp, const mpz_class& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // throws on zero
  int max_degree() const;  // throws on zero
  mpz_class coeff(int exp) const;
  const std::map<int, mpz_class>& terms() const { return terms_; }

  void set_coeff(int exp, const mpz_class& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly pow(unsigned e) const;
  LaurentPoly shifted(int dexp) const;  // multiply by var^dexp

  /// Exact division; returns false (out untouched) when not divisible.
  /// The divisor's leading coefficient must be a unit.
  static bool divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly* out);

  /// Pretty form like "2*z + z^3"; terms in increasing exponent order.
  std::string to_string(const std::string& var) const;

private:
  std::map<int, mpz_class> terms_;
};

/// Laurent polynomial in s, where s stands for the square root of q.
using HalfPoly = LaurentPoly;

/// z as an element of the s-ring: s - s^-1.
HalfPoly z_in_s();

/// Integer polynomial in z and w = q/(q-1): sum of c * z^zexp * w^hexp.
class GenPoly {
public:
  GenPoly() = default;

  static GenPoly monomial(int zexp, int hexp, const mpz_class& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, mpz_class>& terms() const { return terms_; }
  void add_term(int zexp, int hexp, const mpz_class& c);

  GenPoly operator+(const GenPoly& o) const;
  GenPoly operator*(const GenPoly& o) const;
  bool operator==(const GenPoly&) const = default;

  /// Top degree in z, ignoring the w exponents. Throws on zero.
  int max_z_degree() const;

  std::string to_string() const;

private:
  std::map<std::pair<int, int>, mpz_class> terms_;
};

/// Element of Z[s^{+-1}] divided by a power of z = s - s^-1, kept reduced.
/// Every substitution result lives here; as_half_poly() extracts the
/// polynomial when the reduced denominator is trivial.
class SRational {
public:
  SRational() = default;
  explicit SRational(HalfPoly num, unsigned z_den_pow = 0);

  const HalfPoly& num() const { return num_; }
  unsigned z_den_pow() const { return z_den_pow_; }

  bool is_polynomial() const { return z_den_pow_ == 0; }
  const HalfPoly& as_half_poly() const;  // throws unless polynomial

  SRational operator+(const SRational& o) const;
  SRational operator*(const SRational& o) const;
  bool operator==(const SRational& o) const;

  std::string to_string() const;

private:
  void reduce();

  HalfPoly num_;
  unsigned z_den_pow_ = 0;
};

/// z |-> s - s^-1, applied term by term.
SRational substitute_z(const LaurentPoly& p);

/// z |-> s - s^-1 and q/(q-1) |-> s/(s - s^-1); note z * q/(q-1) = s.
SRational substitute_z(const GenPoly& p);

/// Reduced fraction of arbitrary-precision integers; denominator positive.
struct BigRational {
  mpz_class num = 0;
  mpz_class den = 1;

  BigRational() = default;
  BigRational(mpz_class n, mpz_class d);

  bool operator==(const BigRational&) const = default;
  std::string to_string() const;
};

}  // namespace rulinglab
