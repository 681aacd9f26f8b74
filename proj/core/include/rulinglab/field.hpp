#pragma once

#include <cstdint>
#include <vector>

#include "rulinglab/errors.hpp"

namespace rulinglab {

using FieldElem = std::uint32_t;

/// Arithmetic in the prime field F_q, q < 2^20. Elements are canonical
/// residues in [0, q); products of residues fit in 64 bits.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const { return q_; }

  FieldElem add(FieldElem a, FieldElem b) const { return (a + b) % q_; }
  FieldElem sub(FieldElem a, FieldElem b) const { return (a + q_ - b) % q_; }
  FieldElem neg(FieldElem a) const { return a == 0 ? 0 : q_ - a; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    return static_cast<FieldElem>(std::uint64_t(a) * b % q_);
  }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  FieldElem inv(FieldElem a) const;

  /// Canonical residue of an arbitrary signed integer.
  FieldElem reduce(long long v) const {
    long long r = v % static_cast<long long>(q_);
    if (r < 0) r += q_;
    return static_cast<FieldElem>(r);
  }

  /// (-1)^e as a field element.
  FieldElem sign(long long e) const { return (e % 2 + 2) % 2 == 0 ? 1 : reduce(-1); }

  bool operator==(const PrimeField&) const = default;

private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t n);

}  // namespace rulinglab
