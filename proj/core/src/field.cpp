#include "rulinglab/field.hpp"

namespace rulinglab {

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 20) || !is_prime(q))
    throw InputError("field order must be a prime below 2^20, got " + std::to_string(q));
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const {
  FieldElem acc = 1;
  FieldElem base = a % q_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a % q_ == 0) throw InternalError("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace rulinglab
