#include "rulinglab/poly.hpp"

#include <sstream>

#include "rulinglab/errors.hpp"

namespace rulinglab {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw InternalError("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw InternalError("degree of zero polynomial");
  return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const mpz_class& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      auto it = r.terms_.find(e1 + e2);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e1 + e2, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + dexp, c);
  return r;
}

bool LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly* out) {
  if (den.is_zero()) throw InternalError("division by zero polynomial");
  mpz_class lead = den.terms_.rbegin()->second;
  if (lead != 1 && lead != -1) throw InternalError("divisor leading coefficient must be a unit");
  int dend = den.max_degree();

  LaurentPoly rem = num;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    int e = rem.max_degree();
    if (e - dend < num.min_degree() - den.min_degree() - 1) return false;  // cannot terminate
    mpz_class c = rem.terms_.rbegin()->second / lead;
    LaurentPoly t = monomial(e - dend, c);
    quot += t;
    rem -= t * den;
    if (!rem.is_zero() && rem.max_degree() >= e)
      throw InternalError("non-decreasing remainder in polynomial division");
  }
  *out = quot;
  return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

HalfPoly z_in_s() {
  HalfPoly z = HalfPoly::monomial(1);
  z -= HalfPoly::monomial(-1);
  return z;
}

GenPoly GenPoly::monomial(int zexp, int hexp, const mpz_class& coeff) {
  GenPoly p;
  if (coeff != 0) p.terms_[{zexp, hexp}] = coeff;
  return p;
}

void GenPoly::add_term(int zexp, int hexp, const mpz_class& c) {
  auto key = std::make_pair(zexp, hexp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GenPoly GenPoly::operator+(const GenPoly& o) const {
  GenPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

GenPoly GenPoly::operator*(const GenPoly& o) const {
  GenPoly r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

int GenPoly::max_z_degree() const {
  if (terms_.empty()) throw InternalError("degree of zero polynomial");
  int d = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

std::string GenPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    auto [ze, he] = k;
    mpz_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool need_star = false;
    if (a != 1 || (ze == 0 && he == 0)) {
      os << a.get_str();
      need_star = true;
    }
    if (ze != 0) {
      if (need_star) os << "*";
      os << "z";
      if (ze != 1) os << "^" << ze;
      need_star = true;
    }
    if (he != 0) {
      if (need_star) os << "*";
      os << "(q/(q-1))";
      if (he != 1) os << "^" << he;
    }
  }
  return os.str();
}

SRational::SRational(HalfPoly num, unsigned z_den_pow) : num_(std::move(num)), z_den_pow_(z_den_pow) {
  reduce();
}

void SRational::reduce() {
  if (num_.is_zero()) {
    z_den_pow_ = 0;
    return;
  }
  const HalfPoly z = z_in_s();
  while (z_den_pow_ > 0) {
    HalfPoly q;
    if (!HalfPoly::divide_exact(num_, z, &q)) break;
    num_ = q;
    --z_den_pow_;
  }
}

const HalfPoly& SRational::as_half_poly() const {
  if (z_den_pow_ != 0)
    throw InternalError("value is not a Laurent polynomial in s: " + to_string());
  return num_;
}

SRational SRational::operator+(const SRational& o) const {
  unsigned k = std::max(z_den_pow_, o.z_den_pow_);
  const HalfPoly z = z_in_s();
  HalfPoly a = num_ * z.pow(k - z_den_pow_);
  HalfPoly b = o.num_ * z.pow(k - o.z_den_pow_);
  return SRational(a + b, k);
}

SRational SRational::operator*(const SRational& o) const {
  return SRational(num_ * o.num_, z_den_pow_ + o.z_den_pow_);
}

bool SRational::operator==(const SRational& o) const {
  const HalfPoly z = z_in_s();
  return num_ * z.pow(o.z_den_pow_) == o.num_ * z.pow(z_den_pow_);
}

std::string SRational::to_string() const {
  if (z_den_pow_ == 0) return num_.to_string("s");
  return "(" + num_.to_string("s") + ") / (s - s^-1)^" + std::to_string(z_den_pow_);
}

SRational substitute_z(const LaurentPoly& p) {
  const HalfPoly z = z_in_s();
  SRational acc;
  for (const auto& [e, c] : p.terms()) {
    if (e >= 0)
      acc = acc + SRational(z.pow(unsigned(e)) * HalfPoly(c));
    else
      acc = acc + SRational(HalfPoly(c), unsigned(-e));
  }
  return acc;
}

SRational substitute_z(const GenPoly& p) {
  // c * z^a * (q/(q-1))^h  =  c * s^h * z^(a-h)  since z * q/(q-1) = s.
  SRational acc;
  for (const auto& [k, c] : p.terms()) {
    auto [a, h] = k;
    HalfPoly m = HalfPoly::monomial(h, c);
    int e = a - h;
    if (e >= 0)
      acc = acc + SRational(m * z_in_s().pow(unsigned(e)));
    else
      acc = acc + SRational(m, unsigned(-e));
  }
  return acc;
}

BigRational::BigRational(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw InternalError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string BigRational::to_string() const {
  if (den == 1) return num.get_str();
  return num.get_str() + "/" + den.get_str();
}

}  // namespace rulinglab
