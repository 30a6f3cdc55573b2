#include "satbound/field.hpp"

namespace satbound {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p))
    throw std::invalid_argument("Field::prime: modulus " + std::to_string(p) +
                                " is not prime");
  return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rationals, 0); }

Coeff Field::from_int(std::int64_t n) const {
  Coeff c;
  if (kind_ == Kind::Prime) {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    c.fp = r;
  } else {
    c.rat = Rational(n);
  }
  return c;
}

Coeff Field::from_rational(const Rational& q) const {
  Coeff c;
  if (kind_ == Kind::Rationals) {
    c.rat = q;
    return c;
  }
  BigInt num = boost::multiprecision::numerator(q) % p_;
  BigInt den = boost::multiprecision::denominator(q) % p_;
  if (num < 0) num += p_;
  if (den == 0)
    throw std::domain_error("Field::from_rational: denominator divisible by p");
  Coeff d;
  d.fp = static_cast<std::int64_t>(den);
  return mul(from_int(static_cast<std::int64_t>(num)), inv(d));
}

bool Field::is_zero(const Coeff& a) const {
  return kind_ == Kind::Prime ? a.fp == 0 : a.rat == 0;
}

bool Field::is_one(const Coeff& a) const {
  return kind_ == Kind::Prime ? a.fp == 1 : a.rat == 1;
}

bool Field::eq(const Coeff& a, const Coeff& b) const {
  return kind_ == Kind::Prime ? a.fp == b.fp : a.rat == b.rat;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  Coeff c;
  if (kind_ == Kind::Prime) {
    c.fp = a.fp + b.fp;
    if (c.fp >= p_) c.fp -= p_;
  } else {
    c.rat = a.rat + b.rat;
  }
  return c;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  Coeff c;
  if (kind_ == Kind::Prime) {
    c.fp = a.fp - b.fp;
    if (c.fp < 0) c.fp += p_;
  } else {
    c.rat = a.rat - b.rat;
  }
  return c;
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  Coeff c;
  if (kind_ == Kind::Prime) {
    c.fp = static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(a.fp) * static_cast<std::uint64_t>(b.fp)) %
        p_);
  } else {
    c.rat = a.rat * b.rat;
  }
  return c;
}

Coeff Field::neg(const Coeff& a) const {
  Coeff c;
  if (kind_ == Kind::Prime) {
    c.fp = a.fp == 0 ? 0 : p_ - a.fp;
  } else {
    c.rat = -a.rat;
  }
  return c;
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw std::domain_error("Field::inv: zero has no inverse");
  Coeff c;
  if (kind_ == Kind::Prime) {
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p_, newr = a.fp;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p_;
    c.fp = t;
  } else {
    c.rat = 1 / a.rat;
  }
  return c;
}

std::string Field::to_string(const Coeff& a) const {
  if (kind_ == Kind::Prime) return std::to_string(a.fp);
  return a.rat.str();
}

}  // namespace satbound
