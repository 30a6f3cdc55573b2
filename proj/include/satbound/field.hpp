#ifndef SATBOUND_FIELD_HPP
#define SATBOUND_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace satbound {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Default modulus for the prime-field coefficient domain.
inline constexpr std::uint32_t kDefaultPrime = 2147483629u;

// A coefficient value.  Which member is live is decided by the Field that
// owns the ambient ring; prime-field residues are kept in [0, p).
struct Coeff {
  std::int64_t fp = 0;
  Rational rat;
};

class Field {
 public:
  enum class Kind { Prime, Rationals };

  static Field prime(std::uint32_t p = kDefaultPrime);
  static Field rationals();

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Coeff zero() const { return Coeff{}; }
  Coeff one() const { return from_int(1); }
  Coeff from_int(std::int64_t n) const;
  Coeff from_rational(const Rational& q) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string to_string(const Coeff& a) const;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace satbound

#endif
