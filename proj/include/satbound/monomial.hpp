#ifndef SATBOUND_MONOMIAL_HPP
#define SATBOUND_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace satbound {

// Hard cap on ring size: projective space P^r with r <= 8.
inline constexpr int kMaxVars = 9;

// Dense exponent vector with cached total degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint16_t deg = 0;
  std::uint8_t n = 0;

  Monomial() = default;
  explicit Monomial(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("Monomial: bad variable count");
    n = static_cast<std::uint8_t>(nvars);
  }
  Monomial(int nvars, std::initializer_list<int> exps) : Monomial(nvars) {
    int i = 0;
    for (int v : exps) set(i++, v);
  }

  int nvars() const { return n; }
  int operator[](int i) const { return e[i]; }
  int degree() const { return deg; }

  void set(int i, int exp) {
    deg = static_cast<std::uint16_t>(deg - e[i] + exp);
    e[i] = static_cast<std::uint16_t>(exp);
  }

  bool operator==(const Monomial& o) const { return n == o.n && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
  }

  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    r.deg = static_cast<std::uint16_t>(deg - o.deg);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int i = 0; i < a.n; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    }
    r.deg = 0;
    for (int i = 0; i < a.n; ++i) r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.n; ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Total multiplicative monomial orders with 1 minimal.
//   grevlex     degree first, ties broken reverse-lexicographically from the
//               last variable (larger exponent there means smaller).
//   lex         pure lexicographic, x0 largest.
//   block_elim  variables with index >= split dominate: compared first by
//               total degree in that block, ties by grevlex overall.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, BlockElim };

  Kind kind = Kind::Grevlex;
  int split = 0;  // BlockElim only

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_elim(int split) { return {Kind::BlockElim, split}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::BlockElim || split == o.split);
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::LT;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::GT;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = m.n;
    for (int i = 0; i < m.n; ++i) h = h * 1000003u + m.e[i];
    return h;
  }
};

}  // namespace satbound

#endif
