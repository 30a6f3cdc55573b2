#include <random>

#include "doctest.h"
#include "satbound/polynomial.hpp"

using namespace satbound;

namespace {

RingPtr ring3(const Field& k = Field::prime()) {
  return make_ring(3, k, {"x", "y", "z"});
}

Polynomial P(const RingPtr& r, const std::string& s) {
  return Polynomial::parse(r, s);
}

Monomial random_monomial(std::mt19937& rng, int nvars, int max_exp) {
  Monomial m(nvars);
  std::uniform_int_distribution<int> d(0, max_exp);
  for (int i = 0; i < nvars; ++i) m.set(i, d(rng));
  return m;
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, int max_terms) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> cd(-20, 20);
  std::vector<Term> terms;
  int n = nt(rng);
  for (int i = 0; i < n; ++i)
    terms.push_back(Term{ring->field().from_int(cd(rng)),
                         random_monomial(rng, ring->nvars(), 4)});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("prime field arithmetic is exact") {
  Field k = Field::prime();
  CHECK(k.characteristic() == 2147483629u);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-1e9, 1e9);
  for (int i = 0; i < 200; ++i) {
    Coeff a = k.from_int(d(rng));
    CHECK(k.is_zero(k.add(a, k.neg(a))));
    if (!k.is_zero(a)) CHECK(k.is_one(k.mul(a, k.inv(a))));
  }
  CHECK_THROWS_AS(Field::prime(2147483630u), std::invalid_argument);
}

TEST_CASE("rational field arithmetic is exact") {
  Field k = Field::rationals();
  Coeff a = k.from_rational(Rational(2, 3));
  CHECK(k.is_one(k.mul(a, k.inv(a))));
  CHECK(k.is_zero(k.sub(a, a)));
  CHECK(k.to_string(k.add(a, a)) == "4/3");
}

TEST_CASE("monomial_compare examples") {
  auto grevlex = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();
  Monomial x0sq(3, {2, 0, 0});
  Monomial x0x1(3, {1, 1, 0});
  CHECK(grevlex.compare(x0sq, x0x1) == Cmp::GT);
  CHECK(grevlex.compare(x0x1, x0x1) == Cmp::EQ);
  Monomial x0(3, {1, 0, 0});
  Monomial x1_10(3, {0, 10, 0});
  CHECK(lex.compare(x0, x1_10) == Cmp::GT);
  Monomial bad(2, {1, 0});
  CHECK_THROWS_AS(grevlex.compare(x0, bad), std::invalid_argument);
}

TEST_CASE("monomial order axioms on random triples") {
  std::mt19937 rng(11);
  std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(),
                                       MonomialOrder::lex(),
                                       MonomialOrder::block_elim(2)};
  for (const auto& ord : orders) {
    for (int trial = 0; trial < 500; ++trial) {
      Monomial a = random_monomial(rng, 4, 5);
      Monomial b = random_monomial(rng, 4, 5);
      Monomial c = random_monomial(rng, 4, 5);
      // totality: exactly one of <, =, > and EQ iff equal vectors
      CHECK((ord.compare(a, b) == Cmp::EQ) == (a == b));
      CHECK(ord.compare(a, b) == static_cast<Cmp>(-static_cast<int>(ord.compare(b, a))));
      // multiplicativity
      if (ord.less(a, b)) CHECK(ord.less(a * c, b * c));
      // 1 minimal
      Monomial one(4);
      if (!(a == one)) CHECK(ord.greater(a, one));
      // transitivity spot check
      if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
    }
  }
}

TEST_CASE("block_elim order eliminates the top block") {
  auto ord = MonomialOrder::block_elim(2);
  // any monomial containing x2 or x3 beats any monomial without them
  Monomial hi(4, {0, 0, 1, 0});
  Monomial lo(4, {7, 7, 0, 0});
  CHECK(ord.greater(hi, lo));
}

TEST_CASE("poly_arith examples") {
  auto r = ring3();
  CHECK((P(r, "x + y") + P(r, "-x - y")).is_zero());
  CHECK((P(r, "x + y") * P(r, "x - y")).equals(P(r, "x^2 - y^2")));
  auto r5 = make_ring(3, Field::prime(5), {"x", "y", "z"});
  auto f = Polynomial::parse(r5, "x").scale(Field::prime(5).from_int(2));
  CHECK(f.equals(Polynomial::parse(r5, "2x")));
  CHECK_THROWS_AS(P(r, "x") + Polynomial::parse(r5, "x"),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on random triples, both fields") {
  for (Field k : {Field::prime(), Field::rationals()}) {
    auto r = ring3(k);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
      auto f = random_poly(rng, r, 5);
      auto g = random_poly(rng, r, 5);
      auto h = random_poly(rng, r, 5);
      CHECK(((f * g) * h).equals(f * (g * h)));
      CHECK((f * (g + h)).equals(f * g + f * h));
      CHECK((f + g).equals(g + f));
      CHECK((f - f).is_zero());
    }
  }
}

TEST_CASE("poly_is_homogeneous") {
  auto r = ring3();
  std::optional<int> d;
  CHECK(P(r, "x^2 + y*z").is_homogeneous(&d));
  CHECK(d == 2);
  CHECK_FALSE(P(r, "x^2 + y").is_homogeneous(&d));
  CHECK_FALSE(d.has_value());
  // f = x^(d-1) * l with l linear is homogeneous of degree d
  auto f = P(r, "x^3") * P(r, "x + y + z");
  CHECK(f.is_homogeneous(&d));
  CHECK(d == 4);
  // zero polynomial: homogeneous, degree flagged undefined
  CHECK(Polynomial(r).is_homogeneous(&d));
  CHECK_FALSE(d.has_value());
}

TEST_CASE("serialization round-trip") {
  for (Field k : {Field::prime(), Field::rationals()}) {
    auto r = ring3(k);
    std::mt19937 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
      auto f = random_poly(rng, r, 6);
      CHECK(Polynomial::parse(r, f.to_string()).equals(f));
    }
  }
}

TEST_CASE("parse errors carry offsets") {
  auto r = ring3();
  CHECK_THROWS_AS(P(r, "x + w"), ParseError);
  CHECK_THROWS_AS(P(r, "x + "), ParseError);
  try {
    P(r, "x + w^2");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("with_order re-sorts terms") {
  auto r = ring3();
  auto f = P(r, "x + y^10");
  CHECK(f.leading_monomial() == Monomial(3, {0, 10, 0}));
  auto g = f.with_order(MonomialOrder::lex());
  CHECK(g.leading_monomial() == Monomial(3, {1, 0, 0}));
  CHECK(g.equals(f));
}
