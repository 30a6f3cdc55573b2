#include "doctest.h"
#include "satbound/ideal.hpp"

using namespace satbound;

namespace {

RingPtr ring3() { return make_ring(3, Field::prime(), {"x", "y", "z"}); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto s : gens) v.push_back(Polynomial::parse(r, s));
  return Ideal(r, std::move(v));
}

Polynomial P(const RingPtr& r, const std::string& s) {
  return Polynomial::parse(r, s);
}

bool contains_poly(const GroebnerBasis& gb, const Polynomial& f) {
  for (const auto& g : gb.elements())
    if (g.equals(f)) return true;
  return false;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  auto r = ring3();

  SUBCASE("single S-pair chain") {
    auto gb = I(r, {"x^2", "x*y + y^2"}).groebner();
    CHECK(gb->size() == 3);
    CHECK(contains_poly(*gb, P(r, "x^2")));
    CHECK(contains_poly(*gb, P(r, "x*y + y^2")));
    CHECK(contains_poly(*gb, P(r, "y^3")));
  }

  SUBCASE("monomial ideal is its own reduced GB") {
    auto gb = I(r, {"x*y", "y*z", "z*x"}).groebner();
    CHECK(gb->size() == 3);
    CHECK(contains_poly(*gb, P(r, "x*y")));
    CHECK(contains_poly(*gb, P(r, "y*z")));
    CHECK(contains_poly(*gb, P(r, "x*z")));
  }

  SUBCASE("principal linear ideal") {
    auto gb = I(r, {"3*x + 3*y"}).groebner();
    CHECK(gb->size() == 1);
    CHECK(contains_poly(*gb, P(r, "x + y")));
  }
}

TEST_CASE("groebner output is deterministic and cached") {
  auto r = ring3();
  auto id = I(r, {"x^2 - y*z", "y^2 - x*z"});
  auto gb1 = id.groebner();
  auto gb2 = id.groebner();
  CHECK(gb1.get() == gb2.get());  // cache hit
  auto id2 = I(r, {"x^2 - y*z", "y^2 - x*z"});
  auto gb3 = id2.groebner();
  REQUIRE(gb1->size() == gb3->size());
  for (std::size_t i = 0; i < gb1->size(); ++i)
    CHECK(gb1->elements()[i].equals(gb3->elements()[i]));
}

TEST_CASE("budget exceeded raises explicit error") {
  auto r = ring3();
  auto id = I(r, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"});
  GroebnerOptions opts;
  opts.step_budget = 2;
  CHECK_THROWS_AS(id.groebner(MonomialOrder::grevlex(), opts),
                  BudgetExceededError);
}

TEST_CASE("buchberger criterion: all S-polynomials reduce to zero") {
  auto r = ring3();
  std::vector<Ideal> corpus = {
      I(r, {"x*y", "y*z", "z*x"}),
      I(r, {"x^2 - y*z", "y^2 - x*z"}),
      I(r, {"x^2 + y^2 + z^2", "x*y - z^2"}),
  };
  const Field& k = r->field();
  for (const auto& id : corpus) {
    auto gb = id.groebner();
    const auto& e = gb->elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        Monomial l = Monomial::lcm(e[i].leading_monomial(), e[j].leading_monomial());
        auto s = e[i].mul_term(k.one(), l / e[i].leading_monomial()) -
                 e[j].mul_term(k.one(), l / e[j].leading_monomial());
        CHECK(normal_form(s, *gb).is_zero());
      }
    }
  }
}

TEST_CASE("reduced GB property: no lead divides any term of another element") {
  auto r = ring3();
  auto gb = I(r, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}).groebner();
  for (const auto& g : gb->elements()) {
    for (const auto& h : gb->elements()) {
      if (&g == &h) continue;
      for (const auto& t : h.terms())
        CHECK_FALSE(g.leading_monomial().divides(t.m));
    }
  }
}

TEST_CASE("normal_form examples") {
  auto r = ring3();
  auto id = I(r, {"x*y", "y*z", "z*x"});
  auto gb = id.groebner();

  CHECK(normal_form(P(r, "x*y*z"), *gb).is_zero());          // membership
  CHECK(normal_form(P(r, "x^3"), *gb).equals(P(r, "x^3")));  // standard monomial
  auto gbxy = I(r, {"x*y"}).groebner();
  CHECK(normal_form(P(r, "x^2*y"), *gbxy).is_zero());

  // idempotence
  auto f = P(r, "x^3 + x*y*z + x^2*y");
  auto nf = normal_form(f, *gb);
  CHECK(normal_form(nf, *gb).equals(nf));
}

TEST_CASE("ideal_member examples") {
  auto r = ring3();
  auto id = I(r, {"x*y", "y*z", "z*x"});
  CHECK(ideal_member(P(r, "x*y*z"), id));
  CHECK_FALSE(ideal_member(P(r, "x^3"), id));
}

TEST_CASE("graded_dim examples") {
  auto r = ring3();
  auto id = I(r, {"x*y", "y*z", "z*x"});
  CHECK(graded_dim(id, 2) == 3);
  CHECK(graded_dim(id, 3) == 7);  // 10 minus x^3, y^3, z^3
  auto m = I(r, {"x", "y", "z"});
  CHECK(graded_dim(m, 1) == 3);
}

TEST_CASE("graded_dim agrees with direct standard-monomial enumeration") {
  auto r = ring3();
  auto id = I(r, {"x^2 - y*z", "y^2 - x*z"});
  auto lts = id.groebner()->leading_monomials();
  for (int t = 0; t <= 8; ++t) {
    CHECK(quotient_graded_dim(id, t) ==
          count_standard_monomials(lts, 3, t));
  }
}

TEST_CASE("hilbert_data examples") {
  auto r = ring3();

  SUBCASE("three coordinate points") {
    auto h = I(r, {"x*y", "y*z", "z*x"}).hilbert(8);
    for (int t = 1; t <= 8; ++t) CHECK(h.values[t] == 3);
    CHECK(h.dimension == 0);
    CHECK(h.degree == 3);
  }

  SUBCASE("twisted cubic in P^3") {
    auto r4 = make_ring(4, Field::prime(), {"x", "y", "z", "w"});
    auto id = I(r4, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    auto h = id.hilbert(10);
    for (int t = 1; t <= 10; ++t) CHECK(h.values[t] == 3 * t + 1);
    CHECK(h.dimension == 1);
    CHECK(h.degree == 3);
  }

  SUBCASE("unit ideal: empty scheme") {
    auto h = I(r, {"x", "y", "z", "x^2 - y*z"}).hilbert(4);
    // (x,y,z) is m; not unit but V is empty
    CHECK(h.dimension == -1);
    auto r1 = make_ring(1, Field::prime());
    Ideal unit(r1, {Polynomial::constant(r1, 1)});
    auto hu = unit.hilbert(4);
    CHECK(hu.dimension == -1);
    for (auto v : hu.values) CHECK(v == 0);
  }
}

TEST_CASE("hilbert identity: values(t) + graded_dim(I,t) = C(t+r,r)") {
  auto r = ring3();
  auto id = I(r, {"x^2 - y*z", "y^3"});
  for (int t = 0; t <= 9; ++t)
    CHECK(quotient_graded_dim(id, t) + graded_dim(id, t) == binomial(t + 2, 2));
}

TEST_CASE("order-independence of graded dimensions") {
  auto r = ring3();
  std::vector<Ideal> corpus = {
      I(r, {"x*y", "y*z", "z*x"}),
      I(r, {"x^2 - y*z", "y^2 - x*z"}),
      I(r, {"x^3 + y^3 + z^3"}),
  };
  for (const auto& id : corpus) {
    auto lex_lts = id.groebner(MonomialOrder::lex())->leading_monomials();
    for (int t = 0; t <= 10; ++t) {
      CHECK(quotient_graded_dim(id, t) ==
            count_standard_monomials(lex_lts, 3, t));
    }
  }
}

TEST_CASE("graded_dim monotone under inclusion") {
  auto r = ring3();
  auto small = I(r, {"x*y", "y*z"});
  auto big = I(r, {"x*y", "y*z", "z*x"});
  for (int t = 0; t <= 8; ++t)
    CHECK(graded_dim(small, t) <= graded_dim(big, t));
}

TEST_CASE("rational field GB matches prime field leading terms") {
  auto rq = make_ring(3, Field::rationals(), {"x", "y", "z"});
  auto rp = ring3();
  auto gq = I(rq, {"x^2 - 2*y*z", "3*y^2 - x*z"}).groebner();
  auto gp = I(rp, {"x^2 - 2*y*z", "3*y^2 - x*z"}).groebner();
  REQUIRE(gq->size() == gp->size());
  for (std::size_t i = 0; i < gq->size(); ++i)
    CHECK(gq->elements()[i].leading_monomial() ==
          gp->elements()[i].leading_monomial());
}
