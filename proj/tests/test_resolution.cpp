#include "doctest.h"
#include "satbound/ideal_ops.hpp"
#include "satbound/resolution.hpp"

using namespace satbound;

namespace {

RingPtr ring3() { return make_ring(3, Field::prime(), {"x", "y", "z"}); }
RingPtr ring4() { return make_ring(4, Field::prime(), {"x", "y", "z", "w"}); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto s : gens) v.push_back(Polynomial::parse(r, s));
  return Ideal(r, std::move(v));
}

Polynomial P(const RingPtr& r, const std::string& s) {
  return Polynomial::parse(r, s);
}

Ideal twisted_cubic(const RingPtr& r) {
  return I(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
}

GradedMatrix row_matrix(const std::vector<Polynomial>& gens) {
  GradedMatrix M;
  M.ring = gens.at(0).ring();
  M.row_degrees = {0};
  for (const auto& g : gens) {
    M.col_degrees.push_back(g.degree());
    M.columns.push_back({g});
  }
  return M;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("syzygies of a row matrix") {
  auto r = ring3();

  SUBCASE("Koszul syzygy of (x, y)") {
    auto S = syzygies(row_matrix({P(r, "x"), P(r, "y")}));
    REQUIRE(S.ncols() == 1);
    REQUIRE(S.nrows() == 2);
    CHECK(S.col_degrees[0] == 2);
    // Kernel generator is (-y, x) up to sign and scalar.
    auto a = S.columns[0][0], b = S.columns[0][1];
    bool koszul = (a.equals(P(r, "-y")) && b.equals(P(r, "x"))) ||
                  (a.equals(P(r, "y")) && b.equals(P(r, "-x")));
    CHECK(koszul);
  }

  SUBCASE("two linear syzygies of (xy, yz, zx)") {
    auto M = row_matrix({P(r, "x*y"), P(r, "y*z"), P(r, "z*x")});
    auto S = syzygies(M);
    REQUIRE(S.ncols() == 2);
    for (const auto& col : S.columns) CHECK(is_zero_column(satbound::apply(M, col)));
    CHECK(S.col_degrees == std::vector<int>{3, 3});
  }

  SUBCASE("single element of a domain has no syzygies") {
    auto S = syzygies(row_matrix({P(r, "x^2*y - z^3")}));
    CHECK(S.ncols() == 0);
  }
}

TEST_CASE("minimal_betti examples") {
  auto r = ring3();

  SUBCASE("maximal ideal: Koszul complex") {
    auto B = minimal_betti(I(r, {"x", "y", "z"}));
    CHECK(B.beta(0, 1) == 3);
    CHECK(B.beta(1, 2) == 3);
    CHECK(B.beta(2, 3) == 1);
    CHECK(B.length() == 2);
    CHECK(B.regularity() == 1);
  }

  SUBCASE("three coordinate points in P^2") {
    auto B = minimal_betti(I(r, {"x*y", "y*z", "z*x"}));
    CHECK(B.beta(0, 2) == 3);
    CHECK(B.beta(1, 3) == 2);
    CHECK(B.length() == 1);
    CHECK(B.regularity() == 2);
  }

  SUBCASE("twisted cubic") {
    auto B = minimal_betti(twisted_cubic(ring4()));
    CHECK(B.beta(0, 2) == 3);
    CHECK(B.beta(1, 3) == 2);
    CHECK(B.length() == 1);
  }

  SUBCASE("redundant generators do not inflate beta_0") {
    auto B = minimal_betti(I(r, {"x", "x + y", "y"}));
    CHECK(B.beta(0, 1) == 2);
    CHECK(B.beta(1, 2) == 1);
  }
}

TEST_CASE("resolution structure invariants") {
  auto r = ring3();
  std::vector<Ideal> corpus = {
      I(r, {"x", "y", "z"}),
      I(r, {"x*y", "y*z", "z*x"}),
      I(r, {"x^2", "y^3"}),
      twisted_cubic(ring4()),
      ideal_power(I(r, {"x*y", "y*z", "z*x"}), 2),
  };
  for (const auto& J : corpus) {
    auto res = minimal_free_resolution(J);
    int n = J.ring()->nvars();
    CHECK(static_cast<int>(res.modules.size()) <= n + 1);

    // d_l o d_{l+1} = 0.
    for (std::size_t l = 0; l + 1 < res.differentials.size(); ++l)
      for (const auto& col : res.differentials[l + 1].columns)
        CHECK(is_zero_column(satbound::apply(res.differentials[l], col)));

    for (const auto& D : res.differentials) {
      D.check_graded();
      // Minimality: no nonzero constant entries survive.
      for (const auto& col : D.columns)
        for (const auto& entry : col)
          CHECK(!(!entry.is_zero() && entry.degree() == 0));
    }
  }
}

TEST_CASE("Hilbert series and Betti numbers agree") {
  auto r3 = ring3();
  auto r4 = ring4();
  std::vector<Ideal> corpus = {
      I(r3, {"x*y", "y*z", "z*x"}),
      I(r3, {"x^2", "y^3"}),
      twisted_cubic(r4),
      I(r4, {"x^2 - y*w", "z^3"}),
  };
  for (const auto& J : corpus) {
    int n = J.ring()->nvars();
    auto B = minimal_betti(J);
    for (int t = 0; t <= 12; ++t) {
      // dim I_t = sum over (i,j) of (-1)^i beta_{i,j} * dim S_{t-j}.
      std::int64_t lhs = 0;
      for (const auto& [key, b] : B.entries()) {
        auto [i, j] = key;
        std::int64_t s = binom(t - j + n - 1, n - 1);
        lhs += (i % 2 == 0 ? b : -b) * s;
      }
      CHECK(lhs == graded_dim(J, t));
    }
  }
}

TEST_CASE("arith_reg examples") {
  auto r = ring3();
  CHECK(arith_reg(I(r, {"x", "y", "z"})) == 1);
  CHECK(arith_reg(I(r, {"x*y", "y*z", "z*x"})) == 2);

  SUBCASE("complete intersections: reg = sum d_i - e + 1") {
    CHECK(arith_reg(I(r, {"x^2", "y^2"})) == 3);
    CHECK(arith_reg(I(r, {"x^2", "y^3", "z^4"})) == 7);
    auto r4 = ring4();
    CHECK(arith_reg(I(r4, {"x^2", "y^2"})) == 3);
  }

  SUBCASE("at least the max generator degree") {
    auto J = I(r, {"x^3", "x*y - z^2"});
    CHECK(arith_reg(J) >= 3);
  }
}

TEST_CASE("geom_reg examples") {
  auto r4 = ring4();
  CHECK(geom_reg(I(ring3(), {"x*y", "y*z", "z*x"})) == 2);
  CHECK(geom_reg(twisted_cubic(r4)) == 2);

  SUBCASE("rational normal curve in P^4") {
    auto r5 = make_ring(5, Field::prime(), {"a", "b", "c", "d", "e"});
    auto rnc = I(r5, {"a*c - b^2", "a*d - b*c", "a*e - b*d", "b*d - c^2",
                      "b*e - c*d", "c*e - d^2"});
    CHECK(geom_reg(rnc) == 2);
  }

  SUBCASE("empty scheme is degenerate") {
    CHECK_THROWS_AS(geom_reg(I(ring3(), {"x^2", "y^2", "z^2"})),
                    std::domain_error);
  }
}

TEST_CASE("regularity splits into saturation data") {
  auto r = ring3();
  // arith_reg(J) = max(arith_reg(sat J), sat_degree(J)).
  std::vector<Ideal> corpus = {
      I(r, {"x*y", "y*z", "z*x"}),
      ideal_power(I(r, {"x*y", "y*z", "z*x"}), 2),
      I(r, {"x^2 + x*y + x*z", "x*y + y^2 + y*z", "x*z + y*z + z^2"}),
      I(r, {"x^2", "y^2"}),
  };
  for (const auto& J : corpus) {
    auto sd = sat_degree(J);
    int expect = std::max(arith_reg(saturate(J)), sd.sat_degree);
    CHECK(arith_reg(J) == expect);
    CHECK(sd.sat_degree <= arith_reg(J));
  }
}

TEST_CASE("staircase printing") {
  auto r = ring3();
  auto B = minimal_betti(Ideal(r, {Polynomial::parse(r, "x")}));
  // Single generator in degree 1: one entry at (0,1).
  CHECK(B.beta(0, 1) == 1);
  auto s = B.to_staircase();
  CHECK(s.find("1:") != std::string::npos);
}

TEST_CASE("resolution budget") {
  GroebnerOptions opts;
  opts.step_budget = 1;
  auto r = ring3();
  CHECK_THROWS_AS(
      minimal_free_resolution(I(r, {"x*y", "y*z", "z*x"}), opts),
      BudgetExceededError);
}
