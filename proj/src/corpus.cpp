#include "satbound/corpus.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "satbound/resolution.hpp"

namespace satbound {

namespace {

RingPtr pring(int r, const Field& field) {
  std::vector<std::string> names;
  if (r == 2)
    names = {"x", "y", "z"};
  else if (r == 3)
    names = {"x", "y", "z", "w"};
  else
    for (int i = 0; i <= r; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(r + 1, field, names);
}

Polynomial var_power(const RingPtr& r, int i, int e) {
  Polynomial p = Polynomial::constant(r, 1);
  for (int k = 0; k < e; ++k) p = p * Polynomial::variable(r, i);
  return p;
}

// All monomials of degree d in the ring, lexicographic enumeration.
void monomials_of_degree(const RingPtr& r, int d, int from, Monomial cur,
                         std::vector<Monomial>& out) {
  int n = r->nvars();
  if (from == n - 1) {
    cur.set(from, cur[from] + d);
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    Monomial next = cur;
    next.set(from, e);
    monomials_of_degree(r, d - e, from + 1, next, out);
  }
}

Ideal hyperplane_ideal(const RingPtr& r, int d) {
  Polynomial l = Polynomial::constant(r, 0);
  for (int i = 0; i < r->nvars(); ++i) l = l + Polynomial::variable(r, i);
  std::vector<Polynomial> gens;
  for (int i = 0; i < r->nvars(); ++i)
    gens.push_back(var_power(r, i, d - 1) * l);
  return Ideal(r, std::move(gens));
}

Ideal caviglia_ideal(const RingPtr& r, int d) {
  auto X = Polynomial::variable(r, 0), Y = Polynomial::variable(r, 1);
  return Ideal(r, {var_power(r, 0, d), var_power(r, 1, d),
                   X * var_power(r, 2, d - 1) - Y * var_power(r, 3, d - 1)});
}

// 2x2 minors of the 2 x r Hankel matrix [x_0..x_{r-1}; x_1..x_r].
Ideal rnc_ideal(const RingPtr& r) {
  int n = r->nvars() - 1;
  std::vector<Polynomial> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      gens.push_back(Polynomial::variable(r, i) * Polynomial::variable(r, j + 1) -
                     Polynomial::variable(r, i + 1) * Polynomial::variable(r, j));
  return Ideal(r, std::move(gens));
}

// 2x2 minors of the generic symmetric 3x3 matrix on 6 variables.
Ideal veronese_ideal(const RingPtr& r) {
  int M[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
  auto v = [&](int i) { return Polynomial::variable(r, i); };
  std::vector<Polynomial> gens;
  std::vector<std::string> seen;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = j1 + 1; j2 < 3; ++j2) {
          Polynomial m = v(M[i1][j1]) * v(M[i2][j2]) - v(M[i1][j2]) * v(M[i2][j1]);
          std::string key = m.monic().to_string();
          bool dup = false;
          for (const auto& s : seen) dup = dup || s == key;
          if (!dup) {
            seen.push_back(key);
            gens.push_back(std::move(m));
          }
        }
  return Ideal(r, std::move(gens));
}

Ideal generic_regseq_ideal(const RingPtr& r, const std::vector<int>& degrees,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Polynomial> gens;
  for (int d : degrees) {
    std::vector<Monomial> mons;
    monomials_of_degree(r, d, 0, Monomial(r->nvars()), mons);
    Polynomial f = Polynomial::constant(r, 0);
    for (const auto& m : mons) {
      int c = coeff(rng);
      if (c == 0) continue;
      Polynomial t = Polynomial::constant(r, c);
      for (int i = 0; i < r->nvars(); ++i)
        for (int e = 0; e < m[i]; ++e) t = t * Polynomial::variable(r, i);
      f = f + t;
    }
    if (f.is_zero()) f = var_power(r, 0, d);  // absurdly unlucky draw
    gens.push_back(std::move(f));
  }
  return Ideal(r, std::move(gens));
}

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string field_name(const Field& f) {
  return f.characteristic() != 0
             ? "prime_" + std::to_string(f.characteristic())
             : "rationals";
}

}  // namespace

std::string ExampleSpec::to_string() const {
  std::ostringstream os;
  os << name;
  if (r > 0) os << " r=" << r;
  if (d > 0) os << " d=" << d;
  if (!degrees.empty()) {
    os << " D=(";
    for (std::size_t i = 0; i < degrees.size(); ++i)
      os << (i ? "," : "") << degrees[i];
    os << ")";
  }
  if (name == "generic_regseq") os << " seed=" << seed;
  return os.str();
}

BuiltExample build_example(const ExampleSpec& spec, const Field& field) {
  BuiltExample ex;
  ex.spec = spec;
  const std::string& n = spec.name;
  if (n == "hyperplane") {
    if (spec.r < 1 || spec.d < 2) throw std::invalid_argument("hyperplane: need r >= 1, d >= 2");
    ex.ideal = hyperplane_ideal(pring(spec.r, field), spec.d);
    ex.meta.expected_dim = spec.r - 1;
    ex.meta.smooth = true;
    ex.meta.reg = 1;  // sat = (l)
    ex.meta.D = DegreeSequence(std::vector<int>(spec.r + 1, spec.d), spec.r);
  } else if (n == "caviglia") {
    if (spec.d < 3) throw std::invalid_argument("caviglia: need d >= 3");
    ex.ideal = caviglia_ideal(pring(3, field), spec.d);
    ex.meta.expected_dim = 1;
    ex.meta.smooth = false;  // non-reduced along the line x = y = 0
    ex.meta.D = DegreeSequence(std::vector<int>(3, spec.d), 3);
  } else if (n == "coord_points") {
    auto r = pring(2, field);
    ex.ideal = Ideal(r, {Polynomial::parse(r, "x*y"), Polynomial::parse(r, "y*z"),
                         Polynomial::parse(r, "z*x")});
    ex.meta.expected_dim = 0;
    ex.meta.smooth = true;
    ex.meta.reg = 2;
    ex.meta.D = DegreeSequence({2, 2, 2}, 2);
  } else if (n == "rnc") {
    int r = spec.r > 0 ? spec.r : 4;
    if (r < 2) throw std::invalid_argument("rnc: need r >= 2");
    ex.ideal = rnc_ideal(pring(r, field));
    ex.meta.expected_dim = 1;
    ex.meta.smooth = true;
    ex.meta.reg = 2;
    ex.meta.D = DegreeSequence(std::vector<int>(r + 1, 2), r);
  } else if (n == "twisted_cubic") {
    auto r = pring(3, field);
    ex.ideal = Ideal(r, {Polynomial::parse(r, "x*z - y^2"),
                         Polynomial::parse(r, "x*w - y*z"),
                         Polynomial::parse(r, "y*w - z^2")});
    ex.meta.expected_dim = 1;
    ex.meta.smooth = true;
    ex.meta.reg = 2;
    ex.meta.D = DegreeSequence({2, 2, 2}, 3);  // p < r: pad d_3 = 0
  } else if (n == "complete_intersection") {
    if (spec.degrees.empty() || spec.r < static_cast<int>(spec.degrees.size()))
      throw std::invalid_argument("complete_intersection: need degrees, r >= #degrees");
    auto r = pring(spec.r, field);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < spec.degrees.size(); ++i)
      gens.push_back(var_power(r, static_cast<int>(i), spec.degrees[i]));
    ex.ideal = Ideal(r, std::move(gens));
    ex.meta.expected_dim = spec.r - static_cast<int>(spec.degrees.size());
    ex.meta.D = DegreeSequence(spec.degrees, spec.r);
  } else if (n == "generic_regseq") {
    if (spec.degrees.empty()) throw std::invalid_argument("generic_regseq: need degrees");
    ex.ideal = generic_regseq_ideal(pring(spec.r, field), spec.degrees, spec.seed);
    ex.meta.expected_dim = spec.r - static_cast<int>(spec.degrees.size());
    ex.meta.D = DegreeSequence(spec.degrees, spec.r);
  } else if (n == "veronese") {
    ex.ideal = veronese_ideal(pring(5, field));
    ex.meta.expected_dim = 2;
    ex.meta.smooth = true;
    ex.meta.reg = 2;
    ex.meta.D = DegreeSequence(std::vector<int>(6, 2), 5);
  } else if (n == "two_planes") {
    auto r = pring(3, field);
    ex.ideal = Ideal(r, {Polynomial::parse(r, "x*z"), Polynomial::parse(r, "x*w")});
    ex.meta.expected_dim = 2;
    ex.meta.smooth = false;
  } else {
    throw std::invalid_argument("unknown example family: " + n);
  }
  return ex;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["example"] = example;
  j["a"] = a;
  j["bound_kind"] = bound_kind;
  j["bound_value"] = bound_value;
  j["computed_value"] = computed_value;
  j["pass"] = pass;
  j["applicable"] = applicable;
  j["witness"] = witness;
  j["field"] = field;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

std::string VerificationReport::to_line() const {
  std::ostringstream os;
  os << (applicable ? (pass ? "PASS " : "FAIL ") : "N/A  ") << bound_kind
     << " a=" << a << "  " << example << "  computed=" << computed_value
     << " bound=" << bound_value;
  if (!witness.empty()) os << "  (" << witness << ")";
  return os.str();
}

namespace {

VerificationReport base_report(const BuiltExample& ex, int a,
                               const std::string& kind) {
  VerificationReport r;
  r.example = ex.spec.to_string();
  r.a = a;
  r.bound_kind = kind;
  r.field = field_name(ex.ideal.ring()->field());
  return r;
}

std::string gap_witness(const SatDegreeResult& sd) {
  if (sd.witness_degrees.empty()) return "saturated";
  std::ostringstream os;
  os << "gaps at t=";
  for (std::size_t i = 0; i < sd.witness_degrees.size(); ++i) {
    int t = sd.witness_degrees[i];
    os << (i ? "," : "") << t << ":" << sd.gap_dims.at(t);
  }
  return os.str();
}

}  // namespace

VerificationReport verify_thmA(const BuiltExample& ex, const DegreeSequence& D,
                               int a, const GroebnerOptions& opts) {
  auto t0 = now_ms();
  VerificationReport r = base_report(ex, a, "thmA");
  r.bound_value = thm_bound(BoundKind::thmA, a, D);
  // Theorem A needs the given equations to cut out a smooth variety; test the
  // scheme defined by the generators themselves, not its saturation.
  SmoothCertificate cert = is_smooth(ex.ideal, opts);
  auto sd = sat_degree(ideal_power(ex.ideal, a), opts);
  r.computed_value = sd.sat_degree;
  r.witness = gap_witness(sd);
  if (!cert.smooth) {
    r.applicable = false;
    r.pass = true;
    r.witness += "; hypothesis fails: singular locus dim " +
                 std::to_string(cert.singular_locus_dim);
  } else {
    r.pass = r.computed_value <= r.bound_value;
  }
  r.elapsed_ms = now_ms() - t0;
  return r;
}

VerificationReport verify_thmB(const BuiltExample& ex, int a,
                               const GroebnerOptions& opts) {
  auto t0 = now_ms();
  VerificationReport r = base_report(ex, a, "thmB");
  if (dimension(ex.ideal, opts) != 1)
    throw std::invalid_argument("verify_thmB: input is not a curve");
  int m = geom_reg(ex.ideal, opts);
  r.bound_value = thm_bound_reg(a, m);
  auto sd = sat_degree(ideal_power(ex.ideal, a), opts);
  r.computed_value = sd.sat_degree;
  r.pass = r.computed_value <= r.bound_value;
  r.witness = "m=" + std::to_string(m) + "; " + gap_witness(sd);
  if (a >= 2 && r.computed_value == r.bound_value) r.witness += "; sharp";
  r.elapsed_ms = now_ms() - t0;
  return r;
}

VerificationReport verify_macaulay(const DegreeSequence& D, int a,
                                   std::uint64_t seed, const Field& field,
                                   const GroebnerOptions& opts) {
  auto t0 = now_ms();
  if (static_cast<int>(D.d.size()) != D.r + 1)
    throw std::invalid_argument("verify_macaulay: need a length r+1 sequence");
  ExampleSpec spec;
  spec.name = "generic_regseq";
  spec.r = D.r;
  spec.degrees = D.d;
  BuiltExample ex;
  bool regular = false;
  for (int attempt = 0; attempt < 8 && !regular; ++attempt) {
    spec.seed = seed + attempt;
    ex = build_example(spec, field);
    regular = dimension(ex.ideal, opts) == -1;  // certified, not trusted
  }
  if (!regular)
    throw std::runtime_error("verify_macaulay: could not draw a regular sequence");

  VerificationReport r = base_report(ex, a, "macaulay");
  r.bound_value = thm_bound(BoundKind::macaulay, a, D);
  auto Ja = ideal_power(ex.ideal, a);
  auto dim_S = [&](int t) { return binomial(t + D.r, D.r); };
  int bound = static_cast<int>(r.bound_value);
  // Least t with (J^a)_t = S_t; Eq. (0.2) says exactly the bound when p = r.
  int least = bound + 1;
  for (int t = bound; t >= 0; --t) {
    if (graded_dim(Ja, t, opts) == dim_S(t))
      least = t;
    else
      break;
  }
  r.computed_value = least;
  std::int64_t gap = bound > 0 ? dim_S(bound - 1) - graded_dim(Ja, bound - 1, opts) : 0;
  r.pass = least == bound || (bound == 0 && least <= 0);
  r.witness = "gap dim at bound-1: " + std::to_string(gap);
  r.elapsed_ms = now_ms() - t0;
  return r;
}

VerificationReport verify_corollaryC(const BuiltExample& ex,
                                     const DegreeSequence& D, int a,
                                     const GroebnerOptions& opts) {
  auto t0 = now_ms();
  VerificationReport r = base_report(ex, a, "corollaryC");
  r.bound_value = thm_bound(BoundKind::thmA, a, D);
  SmoothCertificate cert = is_smooth(ex.ideal, opts);
  r.computed_value = arith_reg(ideal_power(ex.ideal, a), opts);
  if (!cert.smooth) {
    r.applicable = false;
    r.pass = true;
    r.witness = "hypothesis fails: singular locus dim " +
                std::to_string(cert.singular_locus_dim);
  } else {
    r.pass = r.computed_value <= r.bound_value;
  }
  r.elapsed_ms = now_ms() - t0;
  return r;
}

namespace {

bool wanted(const std::vector<std::string>& names, const std::string& n) {
  if (names.empty()) return true;
  for (const auto& s : names)
    if (s == n) return true;
  return false;
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::vector<std::string>& names,
                                          int a_max, const Field& field,
                                          const GroebnerOptions& opts) {
  std::vector<VerificationReport> out;
  auto add = [&](VerificationReport r) { out.push_back(std::move(r)); };

  if (wanted(names, "hyperplane")) {
    for (auto [rr, dd] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
      ExampleSpec s{"hyperplane", rr, dd, {}, 1};
      auto ex = build_example(s, field);
      for (int a = 1; a <= a_max; ++a) add(verify_thmA(ex, *ex.meta.D, a, opts));
    }
  }
  if (wanted(names, "coord_points")) {
    auto ex = build_example({"coord_points", 2, 0, {}, 1}, field);
    for (int a = 1; a <= a_max; ++a) {
      add(verify_thmA(ex, *ex.meta.D, a, opts));
      if (a <= 2) add(verify_corollaryC(ex, *ex.meta.D, a, opts));
    }
  }
  if (wanted(names, "macaulay") || wanted(names, "generic_regseq")) {
    DegreeSequence D({2, 2, 2}, 2);
    for (int a = 1; a <= std::min(a_max, 2); ++a)
      add(verify_macaulay(D, a, 1, field, opts));
  }
  if (wanted(names, "rnc")) {
    auto ex = build_example({"rnc", 4, 0, {}, 1}, field);
    for (int a = 1; a <= a_max; ++a) add(verify_thmB(ex, a, opts));
  }
  if (wanted(names, "twisted_cubic")) {
    auto ex = build_example({"twisted_cubic", 3, 0, {}, 1}, field);
    for (int a = 1; a <= a_max; ++a) add(verify_thmB(ex, a, opts));
  }
  if (wanted(names, "complete_intersection")) {
    for (auto [degs, rr] :
         {std::pair{std::vector<int>{2, 2}, 3}, {std::vector<int>{3, 2}, 4}}) {
      ExampleSpec s{"complete_intersection", rr, 0, degs, 1};
      auto ex = build_example(s, field);
      for (int a = 1; a <= a_max; ++a) {
        auto t0 = now_ms();
        VerificationReport r = base_report(ex, a, "zariski");
        auto sd = sat_degree(ideal_power(ex.ideal, a), opts);
        r.computed_value = sd.sat_degree;
        r.bound_value = 0;
        r.pass = sd.sat_degree == 0;
        r.witness = gap_witness(sd);
        r.elapsed_ms = now_ms() - t0;
        add(std::move(r));
      }
    }
  }
  if (wanted(names, "caviglia")) {
    for (int d : {3, 4}) {
      auto ex = build_example({"caviglia", 3, d, {}, 1}, field);
      add(verify_thmA(ex, *ex.meta.D, 1, opts));
    }
  }
  if (wanted(names, "veronese") && a_max >= 2) {
    auto ex = build_example({"veronese", 5, 0, {}, 1}, field);
    auto t0 = now_ms();
    VerificationReport r = base_report(ex, 2, "prop1.8");
    int m = geom_reg(ex.ideal, opts);
    r.bound_value = 2 * m;
    r.computed_value = arith_reg(saturate(ideal_power(ex.ideal, 2), opts), opts);
    r.pass = r.computed_value <= r.bound_value;
    r.witness = "m=" + std::to_string(m);
    r.elapsed_ms = now_ms() - t0;
    add(std::move(r));
  }
  return out;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.applicable && !r.pass) return false;
  return true;
}

}  // namespace satbound
