#include "satbound/ideal_ops.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "satbound/module.hpp"
#include "satbound/resolution.hpp"

namespace satbound {

namespace {

// Deduplicate generator lists by canonical text form.
std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::set<std::string> seen;
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    std::string key = g.monic().to_string();
    if (seen.insert(std::move(key)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

Ideal ideal_power(const Ideal& I, int a) {
  if (a < 1) throw std::invalid_argument("ideal_power: exponent must be >= 1");
  if (a == 1) return I;
  const auto& g = I.gens();
  std::vector<Polynomial> prods;
  // multisets of size a from the generators
  std::vector<std::size_t> idx(a, 0);
  while (true) {
    Polynomial p = g[idx[0]];
    for (int i = 1; i < a; ++i) p = p * g[idx[i]];
    prods.push_back(std::move(p));
    int pos = a - 1;
    while (pos >= 0 && idx[pos] == g.size() - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < a; ++i) idx[i] = idx[pos];
  }
  return Ideal(I.ring(), dedupe(std::move(prods)));
}

Ideal colon(const Ideal& I, const Polynomial& f, const GroebnerOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("colon: divisor is zero");
  std::optional<int> fd;
  if (!f.is_homogeneous(&fd))
    throw std::invalid_argument("colon: divisor not homogeneous");
  if (f.degree() == 0) return I;  // I : unit = I
  if (I.is_zero()) return I;

  GradedMatrix M;
  M.ring = I.ring();
  M.row_degrees = {0};
  M.columns.push_back({f});
  M.col_degrees.push_back(f.degree());
  for (const auto& g : I.gens()) {
    M.columns.push_back({g});
    M.col_degrees.push_back(g.degree());
  }
  GradedMatrix K = syzygies(M, opts);
  std::vector<Polynomial> gens;
  for (const auto& col : K.columns)
    if (!col[0].is_zero()) gens.push_back(col[0]);
  return Ideal(I.ring(), dedupe(std::move(gens)));
}

Ideal colon_ideal(const Ideal& I, const Ideal& K, const GroebnerOptions& opts) {
  if (K.is_zero()) throw std::invalid_argument("colon_ideal: zero ideal divisor");
  std::vector<Ideal> parts;
  for (const auto& f : K.gens()) parts.push_back(colon(I, f, opts));
  return intersect(parts, opts);
}

Ideal intersect(const std::vector<Ideal>& ideals, const GroebnerOptions& opts) {
  if (ideals.empty()) throw std::invalid_argument("intersect: empty list");
  if (ideals.size() == 1) return ideals[0];
  const RingPtr& ring = ideals[0].ring();
  const Field& k = ring->field();
  const std::size_t n = ideals.size();

  GradedMatrix M;
  M.ring = ring;
  M.row_degrees.assign(n, 0);
  Column ones(n, Polynomial(ring));
  for (std::size_t i = 0; i < n; ++i) ones[i] = Polynomial::constant(ring, 1);
  M.columns.push_back(std::move(ones));
  M.col_degrees.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : ideals[i].gens()) {
      Column col(n, Polynomial(ring));
      col[i] = g;
      M.columns.push_back(std::move(col));
      M.col_degrees.push_back(g.degree());
    }
  }
  (void)k;
  GradedMatrix K = syzygies(M, opts);
  std::vector<Polynomial> gens;
  for (const auto& col : K.columns)
    if (!col[0].is_zero()) gens.push_back(col[0]);
  return Ideal(ring, dedupe(std::move(gens)));
}

Ideal variable_saturation(const Ideal& I, int var, const GroebnerOptions& opts) {
  const RingPtr& ring = I.ring();
  const int n = ring->nvars();
  if (var < 0 || var >= n)
    throw std::invalid_argument("variable_saturation: bad variable index");
  const int last = n - 1;

  auto permute = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m = t.m;
      int a = m[var], b = m[last];
      m.set(var, b);
      m.set(last, a);
      terms.push_back(Term{t.c, m});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  };

  std::vector<Polynomial> pg;
  for (const auto& g : I.gens()) pg.push_back(permute(g));
  GroebnerBasis gb = buchberger(pg, MonomialOrder::grevlex(), opts);

  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    int maxdiv = 1 << 16;
    for (const auto& t : g.terms()) maxdiv = std::min(maxdiv, t.m[last]);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.m;
      m.set(last, m[last] - maxdiv);
      int a = m[var], b = m[last];
      m.set(var, b);
      m.set(last, a);
      terms.push_back(Term{t.c, m});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, dedupe(std::move(out)));
}

Ideal saturate(const Ideal& I, const GroebnerOptions& opts) {
  if (I.is_zero()) throw std::invalid_argument("saturate: zero ideal");
  const int n = I.ring()->nvars();
  std::vector<Ideal> parts;
  for (int v = 0; v < n; ++v) parts.push_back(variable_saturation(I, v, opts));
  return intersect(parts, opts);
}

Ideal saturate_iterated_colon(const Ideal& I, const GroebnerOptions& opts) {
  const RingPtr& ring = I.ring();
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars(); ++i)
    vars.push_back(Polynomial::variable(ring, i));
  Ideal m(ring, std::move(vars));
  Ideal cur = I;
  for (int iter = 0; iter < 1 << 10; ++iter) {
    Ideal next = colon_ideal(cur, m, opts);
    if (ideal_equal(cur, next, opts)) return cur;
    cur = std::move(next);
  }
  throw BudgetExceededError("saturate_iterated_colon: did not stabilize");
}

SatDegreeResult sat_degree(const Ideal& I, const GroebnerOptions& opts) {
  SatDegreeResult res;
  Ideal sat = saturate(I, opts);
  // sat.deg(I) <= arith_reg(I), so scanning to the regularity is complete.
  int bound = arith_reg(I, opts);
  for (int t = 0; t <= bound; ++t) {
    std::int64_t gap = quotient_graded_dim(I, t, opts) -
                       quotient_graded_dim(sat, t, opts);
    if (gap < 0)
      throw std::logic_error("sat_degree: saturation lost sections");
    if (gap > 0) {
      res.witness_degrees.push_back(t);
      res.gap_dims[t] = gap;
    }
  }
  res.sat_degree =
      res.witness_degrees.empty() ? 0 : res.witness_degrees.back() + 1;
  return res;
}

int dimension(const Ideal& I, const GroebnerOptions& opts) {
  if (I.is_zero()) return I.ring()->nvars() - 1;
  return I.hilbert(0, opts).dimension;
}

int codimension(const Ideal& I, const GroebnerOptions& opts) {
  return (I.ring()->nvars() - 1) - dimension(I, opts);
}

Ideal symbolic_power(const Ideal& I, int a, bool smooth_checked,
                     bool override_ack, const GroebnerOptions& opts) {
  if (a < 1) throw std::invalid_argument("symbolic_power: exponent must be >= 1");
  if (!smooth_checked && !override_ack)
    throw SmoothGateError(
        "symbolic_power: I^(a) = sat(I^a) is valid only for smooth V(I); run "
        "is_smooth first or acknowledge the override explicitly");
  if (a == 1) return saturate(I, opts);
  return saturate(ideal_power(I, a), opts);
}

Polynomial derivative(const Polynomial& f, int var) {
  const RingPtr& ring = f.ring();
  const Field& k = ring->field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    int e = t.m[var];
    if (e == 0) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    terms.push_back(Term{k.mul(t.c, k.from_int(e)), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

Polynomial det_laplace(const std::vector<std::vector<Polynomial>>& m,
                       const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc(ring);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      sub.push_back(std::vector<Polynomial>(m[r].begin() + 1, m[r].end()));
    }
    Polynomial cof = m[i][0] * det_laplace(sub, ring);
    acc = (i % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

SmoothCertificate is_smooth(const Ideal& I, const GroebnerOptions& opts) {
  SmoothCertificate cert;
  int dim = dimension(I, opts);
  if (dim == -1)
    throw std::invalid_argument("is_smooth: empty scheme rejected");
  const RingPtr& ring = I.ring();
  const std::size_t nv = ring->nvars();
  const std::size_t ng = I.gens().size();
  const std::size_t c = static_cast<std::size_t>(codimension(I, opts));
  cert.codim = static_cast<int>(c);

  // Jacobian: rows = variables, columns = generators.
  std::vector<std::vector<Polynomial>> jac(nv,
                                           std::vector<Polynomial>(ng, Polynomial(ring)));
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t g = 0; g < ng; ++g) jac[v][g] = derivative(I.gens()[g], v);

  std::vector<Polynomial> gens = I.gens();
  if (c > nv || c > ng) {
    // cannot form c x c minors: singular locus is all of V(I)
    cert.smooth = false;
    cert.singular_locus_dim = dim;
    return cert;
  }
  combinations(nv, c, [&](const std::vector<std::size_t>& rows) {
    combinations(ng, c, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Polynomial>> sub(c, std::vector<Polynomial>(c, Polynomial(ring)));
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) sub[i][j] = jac[rows[i]][cols[j]];
      Polynomial d = det_laplace(sub, ring);
      if (!d.is_zero()) gens.push_back(std::move(d));
      ++cert.minor_count;
    });
  });
  Ideal K(ring, dedupe(std::move(gens)));
  int sdim = dimension(K, opts);
  cert.singular_locus_dim = sdim;
  cert.smooth = sdim == -1;
  return cert;
}

}  // namespace satbound
