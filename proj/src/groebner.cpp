#include "satbound/groebner.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <tuple>

namespace satbound {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> lts;
  lts.reserve(elements_.size());
  for (const auto& g : elements_) lts.push_back(g.leading_monomial());
  return lts;
}

namespace {

struct Budget {
  std::uint64_t left;
  void spend(std::uint64_t n = 1) {
    if (n > left) throw BudgetExceededError("groebner: step budget exceeded");
    left -= n;
  }
};

// One top-reduction step: f -> f - (lc(f)/lc(g)) * (lm(f)/lm(g)) * g.
Polynomial reduce_once(const Polynomial& f, const Polynomial& g) {
  const Field& k = f.ring()->field();
  Coeff c = k.div(f.leading_coeff(), g.leading_coeff());
  Monomial q = f.leading_monomial() / g.leading_monomial();
  return f - g.mul_term(c, q);
}

// Full normal form of f against the (not necessarily reduced) list G.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order, Budget& budget) {
  const RingPtr ring = f.ring();
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Polynomial* reducer = nullptr;
    for (const auto& g : G) {
      if (!g.is_zero() && g.leading_monomial().divides(f.leading_monomial())) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      budget.spend();
      f = reduce_once(f, *reducer);
    } else {
      remainder.push_back(f.terms().front());
      std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
      f = Polynomial::from_terms(ring, std::move(rest), order);
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Field& k = f.ring()->field();
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(k.inv(f.leading_coeff()), l / f.leading_monomial());
  Polynomial b = g.mul_term(k.inv(g.leading_coeff()), l / g.leading_monomial());
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order,
                         const GroebnerOptions& opts) {
  Budget budget{opts.step_budget};
  RingPtr ring;
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!ring) ring = g.ring();
    basis.push_back(g.with_order(order).monic());
  }
  if (!ring) {
    return GroebnerBasis({}, order);
  }

  std::vector<Pair> pairs;
  std::vector<bool> alive;  // basis element still contributes pairs/reducers

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    Cmp c = order.compare(a.lcm, b.lcm);
    if (c != Cmp::EQ) return c == Cmp::LT;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };

  // Gebauer-Moller update: prune new and old pairs against the element at
  // index t, then append the surviving new pairs.
  auto update_pairs = [&](std::size_t t) {
    const Monomial& lt = basis[t].leading_monomial();
    std::vector<Pair> cand;
    for (std::size_t i = 0; i < t; ++i) {
      if (!alive[i]) continue;
      cand.push_back(Pair{i, t, Monomial::lcm(basis[i].leading_monomial(), lt)});
    }
    // M criterion: drop a candidate whose lcm is a proper multiple of
    // another candidate's lcm; F criterion: among equal lcms keep one.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        if (cand[b].lcm.divides(cand[a].lcm)) {
          if (!(cand[a].lcm == cand[b].lcm)) {
            drop = true;
          } else if (b < a) {
            drop = true;  // equal lcm: keep the first
          }
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }
    // B (product) criterion.
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const Pair& p) {
                                return Monomial::coprime(
                                    basis[p.i].leading_monomial(),
                                    basis[p.j].leading_monomial());
                              }),
               kept.end());
    // Prune old pairs via the chain criterion.
    pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                               [&](const Pair& p) {
                                 return lt.divides(p.lcm) &&
                                        !(Monomial::lcm(basis[p.i].leading_monomial(),
                                                        lt) == p.lcm) &&
                                        !(Monomial::lcm(basis[p.j].leading_monomial(),
                                                        lt) == p.lcm);
                               }),
                pairs.end());
    for (auto& p : kept) pairs.push_back(std::move(p));
    // Retire basis elements whose lead is now divisible by lt.
    for (std::size_t i = 0; i < t; ++i) {
      if (alive[i] && lt.divides(basis[i].leading_monomial()) &&
          !(basis[i].leading_monomial() == lt))
        alive[i] = false;
    }
  };

  for (std::size_t t = 0; t < basis.size(); ++t) {
    alive.push_back(true);
    update_pairs(t);
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    budget.spend();
    Polynomial s = s_polynomial(basis[p.i], basis[p.j]);
    Polynomial r = reduce_full(std::move(s), basis, order, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    alive.push_back(true);
    update_pairs(basis.size() - 1);
  }

  // Minimalize: keep only elements whose lead is not divisible by another
  // kept element's lead.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!alive[i]) continue;
    bool redundant = false;
    for (std::size_t j : keep) {
      if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i : keep) minimal.push_back(basis[i]);

  // Tail-reduce each element against the others -> reduced GB.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(
        reduce_full(minimal[i], others, order, budget).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_monomial(), b.leading_monomial());
            });
  return GroebnerBasis(std::move(reduced), order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       const GroebnerOptions& opts) {
  Budget budget{opts.step_budget};
  return reduce_full(f.with_order(G.order()), G.elements(), G.order(), budget);
}

// --- Hilbert machinery -------------------------------------------------------

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  if (r > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("binomial: result exceeds int64");
  return static_cast<std::int64_t>(r);
}

namespace {

using ZPoly = std::vector<std::int64_t>;  // coefficient of s^i at index i

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zp_sub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zp_shift(const ZPoly& a, int d) {
  if (a.empty()) return {};
  ZPoly r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + d] = a[i];
  return r;
}

// Drop generators divisible by another generator.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& g : out) {
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

ZPoly hilbert_numerator_rec(std::vector<Monomial> gens, int nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.size() == 1) {
    if (gens[0].degree() == 0) return {};  // unit ideal
    ZPoly r = {1};
    return zp_sub(r, zp_shift({1}, gens[0].degree()));
  }
  // pure powers of distinct variables: product formula
  bool pure = true;
  for (const auto& m : gens) {
    int support = 0;
    for (int i = 0; i < nvars; ++i)
      if (m[i] > 0) ++support;
    if (support != 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    ZPoly r = {1};
    for (const auto& m : gens)
      r = zp_mul(r, zp_sub({1}, zp_shift({1}, m.degree())));
    return r;
  }
  // pivot: most frequent variable among non-pure generators
  std::array<int, kMaxVars> freq{};
  for (const auto& m : gens) {
    int support = 0;
    for (int i = 0; i < nvars; ++i)
      if (m[i] > 0) ++support;
    if (support < 2) continue;
    for (int i = 0; i < nvars; ++i)
      if (m[i] > 0) ++freq[i];
  }
  int pv = 0;
  for (int i = 1; i < nvars; ++i)
    if (freq[i] > freq[pv]) pv = i;
  Monomial pivot(nvars);
  pivot.set(pv, 1);
  // 0 -> S/(I:x)(-1) -> S/I -> S/(I + (x)) -> 0
  std::vector<Monomial> quot, sum;
  for (const auto& m : gens) {
    Monomial q = m;
    if (q[pv] > 0) q.set(pv, q[pv] - 1);
    quot.push_back(q);
    if (m[pv] == 0) sum.push_back(m);
  }
  sum.push_back(pivot);
  ZPoly a = hilbert_numerator_rec(std::move(sum), nvars);
  ZPoly b = hilbert_numerator_rec(std::move(quot), nvars);
  ZPoly r = a;
  r.resize(std::max(a.size(), b.size() + 1), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens,
                                            int nvars) {
  return hilbert_numerator_rec(std::move(gens), nvars);
}

HilbertData hilbert_from_lt(const std::vector<Monomial>& lt_gens, int nvars,
                            int t_max) {
  ZPoly num = hilbert_numerator(lt_gens, nvars);
  HilbertData h;
  h.values.assign(t_max + 1, 0);
  for (int t = 0; t <= t_max; ++t) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < num.size() && static_cast<int>(i) <= t; ++i)
      v += num[i] * binomial(t - static_cast<std::int64_t>(i) + nvars - 1,
                             nvars - 1);
    h.values[t] = v;
  }
  if (num.empty()) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  // N = (1-s)^k Q with Q(1) != 0; Krull dim S/I = n - k, degree = Q(1).
  ZPoly q = num;
  int k = 0;
  auto eval1 = [](const ZPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (!q.empty() && eval1(q) == 0) {
    // q = (1-s) d  with  d_i = q_0 + ... + q_i
    ZPoly d(q.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      acc += q[i];
      d[i] = acc;
    }
    q = std::move(d);
    while (!q.empty() && q.back() == 0) q.pop_back();
    ++k;
  }
  int krull = nvars - k;
  h.dimension = krull - 1;
  h.degree = eval1(q);
  h.stable = t_max + 1 >= static_cast<int>(num.size());
  return h;
}

std::int64_t count_standard_monomials(const std::vector<Monomial>& lt_gens,
                                      int nvars, int t) {
  std::vector<Monomial> min = minimalize_monomials(lt_gens);
  std::int64_t count = 0;
  Monomial m(nvars);
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (idx == nvars - 1) {
      m.set(idx, rem);
      bool in_ideal = false;
      for (const auto& g : min)
        if (g.divides(m)) {
          in_ideal = true;
          break;
        }
      if (!in_ideal) ++count;
      m.set(idx, 0);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      m.set(idx, v);
      rec(idx + 1, rem - v);
    }
    m.set(idx, 0);
  };
  rec(0, t);
  return count;
}

}  // namespace satbound
