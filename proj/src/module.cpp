#include "satbound/module.hpp"

#include <algorithm>
#include <tuple>

namespace satbound {

void GradedMatrix::check_graded() const {
  for (std::size_t j = 0; j < ncols(); ++j) {
    if (columns[j].size() != nrows())
      throw std::invalid_argument("GradedMatrix: ragged column");
    for (std::size_t i = 0; i < nrows(); ++i) {
      const Polynomial& e = columns[j][i];
      if (e.is_zero()) continue;
      std::optional<int> d;
      if (!e.is_homogeneous(&d) || *d != col_degrees[j] - row_degrees[i])
        throw std::invalid_argument("GradedMatrix: inconsistent entry degrees");
    }
  }
}

Column apply(const GradedMatrix& M, const Column& v) {
  Column out(M.nrows(), Polynomial(M.ring));
  for (std::size_t i = 0; i < M.nrows(); ++i) out[i] = Polynomial(M.ring);
  for (std::size_t j = 0; j < M.ncols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < M.nrows(); ++i) {
      if (M.columns[j][i].is_zero()) continue;
      out[i] = out[i] + M.columns[j][i] * v[j];
    }
  }
  return out;
}

bool is_zero_column(const Column& c) {
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

namespace {

struct ModTerm {
  Coeff c;
  Monomial m;
  int comp;
};

// Free-module monomial order: components below `split` dominate the rest;
// within a block, shift-adjusted degree first, then grevlex, then position.
struct ModOrder {
  int split;
  const std::vector<int>* shifts;
  MonomialOrder base = MonomialOrder::grevlex();

  // returns >0 if a > b, <0 if a < b, 0 if equal monomial+component
  int cmp(const Monomial& am, int ac, const Monomial& bm, int bc) const {
    int ab = ac < split ? 0 : 1;
    int bb = bc < split ? 0 : 1;
    if (ab != bb) return ab < bb ? 1 : -1;
    int ad = am.degree() + (*shifts)[ac];
    int bd = bm.degree() + (*shifts)[bc];
    if (ad != bd) return ad > bd ? 1 : -1;
    Cmp c = base.compare(am, bm);
    if (c != Cmp::EQ) return c == Cmp::GT ? 1 : -1;
    if (ac != bc) return ac < bc ? 1 : -1;
    return 0;
  }
  bool greater(const ModTerm& a, const ModTerm& b) const {
    return cmp(a.m, a.comp, b.m, b.comp) > 0;
  }
};

using VTerms = std::vector<ModTerm>;

struct Budget {
  std::uint64_t left;
  void spend(std::uint64_t n = 1) {
    if (n > left) throw BudgetExceededError("syzygies: step budget exceeded");
    left -= n;
  }
};

VTerms normalize(VTerms t, const ModOrder& ord, const Field& k) {
  std::sort(t.begin(), t.end(),
            [&](const ModTerm& a, const ModTerm& b) { return ord.greater(a, b); });
  VTerms out;
  for (auto& x : t) {
    if (!out.empty() && out.back().comp == x.comp && out.back().m == x.m) {
      out.back().c = k.add(out.back().c, x.c);
    } else {
      out.push_back(std::move(x));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const ModTerm& x) { return k.is_zero(x.c); }),
            out.end());
  return out;
}

// a - c * q * b, all sorted.
VTerms sub_mul(const VTerms& a, const Coeff& c, const Monomial& q,
               const VTerms& b, const ModOrder& ord, const Field& k) {
  VTerms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].m * q;
    int r = ord.cmp(a[i].m, a[i].comp, bm, b[j].comp);
    if (r > 0) {
      out.push_back(a[i++]);
    } else if (r < 0) {
      out.push_back(ModTerm{k.neg(k.mul(c, b[j].c)), bm, b[j].comp});
      ++j;
    } else {
      Coeff s = k.sub(a[i].c, k.mul(c, b[j].c));
      if (!k.is_zero(s)) out.push_back(ModTerm{std::move(s), a[i].m, a[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back(ModTerm{k.neg(k.mul(c, b[j].c)), b[j].m * q, b[j].comp});
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int comp;
};

}  // namespace

GradedMatrix syzygies(const GradedMatrix& M, const GroebnerOptions& opts) {
  M.check_graded();
  const RingPtr& ring = M.ring;
  const Field& k = ring->field();
  const int nr = static_cast<int>(M.nrows());
  const int nc = static_cast<int>(M.ncols());

  std::vector<int> shifts = M.row_degrees;
  shifts.insert(shifts.end(), M.col_degrees.begin(), M.col_degrees.end());
  ModOrder ord{nr, &shifts};

  Budget budget{opts.step_budget};

  // generators (F_j, e_j) in S^{nr + nc}
  std::vector<VTerms> basis;
  for (int j = 0; j < nc; ++j) {
    VTerms t;
    for (int i = 0; i < nr; ++i) {
      for (const auto& term : M.columns[j][i].terms())
        t.push_back(ModTerm{term.c, term.m, i});
    }
    t.push_back(ModTerm{k.one(), Monomial(ring->nvars()), nr + j});
    basis.push_back(normalize(std::move(t), ord, k));
  }

  // reducer buckets by lead component
  std::vector<std::vector<std::size_t>> bucket(nr + nc);
  auto lead = [&](std::size_t i) -> const ModTerm& { return basis[i].front(); };

  auto reduce_full = [&](VTerms f) {
    VTerms remainder;
    while (!f.empty()) {
      const ModTerm& lt = f.front();
      std::size_t reducer = SIZE_MAX;
      for (std::size_t gi : bucket[lt.comp]) {
        if (lead(gi).m.divides(lt.m)) {
          reducer = gi;
          break;
        }
      }
      if (reducer != SIZE_MAX) {
        budget.spend();
        const ModTerm& gl = lead(reducer);
        Coeff c = k.div(lt.c, gl.c);
        f = sub_mul(f, c, lt.m / gl.m, basis[reducer], ord, k);
      } else {
        remainder.push_back(f.front());
        f.erase(f.begin());
      }
    }
    return remainder;
  };

  std::vector<Pair> pairs;

  // Gebauer-Moller style update restricted to same-component pairs.  The
  // coprimality criterion is not valid for modules and is not used.
  auto update_pairs = [&](std::size_t t) {
    const ModTerm& lt = lead(t);
    std::vector<Pair> cand;
    for (std::size_t i : bucket[lt.comp]) {
      if (i == t) continue;
      cand.push_back(Pair{i, t, Monomial::lcm(lead(i).m, lt.m), lt.comp});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        if (cand[b].lcm.divides(cand[a].lcm)) {
          if (!(cand[a].lcm == cand[b].lcm))
            drop = true;
          else if (b < a)
            drop = true;
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }
    pairs.erase(std::remove_if(
                    pairs.begin(), pairs.end(),
                    [&](const Pair& p) {
                      return p.comp == lt.comp && lt.m.divides(p.lcm) &&
                             !(Monomial::lcm(lead(p.i).m, lt.m) == p.lcm) &&
                             !(Monomial::lcm(lead(p.j).m, lt.m) == p.lcm);
                    }),
                pairs.end());
    for (auto& p : kept) pairs.push_back(std::move(p));
    bucket[lt.comp].push_back(t);
  };

  for (std::size_t t = 0; t < basis.size(); ++t) update_pairs(t);

  auto pair_less = [&](const Pair& a, const Pair& b) {
    int da = a.lcm.degree() + shifts[a.comp];
    int db = b.lcm.degree() + shifts[b.comp];
    if (da != db) return da < db;
    Cmp c = MonomialOrder::grevlex().compare(a.lcm, b.lcm);
    if (c != Cmp::EQ) return c == Cmp::LT;
    return std::tie(a.comp, a.i, a.j) < std::tie(b.comp, b.i, b.j);
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    budget.spend();
    const ModTerm& li = lead(p.i);
    const ModTerm& lj = lead(p.j);
    VTerms s = sub_mul(
        // (lcm/li.m) * basis[i] / li.c
        [&] {
          VTerms t = basis[p.i];
          Monomial q = p.lcm / li.m;
          Coeff inv = k.inv(li.c);
          for (auto& x : t) {
            x.m = x.m * q;
            x.c = k.mul(x.c, inv);
          }
          return t;
        }(),
        k.inv(lj.c), p.lcm / lj.m, basis[p.j], ord, k);
    VTerms r = reduce_full(std::move(s));
    if (r.empty()) continue;
    basis.push_back(std::move(r));
    update_pairs(basis.size() - 1);
  }

  // Extract elements supported entirely in the source block.
  GradedMatrix out;
  out.ring = ring;
  out.row_degrees = M.col_degrees;
  std::vector<std::pair<int, std::size_t>> chosen;  // (degree, index) for sorting
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (lead(i).comp >= nr) {
      int deg = lead(i).m.degree() + shifts[lead(i).comp];
      chosen.push_back({deg, i});
    }
  }
  std::stable_sort(chosen.begin(), chosen.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto [deg, idx] : chosen) {
    Column col(nc, Polynomial(ring));
    std::vector<std::vector<Term>> comps(nc);
    for (const auto& t : basis[idx]) comps[t.comp - nr].push_back(Term{t.c, t.m});
    for (int j = 0; j < nc; ++j)
      col[j] = Polynomial::from_terms(ring, std::move(comps[j]));
    // normalize: leading coefficient of the element made 1
    const ModTerm& lt = basis[idx].front();
    Coeff inv = k.inv(lt.c);
    for (auto& p : col) p = p.scale(inv);
    out.col_degrees.push_back(deg);
    out.columns.push_back(std::move(col));
  }
  return out;
}

}  // namespace satbound
