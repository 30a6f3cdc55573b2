#include "satbound/schur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "satbound/groebner.hpp"  // binomial

namespace satbound {

GradedMultiset::GradedMultiset(const std::vector<int>& degrees) {
  for (int d : degrees) add(d);
}

void GradedMultiset::add(int degree, std::int64_t mult) {
  if (mult == 0) return;
  auto it = m_.find(degree);
  std::int64_t v = (it == m_.end() ? 0 : it->second) + mult;
  if (v < 0) throw std::logic_error("GradedMultiset: negative multiplicity");
  if (v == 0)
    m_.erase(degree);
  else
    m_[degree] = v;
}

std::int64_t GradedMultiset::mult(int degree) const {
  auto it = m_.find(degree);
  return it == m_.end() ? 0 : it->second;
}

std::int64_t GradedMultiset::rank() const {
  std::int64_t r = 0;
  for (const auto& [d, m] : m_) r += m;
  return r;
}

int GradedMultiset::max_degree() const {
  if (m_.empty()) throw std::logic_error("max_degree of empty multiset");
  return m_.rbegin()->first;
}

int GradedMultiset::min_degree() const {
  if (m_.empty()) throw std::logic_error("min_degree of empty multiset");
  return m_.begin()->first;
}

GradedMultiset GradedMultiset::tensor(const GradedMultiset& o) const {
  GradedMultiset out;
  for (const auto& [d1, m1] : m_)
    for (const auto& [d2, m2] : o.m_) out.add(d1 + d2, m1 * m2);
  return out;
}

GradedMultiset GradedMultiset::merge(const GradedMultiset& o) const {
  GradedMultiset out = *this;
  for (const auto& [d, m] : o.m_) out.add(d, m);
  return out;
}

GradedMultiset GradedMultiset::subtract_exact(const GradedMultiset& o) const {
  GradedMultiset out = *this;
  for (const auto& [d, m] : o.m_) out.add(d, -m);  // add() rejects negatives
  return out;
}

GradedMultiset GradedMultiset::shift(int c) const {
  GradedMultiset out;
  for (const auto& [d, m] : m_) out.add(d + c, m);
  return out;
}

std::string GradedMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, m] : m_) {
    if (!first) os << ", ";
    first = false;
    os << d;
    if (m != 1) os << ":" << m;
  }
  os << '}';
  return os.str();
}

DegreeSequence::DegreeSequence(std::vector<int> degrees, int r_)
    : d(std::move(degrees)), r(r_) {
  if (d.empty() || r < 0 || static_cast<int>(d.size()) > r + 1)
    throw std::invalid_argument("DegreeSequence: need 1 <= p+1 <= r+1");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) throw std::invalid_argument("DegreeSequence: degrees must be positive");
    if (i > 0 && d[i] > d[i - 1])
      throw std::invalid_argument("DegreeSequence: degrees must be nonincreasing");
  }
}

int DegreeSequence::padded(int i) const {
  if (i < 0 || i > r) throw std::out_of_range("DegreeSequence::padded");
  return i < static_cast<int>(d.size()) ? d[i] : 0;
}

GradedMultiset DegreeSequence::bundle() const { return GradedMultiset(d); }

GradedMultiset sym_power(const GradedMultiset& V, int a) {
  if (a < 0) throw std::invalid_argument("sym_power: a < 0");
  // DP over distinct degrees: picking j copies of a degree-v summand of
  // multiplicity m contributes binomial(m+j-1, j) monomials of degree j*v.
  std::vector<GradedMultiset> by_count(a + 1);
  by_count[0].add(0);
  for (const auto& [v, m] : V.entries()) {
    std::vector<GradedMultiset> next(a + 1);
    for (int c = 0; c <= a; ++c)
      for (int j = 0; j <= c; ++j) {
        std::int64_t ways = binomial(m + j - 1, j);
        for (const auto& [d, cnt] : by_count[c - j].entries())
          next[c].add(d + j * v, cnt * ways);
      }
    by_count = std::move(next);
  }
  return by_count[a];
}

GradedMultiset ext_power(const GradedMultiset& V, int k) {
  if (k < 0) throw std::invalid_argument("ext_power: k < 0");
  std::vector<GradedMultiset> by_count(k + 1);
  by_count[0].add(0);
  for (const auto& [v, m] : V.entries()) {
    std::vector<GradedMultiset> next(k + 1);
    for (int c = 0; c <= k; ++c)
      for (int j = 0; j <= c && j <= m; ++j) {
        std::int64_t ways = binomial(m, j);
        for (const auto& [d, cnt] : by_count[c - j].entries())
          next[c].add(d + j * v, cnt * ways);
      }
    by_count = std::move(next);
  }
  return by_count[k];
}

namespace {

GradedMultiset hook_rec(int a, int k, const GradedMultiset& V,
                        std::map<std::pair<int, int>, GradedMultiset>& memo) {
  if (k > V.rank()) return {};  // column of height k needs k distinct rows
  if (a == 1) return ext_power(V, k);
  if (k == 1) return sym_power(V, a);
  auto it = memo.find({a, k});
  if (it != memo.end()) return it->second;
  GradedMultiset pieri = sym_power(V, a - 1).tensor(ext_power(V, k));
  GradedMultiset res =
      pieri.subtract_exact(hook_rec(a - 1, k + 1, V, memo));
  memo[{a, k}] = res;
  return res;
}

}  // namespace

GradedMultiset hook_graded(int a, int k, const GradedMultiset& V) {
  if (a < 1 || k < 1) throw std::invalid_argument("hook_graded: need a, k >= 1");
  std::map<std::pair<int, int>, GradedMultiset> memo;
  return hook_rec(a, k, V, memo);
}

namespace {

// Weakly increasing arm of length 'len' with values in [lo..n].
std::int64_t count_arms(int len, int lo, int n) {
  if (len == 0) return 1;
  std::int64_t total = 0;
  for (int v = lo; v <= n; ++v) total += count_arms(len - 1, v, n);
  return total;
}

// Strictly increasing leg of length 'len' with values in (lo..n].
std::int64_t count_legs(int len, int lo, int n) {
  if (len == 0) return 1;
  std::int64_t total = 0;
  for (int v = lo + 1; v <= n; ++v) total += count_legs(len - 1, v, n);
  return total;
}

}  // namespace

std::int64_t hook_rank_oracle(int a, int k, int n) {
  if (a < 1 || k < 1 || n < 1)
    throw std::invalid_argument("hook_rank_oracle: need a, k, n >= 1");
  std::int64_t total = 0;
  for (int corner = 1; corner <= n; ++corner)
    total += count_arms(a - 1, corner, n) * count_legs(k - 1, corner, n);
  return total;
}

namespace {

void enumerate_compositions(int a, int i, int j, int nfac, std::vector<int>& k,
                            std::vector<std::vector<int>>& out) {
  if (j == nfac) {
    if (a == 0 && i == 0) out.push_back(k);
    return;
  }
  for (int kj = 0; kj <= a && j * kj <= i; ++kj) {
    k.push_back(kj);
    enumerate_compositions(a - kj, i - j * kj, j + 1, nfac, k, out);
    k.pop_back();
  }
}

}  // namespace

WeymanTerm weyman_terms(int a, int i, const std::vector<GradedMultiset>& U) {
  if (a < 1 || i < 0) throw std::invalid_argument("weyman_terms: need a >= 1, i >= 0");
  if (U.empty()) throw std::invalid_argument("weyman_terms: empty resolution");
  WeymanTerm term;
  std::vector<std::vector<int>> comps;
  std::vector<int> scratch;
  enumerate_compositions(a, i, 0, static_cast<int>(U.size()), scratch, comps);
  for (const auto& k : comps) {
    WeymanSummand s;
    s.k = k;
    GradedMultiset ch;
    ch.add(0);
    std::ostringstream lbl;
    bool first = true;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      bool even = j % 2 == 0;
      ch = ch.tensor(even ? sym_power(U[j], k[j]) : ext_power(U[j], k[j]));
      if (!first) lbl << " (x) ";
      first = false;
      lbl << (even ? "S^" : "E^") << k[j] << "(U_" << j << ")";
    }
    if (first) lbl << "S^0";
    s.label = lbl.str();
    s.character = ch;
    if (ch.empty()) continue;  // an exterior power overflowed its rank
    term.total = term.total.merge(ch);
    term.summands.push_back(std::move(s));
  }
  return term;
}

bool weyman_reg_check(int a, int i, int m,
                      const std::vector<GradedMultiset>& U) {
  for (std::size_t j = 0; j < U.size(); ++j)
    if (!U[j].empty() && U[j].max_degree() > m + static_cast<int>(j))
      throw std::invalid_argument(
          "weyman_reg_check: input resolution is not m-regular (U_" +
          std::to_string(j) + " has a generator above degree m+" +
          std::to_string(j) + ")");
  WeymanTerm t = weyman_terms(a, i, U);
  if (t.total.empty()) return true;
  return t.total.max_degree() <= static_cast<std::int64_t>(a) * m + i;
}

std::vector<GradedMultiset> be_complex(int a, const DegreeSequence& D) {
  if (a < 1) throw std::invalid_argument("be_complex: a >= 1");
  GradedMultiset V = D.bundle();
  std::vector<GradedMultiset> C;
  for (int i = 0; i <= D.p(); ++i) C.push_back(hook_graded(a, i + 1, V));
  return C;
}

std::int64_t be_euler_char(int a, const DegreeSequence& D, int t) {
  auto C = be_complex(a, D);
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < C.size(); ++i) {
    std::int64_t sign = i % 2 == 0 ? 1 : -1;
    for (const auto& [d, m] : C[i].entries()) {
      int e = t - d;
      if (e < 0) continue;
      chi += sign * m * binomial(e + D.r, D.r);
    }
  }
  return chi;
}

std::int64_t thm_bound(BoundKind kind, int a, const DegreeSequence& D) {
  if (kind == BoundKind::thmB)
    throw std::invalid_argument("thm_bound: thmB takes a regularity, use thm_bound_reg");
  std::int64_t b = static_cast<std::int64_t>(a) * D.padded(0) - D.r;
  for (int i = 1; i <= D.r; ++i) b += D.padded(i);
  return b;
}

std::int64_t thm_bound_reg(int a, int m) {
  return static_cast<std::int64_t>(a) * m;
}

}  // namespace satbound
