#ifndef SATBOUND_SCHUR_HPP
#define SATBOUND_SCHUR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace satbound {

// Graded character of a direct sum of line bundles / free summands: the
// multiset of generator degrees d (one per summand O(-d)), with
// multiplicities.  Everything the bound formulas need is ranks and degrees,
// so this multiset is the whole model.
class GradedMultiset {
 public:
  GradedMultiset() = default;
  explicit GradedMultiset(const std::vector<int>& degrees);

  void add(int degree, std::int64_t mult = 1);
  std::int64_t mult(int degree) const;
  std::int64_t rank() const;
  bool empty() const { return m_.empty(); }
  int max_degree() const;  // throws std::logic_error when empty
  int min_degree() const;

  GradedMultiset tensor(const GradedMultiset& o) const;  // pairwise sums
  GradedMultiset merge(const GradedMultiset& o) const;   // disjoint union
  // Exact multiset difference; throws std::logic_error if any multiplicity
  // would go negative (a failed Pieri subtraction is a bug, never clipped).
  GradedMultiset subtract_exact(const GradedMultiset& o) const;
  GradedMultiset shift(int c) const;  // all degrees + c

  bool operator==(const GradedMultiset& o) const { return m_ == o.m_; }
  const std::map<int, std::int64_t>& entries() const { return m_; }
  std::string to_string() const;

 private:
  std::map<int, std::int64_t> m_;
};

// Nonincreasing degrees d_0 >= ... >= d_p of a regular sequence in P^r,
// with the padding convention d_{p+1} = ... = d_r = 0 when p < r.
struct DegreeSequence {
  std::vector<int> d;
  int r = 0;
  DegreeSequence(std::vector<int> degrees, int r);
  int p() const { return static_cast<int>(d.size()) - 1; }
  int padded(int i) const;  // d_i, 0 for p < i <= r
  GradedMultiset bundle() const;  // V = O(-d_0) + ... + O(-d_p)
};

GradedMultiset sym_power(const GradedMultiset& V, int a);
GradedMultiset ext_power(const GradedMultiset& V, int k);

// Graded character of the hook Schur functor S^{a,1^{k-1}}(V), via the Pieri
// recursion S^{a-1}V (x) Wedge^k V = S^{a,1^{k-1}}V + S^{a-1,1^k}V.
GradedMultiset hook_graded(int a, int k, const GradedMultiset& V);

// Number of semistandard Young tableaux of hook shape (a, 1^{k-1}) with
// entries in {1..n}; brute-force oracle for hook_graded ranks.
std::int64_t hook_rank_oracle(int a, int k, int n);

// One summand (x)_j C^{k_j}(U_j) of the Weyman term L_i, Sym for even j and
// Ext for odd j.
struct WeymanSummand {
  std::vector<int> k;  // k_0..k_r with sum a, sum j*k_j = i
  std::string label;   // e.g. "S^2(U_0) (x) Ext^1(U_1)"
  GradedMultiset character;
};

struct WeymanTerm {
  std::vector<WeymanSummand> summands;
  GradedMultiset total;
};

// U = generator-degree multisets of the modules U_0..U_r of a resolution;
// shorter lists simply have fewer factors (terms needing absent U_j vanish).
WeymanTerm weyman_terms(int a, int i, const std::vector<GradedMultiset>& U);

// True iff max degree of L_i is <= a*m + i.  Requires reg(U_j) <= m + j,
// i.e. all generator degrees of U_j at most m + j; throws otherwise.
bool weyman_reg_check(int a, int i, int m,
                      const std::vector<GradedMultiset>& U);

// Terms C_0..C_p of the Buchsbaum-Eisenbud-style complex resolving J^a for a
// regular sequence of degrees D: C_i = S^{a,1^i}(V).
std::vector<GradedMultiset> be_complex(int a, const DegreeSequence& D);

// Sum_i (-1)^i sum_{d in C_i} h0(t - d), h0(e) = C(e+r, r) for e >= 0.
std::int64_t be_euler_char(int a, const DegreeSequence& D, int t);

enum class BoundKind { macaulay, thmA, thmB };

// macaulay / thmA: a*d_0 + d_1 + ... + d_r - r (zero padding).
// thmB: a*m (pass m in place of a degree sequence).
std::int64_t thm_bound(BoundKind kind, int a, const DegreeSequence& D);
std::int64_t thm_bound_reg(int a, int m);  // thmB

}  // namespace satbound

#endif
