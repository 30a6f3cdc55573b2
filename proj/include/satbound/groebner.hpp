#ifndef SATBOUND_GROEBNER_HPP
#define SATBOUND_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "satbound/polynomial.hpp"

namespace satbound {

// Thrown when a computation exceeds its configured step budget.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

struct GroebnerOptions {
  // Counts individual reduction subtractions across the whole run.
  std::uint64_t step_budget = 500'000'000ULL;
};

// Reduced Groebner basis: monic, interreduced, sorted by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order)
      : elements_(std::move(elements)), order_(order) {}

  const std::vector<Polynomial>& elements() const { return elements_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const;

 private:
  std::vector<Polynomial> elements_;
  MonomialOrder order_;
};

// Buchberger with Gebauer-Moller pair pruning, degree-first pair selection.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

// Full normal form: no term of the result is divisible by any leading term
// of G, and f - result lies in <G>.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       const GroebnerOptions& opts = {});

// --- Hilbert data of a monomial (leading-term) ideal ------------------------

struct HilbertData {
  std::vector<std::int64_t> values;  // dim_k (S/I)_t for t = 0..t_max
  int dimension = 0;                 // projective dimension of V(I); -1 if empty
  std::int64_t degree = 0;           // leading coefficient x dimension!
  bool stable = true;                // false when t_max is below the numerator degree
};

// Numerator N(s) with HS_{S/I}(s) = N(s) / (1-s)^n for the monomial ideal
// generated by `gens` in n variables.  Coefficient i of the result is the
// coefficient of s^i.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, int nvars);

HilbertData hilbert_from_lt(const std::vector<Monomial>& lt_gens, int nvars,
                            int t_max);

// Number of degree-t monomials in n variables outside the monomial ideal.
std::int64_t count_standard_monomials(const std::vector<Monomial>& lt_gens,
                                      int nvars, int t);

// C(n, k) as int64; throws on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace satbound

#endif
