#ifndef SATBOUND_POLYNOMIAL_HPP
#define SATBOUND_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "satbound/ring.hpp"

namespace satbound {

struct Term {
  Coeff c;
  Monomial m;
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what), offset(off) {}
};

// Exact multivariate polynomial.  Terms are kept sorted strictly descending
// in the polynomial's monomial order, with no zero coefficients and no
// repeated monomials.  Immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring,
                      MonomialOrder ord = MonomialOrder::grevlex())
      : ring_(std::move(ring)), order_(ord) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms,
                               MonomialOrder ord = MonomialOrder::grevlex());

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Coeff& leading_coeff() const { return leading_term().c; }

  // Total degree of the leading term (= degree of f when homogeneous).
  int degree() const { return is_zero() ? -1 : leading_term().m.degree(); }

  // Re-sorted copy under another order.
  Polynomial with_order(const MonomialOrder& ord) const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Coeff& c, const Monomial& m) const;
  Polynomial monic() const;

  bool equals(const Polynomial& g) const;

  // True iff all terms share one degree; *degree_out is that degree, or
  // unset for the zero polynomial.
  bool is_homogeneous(std::optional<int>* degree_out = nullptr) const;

  std::string to_string() const;

  // Text grammar: sum of terms, `^` for powers, `*` optional between
  // symbols, integer coefficients; e.g. "x*y - 3*z^2".
  static Polynomial parse(const RingPtr& ring, const std::string& text,
                          MonomialOrder ord = MonomialOrder::grevlex());

  static Polynomial variable(const RingPtr& ring, int i,
                             MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial constant(const RingPtr& ring, std::int64_t n,
                             MonomialOrder ord = MonomialOrder::grevlex());

 private:
  void check_compatible(const Polynomial& g) const;

  RingPtr ring_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Term> terms_;
};

}  // namespace satbound

#endif
