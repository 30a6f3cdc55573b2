#include "satbound/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace satbound {

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms,
                                  MonomialOrder ord) {
  Polynomial f(std::move(ring), ord);
  const Field& k = f.ring_->field();
  // fold repeated monomials
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.m, b.m);
  });
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      f.terms_.back().c = k.add(f.terms_.back().c, t.c);
    } else {
      f.terms_.push_back(std::move(t));
    }
  }
  f.terms_.erase(std::remove_if(f.terms_.begin(), f.terms_.end(),
                                [&](const Term& t) { return k.is_zero(t.c); }),
                 f.terms_.end());
  return f;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw std::domain_error("Polynomial: zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::with_order(const MonomialOrder& ord) const {
  if (ord == order_) return *this;
  return from_terms(ring_, terms_, ord);
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (!ring_ || !g.ring_)
    throw std::invalid_argument("Polynomial: null ring");
  if (!ring_->compatible(*g.ring_))
    throw std::invalid_argument("Polynomial: ring mismatch");
  if (order_ != g.order_)
    throw std::invalid_argument("Polynomial: order mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_compatible(g);
  const Field& k = ring_->field();
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Cmp c = order_.compare(terms_[i].m, g.terms_[j].m);
    if (c == Cmp::GT) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == Cmp::LT) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Coeff s = k.add(terms_[i].c, g.terms_[j].c);
      if (!k.is_zero(s)) r.terms_.push_back(Term{std::move(s), terms_[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  const Field& k = ring_->field();
  Polynomial r(*this);
  for (auto& t : r.terms_) t.c = k.neg(t.c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return *this + (-g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_compatible(g);
  const Field& k = ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      Monomial m = a.m * b.m;
      Coeff p = k.mul(a.c, b.c);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, std::move(p));
      } else {
        it->second = k.add(it->second, p);
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back(Term{std::move(c), m});
  return from_terms(ring_, std::move(terms), order_);
}

Polynomial Polynomial::scale(const Coeff& c) const {
  const Field& k = ring_->field();
  if (k.is_zero(c)) return Polynomial(ring_, order_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.c = k.mul(t.c, c);
  return r;
}

Polynomial Polynomial::mul_term(const Coeff& c, const Monomial& m) const {
  const Field& k = ring_->field();
  if (k.is_zero(c)) return Polynomial(ring_, order_);
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.c = k.mul(t.c, c);
    t.m = t.m * m;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(leading_coeff()));
}

bool Polynomial::equals(const Polynomial& g) const {
  if (!ring_ || !g.ring_ || !ring_->compatible(*g.ring_)) return false;
  const Polynomial& h = order_ == g.order_ ? g : g.with_order(order_);
  if (terms_.size() != h.terms_.size()) return false;
  const Field& k = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].m != h.terms_[i].m || !k.eq(terms_[i].c, h.terms_[i].c))
      return false;
  }
  return true;
}

bool Polynomial::is_homogeneous(std::optional<int>* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) degree_out->reset();
    return true;  // degree undefined, flagged via the unset optional
  }
  int d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) {
      if (degree_out) degree_out->reset();
      return false;
    }
  if (degree_out) *degree_out = d;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs;
    bool neg = false;
    if (k.kind() == Field::Kind::Prime) {
      // symmetric representative for readability
      std::int64_t v = t.c.fp;
      std::int64_t p = k.characteristic();
      if (v > p / 2) {
        neg = true;
        v = p - v;
      }
      cs = std::to_string(v);
    } else {
      Rational q = t.c.rat;
      if (q < 0) {
        neg = true;
        q = -q;
      }
      cs = q.str();
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (cs != "1" || t.m.degree() == 0) factors.push_back(cs);
    for (int i = 0; i < t.m.nvars(); ++i) {
      if (t.m[i] == 0) continue;
      std::string f = ring_->name(i);
      if (t.m[i] > 1) f += "^" + std::to_string(t.m[i]);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

std::int64_t parse_int(Lexer& lx) {
  lx.skip_ws();
  std::size_t start = lx.pos;
  std::int64_t v = 0;
  while (lx.pos < lx.s.size() &&
         std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
    v = v * 10 + (lx.s[lx.pos] - '0');
    if (v > (std::int64_t{1} << 60))
      throw ParseError("integer literal too large", start);
    ++lx.pos;
  }
  if (lx.pos == start) throw ParseError("expected integer", start);
  return v;
}

std::string parse_ident(Lexer& lx) {
  lx.skip_ws();
  std::size_t start = lx.pos;
  if (lx.pos >= lx.s.size() ||
      !(std::isalpha(static_cast<unsigned char>(lx.s[lx.pos])) ||
        lx.s[lx.pos] == '_'))
    throw ParseError("expected variable name", start);
  while (lx.pos < lx.s.size() &&
         (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) ||
          lx.s[lx.pos] == '_'))
    ++lx.pos;
  return lx.s.substr(start, lx.pos - start);
}

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text,
                             MonomialOrder ord) {
  const Field& k = ring->field();
  Lexer lx{text};
  std::vector<Term> terms;

  while (!lx.eof()) {
    // sign
    std::int64_t sign = 1;
    while (true) {
      char c = lx.peek();
      if (c == '+') {
        ++lx.pos;
      } else if (c == '-') {
        sign = -sign;
        ++lx.pos;
      } else {
        break;
      }
    }
    if (lx.eof()) throw ParseError("dangling sign", lx.pos);

    Coeff coeff = k.from_int(sign);
    Monomial mon(ring->nvars());
    bool saw_factor = false;
    while (true) {
      char c = lx.peek();
      if (c == '*') {
        ++lx.pos;
        c = lx.peek();
      } else if (saw_factor &&
                 !(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = k.mul(coeff, k.from_int(parse_int(lx)));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t at = lx.pos;
        std::string name = parse_ident(lx);
        int vi = ring->var_index(name);
        if (vi < 0) throw ParseError("unknown variable '" + name + "'", at);
        int exp = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          std::int64_t e = parse_int(lx);
          if (e < 0 || e > 60000) throw ParseError("exponent out of range", at);
          exp = static_cast<int>(e);
        }
        mon.set(vi, mon[vi] + exp);
      } else if (!saw_factor) {
        throw ParseError("expected term", lx.pos);
      } else {
        break;
      }
      saw_factor = true;
    }
    terms.push_back(Term{std::move(coeff), mon});
  }
  return from_terms(ring, std::move(terms), ord);
}

Polynomial Polynomial::variable(const RingPtr& ring, int i, MonomialOrder ord) {
  Monomial m(ring->nvars());
  m.set(i, 1);
  return from_terms(ring, {Term{ring->field().one(), m}}, ord);
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t n,
                                MonomialOrder ord) {
  return from_terms(ring, {Term{ring->field().from_int(n), Monomial(ring->nvars())}},
                    ord);
}

}  // namespace satbound
