#include "satbound/monomial.hpp"

namespace satbound {

namespace {

Cmp grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? Cmp::LT : Cmp::GT;
  for (int i = a.n - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

Cmp lex_cmp(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.n; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

}  // namespace

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.n != b.n)
    throw std::invalid_argument("MonomialOrder::compare: mismatched variable counts");
  switch (kind) {
    case Kind::Grevlex:
      return grevlex_cmp(a, b);
    case Kind::Lex:
      return lex_cmp(a, b);
    case Kind::BlockElim: {
      int da = 0, db = 0;
      for (int i = split; i < a.n; ++i) {
        da += a.e[i];
        db += b.e[i];
      }
      if (da != db) return da < db ? Cmp::LT : Cmp::GT;
      return grevlex_cmp(a, b);
    }
  }
  return Cmp::EQ;
}

}  // namespace satbound
