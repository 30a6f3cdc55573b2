#include "satbound/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "satbound/ideal_ops.hpp"

namespace satbound {

int FreeModule::max_degree() const {
  int m = 0;
  for (int d : generator_degrees) m = std::max(m, d);
  return m;
}

void BettiTable::add(int i, int j, std::int64_t count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
  if (entries_[{i, j}] == 0) entries_.erase({i, j});
  length_ = 0;
  for (const auto& [key, v] : entries_) length_ = std::max(length_, key.first);
}

std::int64_t BettiTable::beta(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
  return r;
}

std::string BettiTable::to_staircase() const {
  if (entries_.empty()) return "(empty)\n";
  int rmin = entries_.begin()->first.second - entries_.begin()->first.first;
  int rmax = rmin;
  for (const auto& [key, v] : entries_) {
    rmin = std::min(rmin, key.second - key.first);
    rmax = std::max(rmax, key.second - key.first);
  }
  std::size_t w = 1;
  for (const auto& [key, v] : entries_)
    w = std::max(w, std::to_string(v).size());
  auto cell = [&](const std::string& s) {
    std::string out(w + 1 - s.size(), ' ');
    return out + s;
  };
  std::ostringstream os;
  os << "    ";
  for (int i = 0; i <= length_; ++i) os << cell(std::to_string(i));
  os << '\n';
  for (int r = rmin; r <= rmax; ++r) {
    std::string lbl = std::to_string(r) + ":";
    os << std::string(lbl.size() < 4 ? 4 - lbl.size() : 0, ' ') << lbl;
    for (int i = 0; i <= length_; ++i) {
      std::int64_t b = beta(i, r + i);
      os << cell(b == 0 ? "." : std::to_string(b));
    }
    os << '\n';
  }
  return os.str();
}

BettiTable Resolution::betti() const {
  BettiTable t;
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (int d : modules[i].generator_degrees)
      t.add(static_cast<int>(i), d, 1);
  return t;
}

namespace {

bool is_unit_entry(const Polynomial& p) {
  return !p.is_zero() && p.degree() == 0;
}

// Cancel constant (degree-zero) entries of next = d_{l+1}; each cancellation
// drops one generator of F_l, so the matching column of prev = d_l goes too.
void cancel_constants(GradedMatrix& prev, GradedMatrix& next) {
  const Field& F = prev.ring->field();
  for (;;) {
    std::size_t i0 = next.nrows(), j0 = next.ncols();
    for (std::size_t j = 0; j < next.ncols() && j0 == next.ncols(); ++j)
      for (std::size_t i = 0; i < next.nrows(); ++i)
        if (is_unit_entry(next.columns[j][i])) {
          i0 = i;
          j0 = j;
          break;
        }
    if (j0 == next.ncols()) return;
    Coeff uinv = F.inv(next.columns[j0][i0].leading_term().c);
    Column piv(next.nrows());
    for (std::size_t x = 0; x < next.nrows(); ++x)
      piv[x] = next.columns[j0][x].scale(uinv);
    for (std::size_t y = 0; y < next.ncols(); ++y) {
      if (y == j0) continue;
      const Polynomial& f = next.columns[y][i0];
      if (f.is_zero()) continue;
      Polynomial g = f;
      for (std::size_t x = 0; x < next.nrows(); ++x)
        if (!piv[x].is_zero()) next.columns[y][x] = next.columns[y][x] - piv[x] * g;
    }
    next.columns.erase(next.columns.begin() + j0);
    next.col_degrees.erase(next.col_degrees.begin() + j0);
    for (auto& col : next.columns) col.erase(col.begin() + i0);
    next.row_degrees.erase(next.row_degrees.begin() + i0);
    prev.columns.erase(prev.columns.begin() + i0);
    prev.col_degrees.erase(prev.col_degrees.begin() + i0);
  }
}

}  // namespace

Resolution minimal_free_resolution(const Ideal& I, const GroebnerOptions& opts) {
  Resolution res;
  if (!I.ring()) throw std::invalid_argument("resolution of uninitialized ideal");
  if (I.is_zero()) {
    res.modules.push_back(FreeModule{});
    return res;
  }
  GradedMatrix A;
  A.ring = I.ring();
  A.row_degrees = {0};
  for (const Polynomial& g : I.gens()) {
    A.col_degrees.push_back(g.degree());
    A.columns.push_back({g});
  }
  std::vector<GradedMatrix> mats{A};
  while (mats.back().ncols() > 0) {
    GradedMatrix D = syzygies(mats.back(), opts);
    cancel_constants(mats.back(), D);
    if (D.ncols() == 0) break;
    mats.push_back(std::move(D));
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    res.modules.push_back(FreeModule{mats[i].col_degrees});
    if (i > 0) res.differentials.push_back(std::move(mats[i]));
  }
  return res;
}

BettiTable minimal_betti(const Ideal& I, const GroebnerOptions& opts) {
  return minimal_free_resolution(I, opts).betti();
}

int arith_reg(const Ideal& I, const GroebnerOptions& opts) {
  return minimal_betti(I, opts).regularity();
}

int geom_reg(const Ideal& I, const GroebnerOptions& opts) {
  Ideal sat = saturate(I, opts);
  if (is_unit_ideal(sat, opts))
    throw std::domain_error("geom_reg: ideal cuts out the empty scheme");
  return arith_reg(sat, opts);
}

}  // namespace satbound
