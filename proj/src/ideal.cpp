#include "satbound/ideal.hpp"

#include <algorithm>

namespace satbound {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->compatible(*ring_))
      throw std::invalid_argument("Ideal: generator from another ring");
    std::optional<int> deg;
    if (!g.is_homogeneous(&deg))
      throw std::invalid_argument("Ideal: generator not homogeneous: " +
                                  g.to_string());
    gens_.push_back(std::move(g));
  }
}

std::vector<int> Ideal::generator_degrees() const {
  std::vector<int> degs;
  for (const auto& g : gens_) degs.push_back(g.degree());
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(
    const MonomialOrder& order, const GroebnerOptions& opts) const {
  OrderKey key{static_cast<int>(order.kind), order.split};
  auto it = gb_cache_.find(key);
  if (it != gb_cache_.end()) return it->second;
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(gens_, order, opts));
  gb_cache_.emplace(key, gb);
  return gb;
}

const HilbertData& Ideal::hilbert(int t_max, const GroebnerOptions& opts) const {
  if (!hilbert_cache_ || hilbert_tmax_ < t_max) {
    auto gb = groebner(MonomialOrder::grevlex(), opts);
    hilbert_cache_ = hilbert_from_lt(gb->leading_monomials(), ring_->nvars(), t_max);
    hilbert_tmax_ = t_max;
  }
  return *hilbert_cache_;
}

std::int64_t quotient_graded_dim(const Ideal& I, int t,
                                 const GroebnerOptions& opts) {
  if (t < 0) return 0;
  return I.hilbert(t, opts).values[t];
}

std::int64_t graded_dim(const Ideal& I, int t, const GroebnerOptions& opts) {
  if (t < 0) return 0;
  int n = I.ring()->nvars();
  return binomial(t + n - 1, n - 1) - quotient_graded_dim(I, t, opts);
}

bool ideal_member(const Polynomial& f, const Ideal& I,
                  const GroebnerOptions& opts) {
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  return normal_form(f, *I.groebner(MonomialOrder::grevlex(), opts), opts)
      .is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& K, const GroebnerOptions& opts) {
  for (const auto& g : I.gens())
    if (!ideal_member(g, K, opts)) return false;
  for (const auto& g : K.gens())
    if (!ideal_member(g, I, opts)) return false;
  return true;
}

bool is_unit_ideal(const Ideal& I, const GroebnerOptions& opts) {
  if (I.is_zero()) return false;
  auto gb = I.groebner(MonomialOrder::grevlex(), opts);
  return gb->size() == 1 && gb->elements()[0].degree() == 0;
}

}  // namespace satbound
