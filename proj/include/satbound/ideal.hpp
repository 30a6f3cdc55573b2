#ifndef SATBOUND_IDEAL_HPP
#define SATBOUND_IDEAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <tuple>

#include "satbound/groebner.hpp"

namespace satbound {

// Homogeneous ideal with cached Groebner bases per monomial order and cached
// Hilbert data.  Caches are owned per value; a fully constructed Ideal is
// safe to share read-only across threads, but cache fills are not
// synchronized, so warm an ideal before sharing it.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // Largest / list of generator degrees (nonincreasing).
  std::vector<int> generator_degrees() const;

  std::shared_ptr<const GroebnerBasis> groebner(
      const MonomialOrder& order = MonomialOrder::grevlex(),
      const GroebnerOptions& opts = {}) const;

  // Hilbert data computed through t_max; recomputed (and re-cached) when a
  // larger t_max is requested.
  const HilbertData& hilbert(int t_max, const GroebnerOptions& opts = {}) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;

  struct OrderKey {
    int kind;
    int split;
    bool operator<(const OrderKey& o) const {
      return std::tie(kind, split) < std::tie(o.kind, o.split);
    }
  };
  mutable std::map<OrderKey, std::shared_ptr<const GroebnerBasis>> gb_cache_;
  mutable std::optional<HilbertData> hilbert_cache_;
  mutable int hilbert_tmax_ = -1;
};

// dim_k I_t.
std::int64_t graded_dim(const Ideal& I, int t, const GroebnerOptions& opts = {});

// dim_k (S/I)_t.
std::int64_t quotient_graded_dim(const Ideal& I, int t,
                                 const GroebnerOptions& opts = {});

bool ideal_member(const Polynomial& f, const Ideal& I,
                  const GroebnerOptions& opts = {});

// Equality as ideals (mutual generator membership).
bool ideal_equal(const Ideal& I, const Ideal& K,
                 const GroebnerOptions& opts = {});

// True iff I = (1).
bool is_unit_ideal(const Ideal& I, const GroebnerOptions& opts = {});

}  // namespace satbound

#endif
