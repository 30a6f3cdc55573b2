#ifndef SATBOUND_IDEAL_OPS_HPP
#define SATBOUND_IDEAL_OPS_HPP

#include <map>

#include "satbound/ideal.hpp"

namespace satbound {

Ideal ideal_power(const Ideal& I, int a);

// {g : g*f in I}, via module syzygies.
Ideal colon(const Ideal& I, const Polynomial& f,
            const GroebnerOptions& opts = {});

// {g : g*K in I}.
Ideal colon_ideal(const Ideal& I, const Ideal& K,
                  const GroebnerOptions& opts = {});

Ideal intersect(const std::vector<Ideal>& ideals,
                const GroebnerOptions& opts = {});

// I : x_var^infinity via the grevlex last-variable division trick.
Ideal variable_saturation(const Ideal& I, int var,
                          const GroebnerOptions& opts = {});

// Saturation with respect to m = (x_0, ..., x_r), as the intersection of the
// per-variable saturations.
Ideal saturate(const Ideal& I, const GroebnerOptions& opts = {});

// Independent route: iterate I -> I : m until stable.  Kept for
// cross-checking saturate().
Ideal saturate_iterated_colon(const Ideal& I, const GroebnerOptions& opts = {});

struct SatDegreeResult {
  int sat_degree = 0;                       // least t0 with J_t = sat(J)_t for t >= t0
  std::vector<int> witness_degrees;         // all t with J_t strictly smaller
  std::map<int, std::int64_t> gap_dims;     // t -> dim sat(J)_t - dim J_t
};

SatDegreeResult sat_degree(const Ideal& I, const GroebnerOptions& opts = {});

// Projective dimension of V(I); -1 for the empty scheme.
int dimension(const Ideal& I, const GroebnerOptions& opts = {});
int codimension(const Ideal& I, const GroebnerOptions& opts = {});

struct SmoothGateError : std::runtime_error {
  explicit SmoothGateError(const std::string& what) : std::runtime_error(what) {}
};

// sat(I^a).  Valid as the symbolic power I^{(a)} only when V(I) is smooth;
// callers must have run is_smooth (smooth_checked) or explicitly acknowledge
// the override, otherwise a SmoothGateError is thrown.
Ideal symbolic_power(const Ideal& I, int a, bool smooth_checked,
                     bool override_ack = false,
                     const GroebnerOptions& opts = {});

struct SmoothCertificate {
  bool smooth = false;
  int codim = 0;
  std::size_t minor_count = 0;
  // Dimension of the locus cut by I + (c x c Jacobian minors); -1 when empty.
  int singular_locus_dim = -1;
  // Equidimensionality of V(I) is assumed, not verified (no primary
  // decomposition in this artifact); recorded here for every certificate.
  std::string assumption = "V(I) assumed equidimensional; smoothness tested "
                           "over the configured field as a proxy for C";
};

// Jacobian criterion: V(I) smooth iff I + (codim x codim minors of Jac)
// cuts out the empty set.
SmoothCertificate is_smooth(const Ideal& I, const GroebnerOptions& opts = {});

Polynomial derivative(const Polynomial& f, int var);

}  // namespace satbound

#endif
