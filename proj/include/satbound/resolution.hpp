#ifndef SATBOUND_RESOLUTION_HPP
#define SATBOUND_RESOLUTION_HPP

#include <map>

#include "satbound/module.hpp"

namespace satbound {

// Graded free module, recorded by its multiset of generator degrees
// (a summand S(-d) contributes d).
struct FreeModule {
  std::vector<int> generator_degrees;
  std::size_t rank() const { return generator_degrees.size(); }
  int max_degree() const;
};

// Graded Betti numbers beta_{i,j} of a minimal free resolution of an ideal I
// (as a module: beta_{0,j} counts minimal generators of I of degree j).
class BettiTable {
 public:
  void add(int i, int j, std::int64_t count);
  std::int64_t beta(int i, int j) const;
  int length() const { return length_; }
  int regularity() const;  // max j - i over nonzero entries
  const std::map<std::pair<int, int>, std::int64_t>& entries() const {
    return entries_;
  }

  // Conventional staircase layout: rows j - i, columns i.
  std::string to_staircase() const;

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
  int length_ = 0;
};

// Minimal graded free resolution 0 <- I <- F_0 <- F_1 <- ... computed by
// iterated syzygies with constant entries cancelled as each step is built.
struct Resolution {
  std::vector<FreeModule> modules;          // F_0, F_1, ...
  std::vector<GradedMatrix> differentials;  // differentials[i] : F_{i+1} -> F_i
  BettiTable betti() const;
};

Resolution minimal_free_resolution(const Ideal& I,
                                   const GroebnerOptions& opts = {});

BettiTable minimal_betti(const Ideal& I, const GroebnerOptions& opts = {});

// Eisenbud-Goto (arithmetic) regularity: max{j - i : beta_{i,j}(I) != 0}.
int arith_reg(const Ideal& I, const GroebnerOptions& opts = {});

// Castelnuovo-Mumford regularity of the associated sheaf, computed as
// arith_reg of the saturation.  Throws std::domain_error for the unit ideal
// (regularity of the empty scheme is degenerate).
int geom_reg(const Ideal& I, const GroebnerOptions& opts = {});

}  // namespace satbound

#endif
