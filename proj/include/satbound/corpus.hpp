#ifndef SATBOUND_CORPUS_HPP
#define SATBOUND_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satbound/ideal_ops.hpp"
#include "satbound/schur.hpp"

namespace satbound {

struct ExampleSpec {
  std::string name;         // hyperplane | caviglia | coord_points | rnc |
                            // twisted_cubic | complete_intersection |
                            // generic_regseq | veronese | two_planes
  int r = 0;                // ambient P^r where applicable
  int d = 0;                // degree parameter
  std::vector<int> degrees; // for complete_intersection / generic_regseq
  std::uint64_t seed = 1;

  std::string to_string() const;
};

struct ExampleMeta {
  int expected_dim = -2;              // -2 = unspecified
  std::optional<bool> smooth;         // expectation where known
  std::optional<int> reg;             // geometric regularity where known
  std::optional<DegreeSequence> D;    // degree data for thmA-style bounds
};

struct BuiltExample {
  ExampleSpec spec;
  Ideal ideal;
  ExampleMeta meta;
};

BuiltExample build_example(const ExampleSpec& spec,
                           const Field& field = Field::prime());

struct VerificationReport {
  std::string example;
  int a = 1;
  std::string bound_kind;
  std::int64_t bound_value = 0;
  std::int64_t computed_value = 0;
  bool pass = false;
  // False when the theorem's hypotheses fail (e.g. smoothness); such cases
  // are informational, never theorem failures.
  bool applicable = true;
  std::string witness;
  std::string field;
  std::int64_t elapsed_ms = 0;

  std::string to_json() const;  // snake_case keys, fields verbatim
  std::string to_line() const;  // one human-readable row
};

VerificationReport verify_thmA(const BuiltExample& ex, const DegreeSequence& D,
                               int a, const GroebnerOptions& opts = {});
VerificationReport verify_thmB(const BuiltExample& ex, int a,
                               const GroebnerOptions& opts = {});
VerificationReport verify_macaulay(const DegreeSequence& D, int a,
                                   std::uint64_t seed,
                                   const Field& field = Field::prime(),
                                   const GroebnerOptions& opts = {});
VerificationReport verify_corollaryC(const BuiltExample& ex,
                                     const DegreeSequence& D, int a,
                                     const GroebnerOptions& opts = {});

// Default suite over the named families (empty = all), powers 1..a_max.
// Deterministic order; "not applicable" is not a failure.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& names,
                                          int a_max,
                                          const Field& field = Field::prime(),
                                          const GroebnerOptions& opts = {});

// True iff no applicable report failed.
bool suite_passed(const std::vector<VerificationReport>& reports);

}  // namespace satbound

#endif
