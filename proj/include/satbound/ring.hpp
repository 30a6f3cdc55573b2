#ifndef SATBOUND_RING_HPP
#define SATBOUND_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "satbound/field.hpp"
#include "satbound/monomial.hpp"

namespace satbound {

// Descriptor of a graded polynomial ring k[x_0, ..., x_r].
class Ring {
 public:
  Ring(int nvars, Field field, std::vector<std::string> names = {})
      : nvars_(nvars), field_(std::move(field)), names_(std::move(names)) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("Ring: variable count out of range");
    if (names_.empty()) {
      for (int i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != nvars)
      throw std::invalid_argument("Ring: name count mismatch");
  }

  int nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars_; ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  bool compatible(const Ring& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_;
  }

 private:
  int nvars_;
  Field field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(int nvars, const Field& field,
                         std::vector<std::string> names = {}) {
  return std::make_shared<const Ring>(nvars, field, std::move(names));
}

}  // namespace satbound

#endif
