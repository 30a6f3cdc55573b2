#ifndef SATBOUND_IDEAL_FILE_HPP
#define SATBOUND_IDEAL_FILE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "satbound/ideal.hpp"

namespace satbound {

// Ideal file format:
//   ring <characteristic> <var,var,...>   (0 = rationals)
//   gens:
//   <one generator per line>
// '#' starts a comment; blank lines ignored; at most 8 variables.
struct IdealFileError : std::runtime_error {
  int line;
  int col;
  IdealFileError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " (line " + std::to_string(line_) +
                           ", col " + std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

Ideal parse_ideal_file(const std::string& text,
                       const std::optional<Field>& field_override = {});

std::string write_ideal_file(const Ideal& I);

}  // namespace satbound

#endif
