#ifndef SATBOUND_MODULE_HPP
#define SATBOUND_MODULE_HPP

#include <vector>

#include "satbound/ideal.hpp"

namespace satbound {

// A column of a graded matrix over S: one Polynomial per row.  Rows carry
// degree shifts; entry (i, j) of a graded matrix is homogeneous of degree
// col_deg(j) - row_deg(i).
using Column = std::vector<Polynomial>;

struct GradedMatrix {
  RingPtr ring;
  std::vector<int> row_degrees;
  std::vector<int> col_degrees;
  std::vector<Column> columns;  // columns[j][i] = entry in row i, column j

  std::size_t nrows() const { return row_degrees.size(); }
  std::size_t ncols() const { return columns.size(); }

  // Verifies every nonzero entry is homogeneous of degree
  // col_degrees[j] - row_degrees[i]; throws otherwise.
  void check_graded() const;
};

// Kernel of the graded map defined by M, as a graded matrix whose target
// rows are M's columns.  Column degrees of the input become row degrees of
// the result.  Computed via a module Groebner basis with component
// elimination; columns of the result generate ker(M) but are not
// necessarily minimal.
GradedMatrix syzygies(const GradedMatrix& M, const GroebnerOptions& opts = {});

// Matrix-vector product helpers used by resolution checks.
Column apply(const GradedMatrix& M, const Column& v);
bool is_zero_column(const Column& c);

}  // namespace satbound

#endif
