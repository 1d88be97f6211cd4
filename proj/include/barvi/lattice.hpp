#ifndef BARVI_LATTICE_HPP
#define BARVI_LATTICE_HPP

#include "barvi/exact.hpp"

namespace barvi {

// Lattice spanned by the columns of basis / denominator.
struct LatticeBasis {
  IntMatrix basis;
  Integer denominator = 1;
  IntMatrix U;  // after reduction: basis = original_basis * U

  LatticeBasis() = default;
  explicit LatticeBasis(IntMatrix b, Integer den = 1);
  explicit LatticeBasis(const RatMatrix& b);

  Eigen::Index dim() const { return basis.rows(); }
  Eigen::Index rank() const { return basis.cols(); }
  RatMatrix rational() const;
};

// exact LLL with delta = 3/4 on linearly independent columns
LatticeBasis lll_reduce(const LatticeBasis& b);
// in-place variant on integer columns, optionally tracking the transform
void lll_reduce_columns(IntMatrix& b, IntMatrix* u);

struct ShortVector {
  IntVector alpha;    // coefficients with respect to the input basis
  IntVector scaled;   // basis * alpha, i.e. denominator * vector
  Integer norm;       // infinity norm of scaled
  RatVector value() const;
  Integer denominator = 1;
};

// a lattice vector of minimal infinity norm; ties go to the lexicographically smallest alpha
ShortVector shortest_vector_linf(const LatticeBasis& b);
// the reduced basis column of least infinity norm (first one on ties)
ShortVector heuristic_short_vector(const LatticeBasis& reduced);

}  // namespace barvi

#endif
