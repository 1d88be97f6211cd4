#ifndef BARVI_LP_HPP
#define BARVI_LP_HPP

#include "barvi/exact.hpp"

namespace barvi {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  RatVector x;
};

// maximize c.x subject to A x <= b with x free; exact two-phase simplex, Bland's rule
LPResult lp_maximize(const IntMatrix& A, const RatVector& b, const RatVector& c);
LPResult lp_maximize(const IntMatrix& A, const IntVector& b, const IntVector& c);

}  // namespace barvi

#endif
