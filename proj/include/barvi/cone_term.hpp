#ifndef BARVI_CONE_TERM_HPP
#define BARVI_CONE_TERM_HPP

#include "barvi/exact.hpp"

#include <iosfwd>
#include <vector>

namespace barvi {

// sign * z^numerator / prod_j (1 - z^rays[j])
struct ConeTerm {
  int sign = 1;
  IntVector numerator;
  std::vector<IntVector> rays;
};

struct ConeTermSum {
  Eigen::Index dim = 0;
  std::vector<ConeTerm> terms;

  void add(ConeTerm t);
  void append(const ConeTermSum& other);
  size_t size() const { return terms.size(); }
  // sort terms into a canonical order (for reproducible dumps)
  void canonicalize();
};

// "sign; numerator exponents; ray list", one line per term
void write_terms(std::ostream& os, const ConeTermSum& s);
// checks the structural invariants (dimensions, nonzero primitive rays)
void validate(const ConeTermSum& s);

}  // namespace barvi

#endif
