#ifndef BARVI_IP_HPP
#define BARVI_IP_HPP

#include "barvi/cone_term.hpp"
#include "barvi/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace barvi {

enum class Sense { maximize, minimize };
enum class IPMethod { digging, single_cone, bbs };

std::string to_string(IPMethod m);

struct OptimizationProblem {
  PolytopeSpec spec;
  IntVector cost;
  Sense sense = Sense::maximize;
};

// Lasserre's test on a term sum whose rays all have c.v != 0. Rays with c.v > 0
// are flipped; term i then reads eps_i (-1)^{n_i} y^{w_i} / prod (1 - y^{-v}) ...
struct LeadingTermCertificate {
  struct Term {
    std::vector<Eigen::Index> flipped;  // eta_i, rays with c.v > 0
    IntVector w;                        // u_i - sum of the flipped rays
    size_t n = 0;                       // |eta_i|
  };
  Integer M;       // max c.w_i
  Rational sigma;  // sum of eps_i (-1)^{n_i} over the terms with c.w_i = M
  std::vector<Term> terms;

  bool conclusive() const { return sigma != 0; }
};

LeadingTermCertificate lasserre_leading_term(const ConeTermSum& s, const IntVector& c);

struct IPOptions {
  uint64_t seed = 0;
  unsigned threads = 1;
  uint64_t max_levels = 10000000;   // degrees with zero coefficient before giving up
  uint64_t max_frontier = 4000000;  // pending monomials in the merge
};

struct OptResult {
  IPMethod method = IPMethod::digging;
  Integer optimal_value;
  std::optional<IntVector> optimal_point;  // absent for bbs
  uint64_t digging_levels = 0;
  bool lexicographic = false;  // a secondary direction split ties of the cost
  Integer optimal_count;       // bbs, and plain digging without a tie-break; 0 if unknown
  uint64_t iterations = 0;     // bbs probes
  Rational lp_value;
  uint64_t unimodular_cones = 0;
};

struct LPRelaxation {
  Rational value;
  RatVector vertex;  // original coordinates
};

// exact optimum over the vertices, lexicographically smallest optimal vertex
LPRelaxation lp_relaxation(const OptimizationProblem& p);

OptResult digging_optimize(const OptimizationProblem& p, const IPOptions& opt = {});
OptResult single_cone_digging(const OptimizationProblem& p, const IPOptions& opt = {});
OptResult bbs_optimize(const OptimizationProblem& p, const IPOptions& opt = {});

}  // namespace barvi

#endif
