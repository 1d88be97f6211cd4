#ifndef BARVI_SPECIALIZATION_HPP
#define BARVI_SPECIALIZATION_HPP

#include "barvi/cone_term.hpp"
#include "barvi/decomposition.hpp"
#include "barvi/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace barvi {

struct GenericDirection {
  IntVector lambda;
};

struct UnivariateTerm {
  int sign = 1;
  Integer numerator;
  std::vector<Integer> denominators;  // t-exponents, all nonzero
};

struct UnivariateTermSum {
  std::vector<UnivariateTerm> terms;
  size_t size() const { return terms.size(); }
};

// lambda with lambda.v != 0 for every ray v of every term (restricted to the first `coords`
// coordinates, rays vanishing there are skipped); coords = -1 means all coordinates
GenericDirection choose_generic_direction(const ConeTermSum& s, uint64_t seed, Eigen::Index coords = -1);
UnivariateTermSum substitute_direction(const ConeTermSum& s, const GenericDirection& dir);
// the same for assemble_terms(dec, dilation), without building the multivariate terms
GenericDirection choose_generic_direction(const PolytopeDecomposition& dec, uint64_t seed);
UnivariateTermSum substitute_direction(const PolytopeDecomposition& dec, const Integer& dilation,
                                       const GenericDirection& dir);
// value at t = 1 of a term sum that encodes a polynomial
Integer count_via_residue(const UnivariateTermSum& u);
// shorthand: choose lambda from the seed and evaluate
Integer count_terms(const ConeTermSum& s, uint64_t seed = 0);

// N(t) / prod_i (1 - t^{s_i})
struct SeriesRational {
  IntPoly numerator;
  std::vector<unsigned long> factors;  // s_i, each >= 1, sorted

  IntPoly denominator() const;
  UnivariateRat reduced() const;
  // substitute t -> t^g
  SeriesRational compose_power(unsigned long g) const;
};

bool equivalent(const SeriesRational& a, const SeriesRational& b);
bool equivalent(const SeriesRational& a, const IntPoly& num, const IntPoly& den);
// cancel common cyclotomic factors while keeping the product-of-(1-t^s) shape
SeriesRational simplify_series(const SeriesRational& r);
std::string to_string(const SeriesRational& r);

// Ehrhart series from a homogenized term sum (last coordinate is the degree)
SeriesRational ehrhart_series(const ConeTermSum& h, uint64_t seed = 0);

std::vector<Integer> taylor_expand(const SeriesRational& r, size_t n);
std::vector<Integer> taylor_expand(const ConeTermSum& h, size_t n, uint64_t seed = 0);

}  // namespace barvi

#endif
