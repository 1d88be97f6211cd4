#ifndef BARVI_EHRHART_HPP
#define BARVI_EHRHART_HPP

#include "barvi/decomposition.hpp"
#include "barvi/polynomial.hpp"
#include "barvi/polytope.hpp"
#include "barvi/specialization.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace barvi {

struct CountOptions {
  uint64_t seed = 0;
  unsigned threads = 1;
  bool force_enumeration = false;
};

// A polytope brought to full-dimensional inequality form. Lattice points of n*P
// correspond to those of n*elim.reduced_spec when elim.period divides n.
struct PreparedPolytope {
  EqualityElimination elim;
  bool empty = false;
  bool have_vertices = false;
  VertexSet vertices;  // of elim.reduced_spec, when have_vertices

  Eigen::Index dim() const { return elim.reduced_spec.dim(); }
  const PolytopeSpec& reduced() const { return elim.reduced_spec; }
};

// with_vertices: detect emptiness and hidden equations by vertex enumeration, otherwise by linear programming
PreparedPolytope prepare(const PolytopeSpec& spec, bool with_vertices = true);

// counts n*P for many n from one decomposition of the vertex cones
class DilationCounter {
 public:
  explicit DilationCounter(const PolytopeSpec& spec, CountOptions opt = {});
  Integer count(const Integer& n);
  const PreparedPolytope& prepared() const { return prep_; }
  const DecompositionStats& stats();
  // generating function of n*P in the reduced coordinates
  ConeTermSum terms(const Integer& n);

 private:
  void build();
  PreparedPolytope prep_;
  CountOptions opt_;
  std::unique_ptr<PolytopeDecomposition> dec_;
};

Integer count(const PolytopeSpec& spec, const CountOptions& opt = {});
Integer count_dilation(const PolytopeSpec& spec, const Integer& n, const CountOptions& opt = {});
// count through the homogenized cone (coefficient of t^1 of the Ehrhart series)
Integer count_homogenized(const PolytopeSpec& spec, const CountOptions& opt = {});
// Ehrhart series of an arbitrary spec (equations allowed)
SeriesRational ehrhart_series(const PolytopeSpec& spec, const CountOptions& opt = {});

struct QuasiPolynomial {
  unsigned long period = 1;
  std::vector<RatPoly> constituents;  // f_i used when s = i mod period

  Rational eval(const Integer& s) const;
  std::string to_string() const;
};

unsigned long vertex_period(const PolytopeSpec& spec);
QuasiPolynomial interpolate_ehrhart(const PolytopeSpec& spec, const CountOptions& opt = {});

}  // namespace barvi

#endif
