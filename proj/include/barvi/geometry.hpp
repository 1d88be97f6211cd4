#ifndef BARVI_GEOMETRY_HPP
#define BARVI_GEOMETRY_HPP

#include "barvi/exact.hpp"
#include "barvi/polytope.hpp"

#include <vector>

namespace barvi {

// apex + cone(columns of rays), with a bookkeeping sign
struct Cone {
  RatVector apex;
  IntMatrix rays;  // d x k, primitive columns
  int sign = 1;

  Cone() = default;
  Cone(RatVector a, IntMatrix r, int s = 1);
  Eigen::Index dim() const { return rays.rows(); }
  Eigen::Index ray_count() const { return rays.cols(); }
  bool simplicial() const;
};

struct ExtremeRay {
  IntVector ray;               // primitive
  std::vector<Eigen::Index> tight;  // rows of the constraint matrix vanishing on the ray
};

// extreme rays of the pointed cone {x : C x <= 0}; throws if C has rank below its column count
std::vector<ExtremeRay> extreme_rays(const IntMatrix& C);

struct VertexSet {
  std::vector<RatVector> vertices;
  std::vector<std::vector<Eigen::Index>> tight;  // tight rows per vertex
  size_t size() const { return vertices.size(); }
};

// vertices of {x : A x <= b} (equality flags ignored, nonnegativity materialized first).
// Empty polytope -> empty set. Unbounded -> UnboundedError.
VertexSet enumerate_vertices(const PolytopeSpec& spec);

Cone tangent_cone(const PolytopeSpec& spec, const RatVector& v);
Cone polar_cone(const Cone& k);
// simplicial pieces of a full-dimensional pointed cone, by a regular lifting
std::vector<Cone> triangulate_cone(const Cone& k);
// index subsets (of the columns of rays) forming a triangulation
std::vector<std::vector<Eigen::Index>> triangulate_rays(const IntMatrix& rays);
Integer cone_index(const Cone& k);

// affine dimension of a finite point set
Eigen::Index affine_dimension(const std::vector<RatVector>& pts);

}  // namespace barvi

#endif
