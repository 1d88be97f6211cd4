#ifndef BARVI_DECOMPOSITION_HPP
#define BARVI_DECOMPOSITION_HPP

#include "barvi/cone_term.hpp"
#include "barvi/geometry.hpp"
#include "barvi/polytope.hpp"

#include <cstdint>
#include <vector>

namespace barvi {

struct DecompositionOptions {
  bool force_enumeration = false;  // always use the exact l_inf search instead of the reduced-basis column
  unsigned threads = 1;
};

struct DecompositionStats {
  uint64_t unimodular = 0;
  uint64_t max_worklist = 0;
  uint64_t enumerations = 0;
};

using SignedConeList = std::vector<Cone>;

// unimodular cones with signs; [K] = sum sign_i [K_i] modulo lower-dimensional cones
SignedConeList decompose_simplicial(const Cone& k, const DecompositionOptions& opt = {},
                                    DecompositionStats* stats = nullptr);

// the lattice point of apex + half-open parallelepiped of a unimodular cone
IntVector parallelepiped_point(const Cone& k);

// One vertex cone, decomposed on the polar side and polarized back. The primal
// unimodular cones keep their ray matrices so the apex can be moved (dilation).
// Cones whose entries fit in 64 bits are kept packed.
struct VertexCones {
  RatVector vertex;
  std::vector<int> packed_signs;
  std::vector<int64_t> packed;     // per cone: rays, then rays^{-1}; d*d entries each, column-major
  std::vector<int> signs;
  std::vector<IntMatrix> rays;     // primal rays, columns
  std::vector<IntMatrix> inverse;  // rays^{-1}, integral

  size_t size() const { return packed_signs.size() + signs.size(); }
  void append(VertexCones&& other);
};

struct PolytopeDecomposition {
  Eigen::Index dim = 0;
  std::vector<VertexCones> cones;
  DecompositionStats stats;
};

// vertices and tight sets must come from enumerate_vertices on the same full-dimensional spec
PolytopeDecomposition decompose_vertex_cones(const PolytopeSpec& spec, const VertexSet& vs,
                                             const DecompositionOptions& opt = {});
// generating function of dilation * P from a decomposition of P
ConeTermSum assemble_terms(const PolytopeDecomposition& dec, const Integer& dilation = 1);

// Brion sum for a full-dimensional pure-inequality polytope
ConeTermSum decompose_polytope(const PolytopeSpec& spec, const DecompositionOptions& opt = {},
                               DecompositionStats* stats = nullptr);

// terms for the lattice points of cone{(p,1) : p in P} in d+1 variables, last one the degree.
// spec must describe a bounded full-dimensional polytope with pure inequalities.
ConeTermSum homogenized_decompose(const PolytopeSpec& spec, const DecompositionOptions& opt = {},
                                  DecompositionStats* stats = nullptr);

}  // namespace barvi

#endif
