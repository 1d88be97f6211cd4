#include "barvi/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace barvi {

Cone::Cone(RatVector a, IntMatrix r, int s) : apex(std::move(a)), rays(std::move(r)), sign(s) {
  if (apex.size() != rays.rows()) throw DimensionError("cone apex and rays differ in dimension");
  for (Eigen::Index j = 0; j < rays.cols(); ++j) {
    IntVector c = rays.col(j);
    if (is_zero(c)) throw ArgumentError("cone ray is zero");
    if (content(c) != 1) rays.col(j) = primitive(c);
  }
}

bool Cone::simplicial() const { return rays.cols() <= rays.rows() && rank(rays) == rays.cols(); }

namespace {

using Bits = std::vector<uint64_t>;

struct DDRay {
  IntVector r;
  Bits z;
};

inline void set_bit(Bits& b, Eigen::Index i) { b[i >> 6] |= uint64_t(1) << (i & 63); }

inline int popcount_and(const Bits& a, const Bits& b, Bits& out) {
  int c = 0;
  for (size_t w = 0; w < a.size(); ++w) {
    out[w] = a[w] & b[w];
    c += std::popcount(out[w]);
  }
  return c;
}

inline bool subset(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

}  // namespace

std::vector<ExtremeRay> extreme_rays(const IntMatrix& C) {
  const Eigen::Index n = C.cols(), m = C.rows();
  std::vector<ExtremeRay> out;
  if (n == 0) return out;
  auto basis = independent_rows(C);
  if (static_cast<Eigen::Index>(basis.size()) < n)
    throw UnsupportedError("cone {x : Cx <= 0} contains a line");
  const size_t words = static_cast<size_t>((m + 63) / 64);

  IntMatrix Cb(n, n);
  for (Eigen::Index j = 0; j < n; ++j) Cb.row(j) = C.row(basis[j]);
  IntMatrix adj = adjugate(Cb);
  const int s = sgn(det(Cb));
  std::vector<char> used(m, 0);
  std::vector<DDRay> rays;
  for (Eigen::Index j = 0; j < n; ++j) {
    used[basis[j]] = 1;
    DDRay r;
    r.r = primitive(IntVector(adj.col(j) * Integer(-s)));
    r.z.assign(words, 0);
    for (Eigen::Index k = 0; k < n; ++k)
      if (k != j) set_bit(r.z, basis[k]);
    rays.push_back(std::move(r));
  }

  Bits Z(words);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (used[i]) continue;
    used[i] = 1;
    IntVector a = C.row(i).transpose();
    std::vector<Integer> val(rays.size());
    std::vector<size_t> pos, neg, zer;
    for (size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a, rays[k].r);
      int sg = sgn(val[k]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(k);
    }
    for (size_t k : zer) set_bit(rays[k].z, i);
    if (pos.empty()) continue;
    std::vector<DDRay> next;
    next.reserve(neg.size() + zer.size() + pos.size() * neg.size() / 4 + 1);
    for (size_t p : pos) {
      for (size_t q : neg) {
        if (popcount_and(rays[p].z, rays[q].z, Z) < n - 2) continue;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (subset(Z, rays[k].z)) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay nr;
        nr.r = primitive(IntVector(rays[q].r * val[p] - rays[p].r * val[q]));
        nr.z = Z;
        set_bit(nr.z, i);
        next.push_back(std::move(nr));
      }
    }
    for (size_t k : neg) next.push_back(std::move(rays[k]));
    for (size_t k : zer) next.push_back(std::move(rays[k]));
    rays = std::move(next);
  }

  out.reserve(rays.size());
  for (auto& r : rays) {
    ExtremeRay e;
    e.ray = r.r;
    for (Eigen::Index i = 0; i < m; ++i)
      if (r.z[i >> 6] >> (i & 63) & 1) e.tight.push_back(i);
    out.push_back(std::move(e));
  }
  return out;
}

VertexSet enumerate_vertices(const PolytopeSpec& input) {
  PolytopeSpec spec = materialize_nonnegativity(input);
  const Eigen::Index d = spec.dim();
  // equations become two opposite inequalities; remember the source row
  std::vector<Eigen::Index> source;
  for (Eigen::Index i = 0; i < spec.rows(); ++i) {
    source.push_back(i);
    if (spec.equality_rows.count(i)) source.push_back(i);
  }
  const Eigen::Index m = static_cast<Eigen::Index>(source.size());
  IntMatrix H = IntMatrix::Zero(m + 1, d + 1);
  for (Eigen::Index k = 0; k < m; ++k) {
    Eigen::Index i = source[k];
    int s = (k > 0 && source[k - 1] == i) ? -1 : 1;
    for (Eigen::Index j = 0; j < d; ++j) H(k, j) = spec.A(i, j) * s;
    H(k, d) = -spec.b(i) * s;
  }
  H(m, d) = -1;
  if (rank(IntMatrix(H.topLeftCorner(m, d))) < d)
    throw UnboundedError("polyhedron contains a line");
  VertexSet vs;
  bool recession = false;
  for (auto& e : extreme_rays(H)) {
    const Integer& t = e.ray(d);
    if (t == 0) {
      recession = true;
      continue;
    }
    RatVector v(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      v(j) = Rational(e.ray(j), t);
      v(j).canonicalize();
    }
    std::vector<Eigen::Index> tight;
    for (auto k : e.tight)
      if (k < m) tight.push_back(source[k]);
    tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
    vs.vertices.push_back(std::move(v));
    vs.tight.push_back(std::move(tight));
  }
  if (recession && !vs.vertices.empty()) throw UnboundedError("polyhedron is unbounded");
  return vs;
}

Cone tangent_cone(const PolytopeSpec& input, const RatVector& v) {
  PolytopeSpec spec = materialize_nonnegativity(input);
  const Eigen::Index d = spec.dim();
  if (v.size() != d) throw DimensionError("tangent_cone: point has wrong dimension");
  std::vector<Eigen::Index> tight;
  for (Eigen::Index i = 0; i < spec.rows(); ++i) {
    Rational s = 0;
    for (Eigen::Index j = 0; j < d; ++j) s += spec.A(i, j) * v(j);
    if (s > spec.b(i)) throw ArgumentError("tangent_cone: point violates a constraint");
    if (s == spec.b(i)) tight.push_back(i);
  }
  IntMatrix T(static_cast<Eigen::Index>(tight.size()), d);
  for (size_t k = 0; k < tight.size(); ++k) T.row(k) = spec.A.row(tight[k]);
  if (rank(T) < d) throw ArgumentError("tangent_cone: point is not a vertex");
  auto er = extreme_rays(T);
  IntMatrix rays(d, static_cast<Eigen::Index>(er.size()));
  for (size_t k = 0; k < er.size(); ++k) rays.col(k) = er[k].ray;
  return Cone(v, rays);
}

Cone polar_cone(const Cone& k) {
  const Eigen::Index d = k.dim();
  if (rank(k.rays) < d) throw UnsupportedError("polar_cone: cone is not full-dimensional");
  auto er = extreme_rays(IntMatrix(k.rays.transpose()));
  IntMatrix rays(d, static_cast<Eigen::Index>(er.size()));
  for (size_t j = 0; j < er.size(); ++j) rays.col(j) = er[j].ray;
  return Cone(RatVector::Zero(d), rays);
}

std::vector<std::vector<Eigen::Index>> triangulate_rays(const IntMatrix& rays) {
  const Eigen::Index d = rays.rows(), k = rays.cols();
  if (rank(rays) < d) throw UnsupportedError("triangulate: cone is not full-dimensional");
  std::vector<std::vector<Eigen::Index>> cells;
  if (k == d) {
    std::vector<Eigen::Index> all(d);
    for (Eigen::Index i = 0; i < d; ++i) all[i] = i;
    cells.push_back(all);
    return cells;
  }
  std::vector<Integer> sq(k);
  for (Eigen::Index i = 0; i < k; ++i) sq[i] = dot(rays.col(i), rays.col(i));
  // heights |r|^2 B^k + B^(k-1-i): squared-norm lift with a lexicographic tie breaker
  for (unsigned long base = 2;; base *= 2) {
    Integer B = base, Bk;
    mpz_pow_ui(Bk.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(k));
    IntMatrix M = IntMatrix::Zero(k + 1, d + 1);
    for (Eigen::Index i = 0; i < k; ++i) {
      M.row(i).head(d) = rays.col(i).transpose();
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(k - 1 - i));
      M(i, d) = sq[i] * Bk + p;
    }
    M(k, d) = 1;
    cells.clear();
    bool generic = true;
    for (auto& f : extreme_rays(M)) {
      // facets y.x <= 0 not containing the vertical direction are lower facets
      if (f.ray(d) >= 0) continue;
      std::vector<Eigen::Index> cell;
      for (auto t : f.tight)
        if (t < k) cell.push_back(t);
      if (static_cast<Eigen::Index>(cell.size()) != d) {
        generic = false;
        break;
      }
      cells.push_back(cell);
    }
    if (generic) return cells;
    if (base > (1ul << 40)) throw InternalError("triangulate: could not find a generic lift");
  }
}

std::vector<Cone> triangulate_cone(const Cone& k) {
  std::vector<Cone> out;
  for (auto& cell : triangulate_rays(k.rays)) {
    IntMatrix r(k.dim(), static_cast<Eigen::Index>(cell.size()));
    for (size_t j = 0; j < cell.size(); ++j) r.col(j) = k.rays.col(cell[j]);
    out.emplace_back(k.apex, r, k.sign);
  }
  return out;
}

Integer cone_index(const Cone& k) {
  if (k.rays.cols() != k.rays.rows()) throw ArgumentError("cone_index: cone is not simplicial and full-dimensional");
  Integer d = det(k.rays);
  if (d == 0) throw ArgumentError("cone_index: rays are dependent");
  return abs(d);
}

Eigen::Index affine_dimension(const std::vector<RatVector>& pts) {
  if (pts.empty()) return -1;
  RatMatrix D(static_cast<Eigen::Index>(pts.size()) - 1, pts[0].size());
  for (size_t i = 1; i < pts.size(); ++i) D.row(i - 1) = (pts[i] - pts[0]).transpose();
  return rank(D);
}

}  // namespace barvi
