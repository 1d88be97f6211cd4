#include "barvi/decomposition.hpp"

#include "barvi/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

namespace barvi {

namespace {

// Machine-integer version of the signed decomposition. Every operation is checked
// and an overflow sends the cone back to the GMP code.
struct Overflow {};
using i64 = int64_t;
using FastMatrix = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;

inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline i64 narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
  return static_cast<i64>(v);
}
inline i64 iabs(i64 v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}

bool fits(const IntMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a.data()[i].fits_slong_p()) return false;
  return true;
}

FastMatrix to_fast(const IntMatrix& a) {
  FastMatrix f(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.size(); ++i) f.data()[i] = a.data()[i].get_si();
  return f;
}

IntMatrix from_fast(const FastMatrix& f) {
  IntMatrix a(f.rows(), f.cols());
  for (Eigen::Index i = 0; i < f.size(); ++i) a.data()[i] = static_cast<long>(f.data()[i]);
  return a;
}

// same elimination as adjugate_det
i64 fast_adjugate_det(const FastMatrix& a, FastMatrix& adj) {
  const Eigen::Index n = a.rows();
  FastMatrix M(n, 2 * n);
  M.leftCols(n) = a;
  M.rightCols(n) = FastMatrix::Identity(n, n);
  i64 prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) throw ArgumentError("decompose_simplicial: rays are dependent");
      M.row(k).swap(M.row(p));
      sign = -sign;
    }
    const i64 piv = M(k, k);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const i64 f = M(i, k);
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        __int128 v = static_cast<__int128>(piv) * M(i, j) - static_cast<__int128>(f) * M(k, j);
        M(i, j) = narrow(v / prev);
      }
      M(i, k) = 0;
    }
    prev = piv;
  }
  adj = M.rightCols(n);
  if (sign < 0) {
    adj = -adj;
    return -prev;
  }
  return prev;
}

// floating-point LLL with exact integer updates; only the transform matters,
// so rounding can cost reduction quality but never correctness
void fast_lll(FastMatrix& b, FastMatrix& u) {
  const Eigen::Index n = b.cols(), m = b.rows();
  u = FastMatrix::Identity(n, n);
  if (n <= 1) return;
  Eigen::MatrixXd bs(m, n), mu = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd B(n);
  auto gs = [&](Eigen::Index k) {
    Eigen::VectorXd v = b.col(k).cast<double>();
    bs.col(k) = v;
    for (Eigen::Index j = 0; j < k; ++j) {
      mu(k, j) = v.dot(bs.col(j)) / B(j);
      bs.col(k) -= mu(k, j) * bs.col(j);
    }
    B(k) = bs.col(k).squaredNorm();
  };
  gs(0);
  Eigen::Index k = 1;
  long iterations = 0;
  while (k < n) {
    if (++iterations > 100000) return;
    gs(k);
    for (int pass = 0; pass < 8; ++pass) {
      bool changed = false;
      for (Eigen::Index j = k - 1; j >= 0; --j) {
        if (std::abs(mu(k, j)) <= 0.51) continue;
        const double qd = std::nearbyint(mu(k, j));
        if (std::abs(qd) > 9.0e15) throw Overflow{};
        const i64 q = static_cast<i64>(qd);
        for (Eigen::Index r = 0; r < m; ++r) b(r, k) = sub(b(r, k), mul(q, b(r, j)));
        for (Eigen::Index r = 0; r < n; ++r) u(r, k) = sub(u(r, k), mul(q, u(r, j)));
        for (Eigen::Index i = 0; i < j; ++i) mu(k, i) -= qd * mu(j, i);
        mu(k, j) -= qd;
        changed = true;
      }
      if (!changed) break;
      gs(k);
    }
    if (B(k) < (0.99 - mu(k, k - 1) * mu(k, k - 1)) * B(k - 1)) {
      b.col(k).swap(b.col(k - 1));
      u.col(k).swap(u.col(k - 1));
      gs(k - 1);
      k = std::max<Eigen::Index>(k - 1, 1);
    } else {
      ++k;
    }
  }
}

struct FastItem {
  int sign;
  FastMatrix A;
};

// receives (sign, rays, rays^{-1}) of each unimodular piece
struct Emit {
  std::function<void(int, const FastMatrix&, const FastMatrix&)> fast;
  std::function<void(int, const IntMatrix&, const IntMatrix&)> exact;
};

// one step on a machine-integer cone: emits it when unimodular, otherwise pushes the children.
// Returns false when the reduced basis gives no index-reducing vector.
bool fast_step(const FastItem& item, std::vector<FastItem>& work, const Emit& emit, uint64_t& leaves) {
  const Eigen::Index d = item.A.rows();
  FastMatrix adj;
  const i64 D = fast_adjugate_det(item.A, adj);
  if (D == 0) throw ArgumentError("decompose_simplicial: rays are dependent");
  if (D == 1 || D == -1) {
    if (D == -1)
      for (Eigen::Index i = 0; i < adj.size(); ++i) adj.data()[i] = sub(0, adj.data()[i]);
    emit.fast(item.sign, item.A, adj);
    ++leaves;
    return true;
  }
  const i64 absD = iabs(D);
  FastMatrix red = adj, U;
  fast_lll(red, U);
  Eigen::Index best = -1;
  i64 best_norm = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    i64 nrm = 0;
    for (Eigen::Index r = 0; r < d; ++r) nrm = std::max(nrm, iabs(red(r, j)));
    if (best < 0 || nrm < best_norm) {
      best = j;
      best_norm = nrm;
    }
  }
  if (best_norm >= absD) return false;
  Eigen::Matrix<i64, Eigen::Dynamic, 1> l = red.col(best), w = U.col(best);
  const int sD = D > 0 ? 1 : -1;
  bool positive = false;
  for (Eigen::Index i = 0; i < d; ++i)
    if ((l(i) > 0 ? 1 : l(i) < 0 ? -1 : 0) * sD > 0) positive = true;
  if (!positive) {
    w = -w;
    l = -l;
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    const int s = (l(i) > 0 ? 1 : l(i) < 0 ? -1 : 0) * sD;
    if (s == 0) continue;
    FastItem child{item.sign * s, item.A};
    child.A.col(i) = w;
    work.push_back(std::move(child));
  }
  return true;
}

// GMP step; children are appended to `work`
void exact_step(int sign, const IntMatrix& A, const DecompositionOptions& opt, DecompositionStats* stats,
                std::vector<std::pair<int, IntMatrix>>& work, const Emit& emit, uint64_t& leaves) {
  const Eigen::Index d = A.rows();
  IntMatrix adj;
  const Integer D = adjugate_det(A, adj);
  if (D == 0) throw ArgumentError("decompose_simplicial: rays are dependent");
  if (abs(D) == 1) {
    emit.exact(sign, A, D == 1 ? adj : IntMatrix(-adj));
    ++leaves;
    return;
  }
  // short vector l = adj * w in the lattice D * A^{-1} Z^d; child indices are |l_i|
  const Integer absD = abs(D);
  IntVector l, w;
  bool found = false;
  if (!opt.force_enumeration) {
    LatticeBasis red = lll_reduce(LatticeBasis(adj));
    ShortVector sv = heuristic_short_vector(red);
    if (sv.norm < absD) {
      l = sv.scaled;
      w = sv.alpha;
      found = true;
    }
  }
  if (!found) {
    if (stats) ++stats->enumerations;
    ShortVector sv = shortest_vector_linf(LatticeBasis(adj));
    if (sv.norm >= absD) throw InternalError("decompose_simplicial: no index-reducing vector found");
    l = sv.scaled;
    w = sv.alpha;
  }
  // alpha_i = l_i / D; keep w when some alpha_i > 0, otherwise use -w
  const int sD = sgn(D);
  bool positive = false;
  for (Eigen::Index i = 0; i < d; ++i)
    if (sgn(l(i)) * sD > 0) positive = true;
  if (!positive) {
    w = -w;
    l = -l;
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    const int s = sgn(l(i)) * sD;
    if (s == 0) continue;
    IntMatrix child = A;
    child.col(i) = w;
    work.emplace_back(sign * s, std::move(child));
  }
}

// emits (sign, rays, rays^{-1}) for every unimodular piece of the simplicial cone
void decompose_leaves(int sign, const IntMatrix& rays, const DecompositionOptions& opt, DecompositionStats* stats,
                      const Emit& emit) {
  std::vector<FastItem> fast;
  std::vector<std::pair<int, IntMatrix>> slow;
  const bool use_fast = !opt.force_enumeration;
  auto push = [&](int s, IntMatrix a) {
    if (use_fast && fits(a))
      fast.push_back({s, to_fast(a)});
    else
      slow.emplace_back(s, std::move(a));
  };
  push(sign, rays);
  uint64_t leaves = 0, max_work = 1;
  while (!fast.empty() || !slow.empty()) {
    if (!slow.empty()) {
      auto [s, a] = std::move(slow.back());
      slow.pop_back();
      std::vector<std::pair<int, IntMatrix>> children;
      exact_step(s, a, opt, stats, children, emit, leaves);
      for (auto& c : children) push(c.first, std::move(c.second));
    } else {
      FastItem item = std::move(fast.back());
      fast.pop_back();
      bool done = false;
      const size_t mark = fast.size();
      try {
        done = fast_step(item, fast, emit, leaves);
      } catch (const Overflow&) {
        fast.resize(mark);
      }
      if (!done) slow.emplace_back(item.sign, from_fast(item.A));
    }
    max_work = std::max<uint64_t>(max_work, fast.size() + slow.size());
  }
  if (stats) {
    stats->unimodular += leaves;
    stats->max_worklist = std::max(stats->max_worklist, max_work);
  }
}

}  // namespace

SignedConeList decompose_simplicial(const Cone& k, const DecompositionOptions& opt, DecompositionStats* stats) {
  const Eigen::Index d = k.dim();
  if (k.rays.cols() != d) throw ArgumentError("decompose_simplicial: cone is not simplicial and full-dimensional");
  SignedConeList uni;
  Emit emit{[&](int s, const FastMatrix& a, const FastMatrix&) { uni.emplace_back(k.apex, from_fast(a), s); },
            [&](int s, const IntMatrix& a, const IntMatrix&) { uni.emplace_back(k.apex, a, s); }};
  decompose_leaves(k.sign, k.rays, opt, stats, emit);
  return uni;
}

IntVector parallelepiped_point(const Cone& k) {
  if (k.rays.cols() != k.rays.rows()) throw ArgumentError("parallelepiped_point: cone is not simplicial");
  IntMatrix inv = unimodular_inverse(k.rays);
  RatVector lam = to_rational(inv) * k.apex;
  IntVector c(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) c(i) = ceil_of(lam(i));
  return k.rays * c;
}

namespace {

// distinct primitive rows as columns
IntMatrix polar_generators(const IntMatrix& A, const std::vector<Eigen::Index>& rows) {
  std::vector<IntVector> gens;
  for (auto i : rows) {
    IntVector g = primitive(IntVector(A.row(i).transpose()));
    if (is_zero(g)) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  IntMatrix G(A.cols(), static_cast<Eigen::Index>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) G.col(j) = gens[j];
  return G;
}

struct Task {
  size_t owner;
  IntMatrix polar;  // simplicial polar cone, columns
};

// runs fn(i) for i in [0, n) on up to `threads` workers
template <class Fn>
void parallel_for(size_t n, unsigned threads, Fn fn) {
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<size_t>(threads, n); ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next++;
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

// decomposes a list of simplicial polar cones and polarizes the pieces back
std::vector<VertexCones> decompose_tasks(const std::vector<Task>& tasks, const DecompositionOptions& opt,
                                         DecompositionStats* stats) {
  std::vector<VertexCones> out(tasks.size());
  std::vector<DecompositionStats> st(tasks.size());
  parallel_for(tasks.size(), opt.threads, [&](size_t t) {
    VertexCones& vc = out[t];
    // dual of cone(P) is {x : P^T x <= 0}, generated by the columns of -(P^T)^{-1}
    Emit emit;
    emit.exact = [&](int s, const IntMatrix& P, const IntMatrix& Pinv) {
      vc.signs.push_back(s);
      vc.rays.push_back(-Pinv.transpose());
      vc.inverse.push_back(-P.transpose());
    };
    emit.fast = [&](int s, const FastMatrix& P, const FastMatrix& Pinv) {
      const Eigen::Index d = P.rows();
      for (Eigen::Index i = 0; i < P.size(); ++i)
        if (P.data()[i] == INT64_MIN || Pinv.data()[i] == INT64_MIN) {
          emit.exact(s, from_fast(P), from_fast(Pinv));
          return;
        }
      vc.packed_signs.push_back(s);
      for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) vc.packed.push_back(-Pinv(j, i));
      for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) vc.packed.push_back(-P(j, i));
    };
    decompose_leaves(1, tasks[t].polar, opt, &st[t], emit);
  });
  if (stats)
    for (auto& s : st) {
      stats->unimodular += s.unimodular;
      stats->enumerations += s.enumerations;
      stats->max_worklist = std::max(stats->max_worklist, s.max_worklist);
    }
  return out;
}

}  // namespace

PolytopeDecomposition decompose_vertex_cones(const PolytopeSpec& input, const VertexSet& vs,
                                             const DecompositionOptions& opt) {
  PolytopeSpec spec = materialize_nonnegativity(input);
  if (spec.has_equalities()) throw ArgumentError("decompose_vertex_cones: eliminate equations first");
  const Eigen::Index d = spec.dim();
  PolytopeDecomposition dec;
  dec.dim = d;
  std::vector<Task> tasks;
  for (size_t v = 0; v < vs.size(); ++v) {
    IntMatrix G = polar_generators(spec.A, vs.tight[v]);
    if (rank(G) < d) throw ArgumentError("decompose_vertex_cones: tangent cone is not pointed (lower-dimensional polytope)");
    for (auto& cell : triangulate_rays(G)) {
      IntMatrix P(d, d);
      for (Eigen::Index j = 0; j < d; ++j) P.col(j) = G.col(cell[j]);
      tasks.push_back({v, std::move(P)});
    }
  }
  auto pieces = decompose_tasks(tasks, opt, &dec.stats);
  dec.cones.resize(vs.size());
  for (size_t v = 0; v < vs.size(); ++v) dec.cones[v].vertex = vs.vertices[v];
  for (size_t t = 0; t < tasks.size(); ++t) dec.cones[tasks[t].owner].append(std::move(pieces[t]));
  return dec;
}

void VertexCones::append(VertexCones&& o) {
  packed_signs.insert(packed_signs.end(), o.packed_signs.begin(), o.packed_signs.end());
  packed.insert(packed.end(), o.packed.begin(), o.packed.end());
  for (size_t k = 0; k < o.signs.size(); ++k) {
    signs.push_back(o.signs[k]);
    rays.push_back(std::move(o.rays[k]));
    inverse.push_back(std::move(o.inverse[k]));
  }
  o = VertexCones{};
}

namespace {

IntMatrix unpack(const int64_t* p, Eigen::Index d) {
  IntMatrix m(d, d);
  for (Eigen::Index i = 0; i < d * d; ++i) m.data()[i] = static_cast<long>(p[i]);
  return m;
}

// calls fn(sign, rays, inverse) on every cone
template <class Fn>
void for_each_cone(const VertexCones& vc, Eigen::Index d, Fn fn) {
  const size_t step = 2 * d * d;
  for (size_t k = 0; k < vc.packed_signs.size(); ++k) {
    const int64_t* p = vc.packed.data() + k * step;
    fn(vc.packed_signs[k], unpack(p, d), unpack(p + d * d, d));
  }
  for (size_t k = 0; k < vc.signs.size(); ++k) fn(vc.signs[k], vc.rays[k], vc.inverse[k]);
}

}  // namespace

ConeTermSum assemble_terms(const PolytopeDecomposition& dec, const Integer& dilation) {
  ConeTermSum sum;
  sum.dim = dec.dim;
  const Eigen::Index d = dec.dim;
  for (const auto& vc : dec.cones) {
    // apex = num / den
    RatVector apex = vc.vertex * Rational(dilation);
    Integer den = 1;
    for (Eigen::Index i = 0; i < d; ++i) den = lcm(den, Integer(apex(i).get_den()));
    IntVector num(d);
    for (Eigen::Index i = 0; i < d; ++i) num(i) = Rational(apex(i) * den).get_num();
    for_each_cone(vc, d, [&](int sign, const IntMatrix& rays, const IntMatrix& inverse) {
      ConeTerm t;
      t.sign = sign;
      if (den == 1) {
        t.numerator = num;
      } else {
        IntVector c = inverse * num;
        for (Eigen::Index i = 0; i < d; ++i) mpz_cdiv_q(c(i).get_mpz_t(), c(i).get_mpz_t(), den.get_mpz_t());
        t.numerator = rays * c;
      }
      t.rays.reserve(d);
      for (Eigen::Index j = 0; j < d; ++j) t.rays.push_back(rays.col(j));
      sum.terms.push_back(std::move(t));
    });
  }
  return sum;
}

ConeTermSum decompose_polytope(const PolytopeSpec& spec, const DecompositionOptions& opt, DecompositionStats* stats) {
  VertexSet vs = enumerate_vertices(spec);
  ConeTermSum sum;
  sum.dim = spec.dim();
  if (vs.size() == 0) return sum;
  PolytopeDecomposition dec = decompose_vertex_cones(spec, vs, opt);
  if (stats) *stats = dec.stats;
  return assemble_terms(dec);
}

ConeTermSum homogenized_decompose(const PolytopeSpec& input, const DecompositionOptions& opt,
                                  DecompositionStats* stats) {
  PolytopeSpec spec = materialize_nonnegativity(input);
  if (spec.has_equalities()) throw ArgumentError("homogenized_decompose: eliminate equations first");
  const Eigen::Index d = spec.dim();
  // K = {(x,t) : A x - b t <= 0}; its polar is generated by the rows (a_i, -b_i)
  IntMatrix H(spec.rows(), d + 1);
  H.leftCols(d) = spec.A;
  H.col(d) = -spec.b;
  std::vector<Eigen::Index> all(spec.rows());
  for (Eigen::Index i = 0; i < spec.rows(); ++i) all[i] = i;
  IntMatrix G = polar_generators(H, all);
  if (rank(G) < d + 1) throw ArgumentError("homogenized_decompose: cone over the polytope is not pointed");
  std::vector<Task> tasks;
  for (auto& cell : triangulate_rays(G)) {
    IntMatrix P(d + 1, d + 1);
    for (Eigen::Index j = 0; j <= d; ++j) P.col(j) = G.col(cell[j]);
    tasks.push_back({0, std::move(P)});
  }
  DecompositionStats st;
  auto pieces = decompose_tasks(tasks, opt, &st);
  if (stats) *stats = st;
  ConeTermSum sum;
  sum.dim = d + 1;
  for (auto& vc : pieces)
    for_each_cone(vc, d + 1, [&](int sign, const IntMatrix& B, const IntMatrix&) {
      ConeTerm t;
      t.sign = sign;
      t.numerator = IntVector::Zero(d + 1);
      for (Eigen::Index j = 0; j <= d; ++j) t.rays.push_back(B.col(j));
      sum.terms.push_back(std::move(t));
    });
  return sum;
}

}  // namespace barvi
