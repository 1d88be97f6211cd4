#include "barvi/ip.hpp"

#include "barvi/decomposition.hpp"
#include "barvi/ehrhart.hpp"
#include "barvi/geometry.hpp"
#include "barvi/specialization.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace barvi {

std::string to_string(IPMethod m) {
  switch (m) {
    case IPMethod::digging:
      return "digging";
    case IPMethod::single_cone:
      return "single cone digging";
    case IPMethod::bbs:
      return "binary search";
  }
  return "?";
}

LeadingTermCertificate lasserre_leading_term(const ConeTermSum& s, const IntVector& c) {
  if (c.size() != s.dim) throw DimensionError("lasserre_leading_term: cost has wrong length");
  LeadingTermCertificate cert;
  bool first = true;
  std::vector<Integer> value(s.terms.size());
  for (size_t i = 0; i < s.terms.size(); ++i) {
    const ConeTerm& t = s.terms[i];
    LeadingTermCertificate::Term ct;
    ct.w = t.numerator;
    for (size_t j = 0; j < t.rays.size(); ++j) {
      const Integer cv = dot(c, t.rays[j]);
      if (cv == 0)
        throw ArgumentError("lasserre_leading_term: cost is orthogonal to ray [" + to_string(t.rays[j]) + "] of term " +
                            std::to_string(i));
      if (cv > 0) {
        ct.flipped.push_back(static_cast<Eigen::Index>(j));
        ct.w -= t.rays[j];
      }
    }
    ct.n = ct.flipped.size();
    value[i] = dot(c, ct.w);
    if (first || value[i] > cert.M) cert.M = value[i];
    first = false;
    cert.terms.push_back(std::move(ct));
  }
  cert.sigma = 0;
  for (size_t i = 0; i < s.terms.size(); ++i)
    if (value[i] == cert.M) cert.sigma += (s.terms[i].sign * ((cert.terms[i].n % 2) ? -1 : 1));
  return cert;
}

namespace {

using i64 = int64_t;

i64 to_i64(const Integer& v) {
  if (!v.fits_slong_p()) throw UnsupportedError("digging: coordinates exceed 64 bits");
  return v.get_si();
}

i64 dot64(const std::vector<i64>& a, const std::vector<i64>& b) {
  __int128 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) throw UnsupportedError("digging: degree exceeds 64 bits");
  return static_cast<i64>(s);
}

std::vector<i64> to_vec(const IntVector& v) {
  std::vector<i64> r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = to_i64(v(i));
  return r;
}

// a term after flipping: sign * y^u / prod (1 - y^{v_j}) with every v_j below zero in the key order
struct FlatTerm {
  int sign;
  std::vector<i64> u;
  std::vector<std::vector<i64>> rays;
};

using Key = std::pair<i64, i64>;  // (c.x, c2.x); the second entry is 0 without refinement

struct Entry {
  Key key;
  uint32_t term;
  uint32_t last;
  std::vector<i64> alpha;
  bool operator<(const Entry& o) const { return key < o.key; }
};

struct DigOutcome {
  std::vector<IntVector> winners;  // reduced coordinates, all with the top key
  i64 degree = 0;
  uint64_t levels = 0;
  bool infeasible = false;
};

// Expands every term in decreasing key order and returns the first key whose merged
// coefficients are nonzero at some accepted monomial.
template <class Accept>
DigOutcome dig(const ConeTermSum& s, const IntVector& c, const IntVector* c2, i64 floor_degree, Accept accept,
               const IPOptions& opt) {
  const std::vector<i64> cv = to_vec(c);
  std::vector<i64> c2v;
  if (c2) c2v = to_vec(*c2);
  auto key_of = [&](const std::vector<i64>& x) { return Key{dot64(cv, x), c2 ? dot64(c2v, x) : 0}; };

  std::vector<FlatTerm> terms;
  terms.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    FlatTerm f{t.sign, to_vec(t.numerator), {}};
    for (const auto& r : t.rays) {
      std::vector<i64> v = to_vec(r);
      Key k = key_of(v);
      if (k.first == 0 && k.second == 0) throw InternalError("digging: ray orthogonal to the cost");
      if (k > Key{0, 0}) {
        // 1/(1-y^v) = -y^{-v}/(1-y^{-v})
        for (size_t i = 0; i < v.size(); ++i) {
          f.u[i] -= v[i];
          v[i] = -v[i];
        }
        f.sign = -f.sign;
      }
      f.rays.push_back(std::move(v));
    }
    std::sort(f.rays.begin(), f.rays.end());
    terms.push_back(std::move(f));
  }
  // identical terms add up, opposite ones cancel for good
  {
    std::map<std::pair<std::vector<i64>, std::vector<std::vector<i64>>>, int> merged;
    for (auto& f : terms) merged[{std::move(f.u), std::move(f.rays)}] += f.sign;
    terms.clear();
    for (auto& [k, sign] : merged)
      if (sign != 0) terms.push_back(FlatTerm{sign, k.first, k.second});
  }

  std::priority_queue<Entry> heap;
  for (size_t i = 0; i < terms.size(); ++i) heap.push(Entry{key_of(terms[i].u), static_cast<uint32_t>(i), 0, terms[i].u});

  DigOutcome out;
  bool have_degree = false;
  i64 degree = 0;
  std::vector<Entry> batch;
  while (!heap.empty()) {
    const Key top = heap.top().key;
    if (!have_degree || top.first != degree) {
      if (have_degree) ++out.levels;
      degree = top.first;
      have_degree = true;
      if (degree < floor_degree) {
        out.infeasible = true;
        return out;
      }
      if (out.levels > opt.max_levels) {
        std::ostringstream os;
        os << "digging: gave up after " << out.levels << " zero levels, now at degree " << degree;
        throw BudgetExceeded(os.str());
      }
    }
    batch.clear();
    while (!heap.empty() && heap.top().key == top) {
      batch.push_back(heap.top());
      heap.pop();
    }
    std::map<std::vector<i64>, long> coeff;
    for (const auto& e : batch) coeff[e.alpha] += terms[e.term].sign;
    for (const auto& [alpha, k] : coeff) {
      if (k == 0) continue;
      IntVector a(static_cast<Eigen::Index>(alpha.size()));
      for (size_t i = 0; i < alpha.size(); ++i) a(static_cast<Eigen::Index>(i)) = static_cast<long>(alpha[i]);
      if (accept(a)) out.winners.push_back(a);
    }
    if (!out.winners.empty()) {
      out.degree = degree;
      return out;
    }
    for (auto& e : batch) {
      const FlatTerm& f = terms[e.term];
      for (size_t j = e.last; j < f.rays.size(); ++j) {
        Entry child{{0, 0}, e.term, static_cast<uint32_t>(j), e.alpha};
        for (size_t i = 0; i < child.alpha.size(); ++i) {
          if (__builtin_add_overflow(child.alpha[i], f.rays[j][i], &child.alpha[i]))
            throw UnsupportedError("digging: coordinates exceed 64 bits");
        }
        child.key = key_of(child.alpha);
        heap.push(std::move(child));
      }
    }
    if (heap.size() > opt.max_frontier) {
      std::ostringstream os;
      os << "digging: more than " << opt.max_frontier << " pending monomials after " << out.levels
         << " zero levels, at degree " << degree;
      throw BudgetExceeded(os.str());
    }
  }
  out.infeasible = true;
  return out;
}

// the problem in the coordinates of the full-dimensional reduction, as a maximization
struct Reduced {
  PreparedPolytope prep;
  IntVector c;   // G^T cost
  Integer c0;    // cost . x0
  IntVector cost;  // cost in x, sign adjusted for maximization
  int sense = 1;
};

Reduced reduce(const OptimizationProblem& p) {
  if (p.cost.size() != p.spec.dim()) throw DimensionError("cost vector has the wrong length");
  Reduced r;
  r.sense = p.sense == Sense::maximize ? 1 : -1;
  r.cost = p.cost * Integer(r.sense);
  r.prep = prepare(p.spec, true);
  if (r.prep.empty) throw InfeasibleError("the polytope is empty");
  const auto& e = r.prep.elim;
  r.c = e.null_basis.transpose() * r.cost;
  Rational c0 = 0;
  for (Eigen::Index i = 0; i < r.cost.size(); ++i) c0 += Rational(r.cost(i)) * e.x0(i);
  // only used when x0 is integral
  r.c0 = c0.get_den() == 1 ? c0.get_num() : Integer(0);
  return r;
}

RatVector lift_real(const EqualityElimination& e, const RatVector& lam) {
  if (e.null_basis.cols() == 0) return e.x0;
  return e.x0 + to_rational(e.null_basis) * lam;
}

bool lex_greater(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) > b(i);
  return false;
}

bool satisfies(const PolytopeSpec& q, const IntVector& x) {
  IntVector ax = q.A * x;
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    if (ax(i) > q.b(i)) return false;
  return true;
}

// a direction that separates every ray of the terms and of the extra rays
IntVector secondary_direction(const ConeTermSum& s, const std::vector<IntVector>& extra, uint64_t seed) {
  ConeTermSum all;
  all.dim = s.dim;
  all.terms = s.terms;
  if (!extra.empty()) {
    ConeTerm t;
    t.numerator = IntVector::Zero(s.dim);
    t.rays = extra;
    all.terms.push_back(t);
  }
  return choose_generic_direction(all, seed ^ 0x9e3779b97f4a7c15ULL).lambda;
}

bool any_orthogonal(const ConeTermSum& s, const IntVector& c) {
  for (const auto& t : s.terms)
    for (const auto& r : t.rays)
      if (dot(c, r) == 0) return true;
  return false;
}

OptResult finish(const Reduced& r, const DigOutcome& d, IPMethod method, bool lex, uint64_t cones) {
  const auto& e = r.prep.elim;
  std::optional<IntVector> best;
  for (const auto& w : d.winners) {
    IntVector x = e.lift(w);
    if (!best || lex_greater(x, *best)) best = x;
  }
  OptResult res;
  res.method = method;
  res.optimal_point = best;
  res.optimal_value = dot(r.cost, *best) * r.sense;
  res.digging_levels = d.levels;
  res.lexicographic = lex;
  // every lattice point carries coefficient 1 in the full generating function
  if (method == IPMethod::digging && !lex) res.optimal_count = static_cast<unsigned long>(d.winners.size());
  res.unimodular_cones = cones;
  return res;
}

i64 floor_degree(const Reduced& r) {
  // c.lambda >= LP minimum over the polytope
  Rational lo;
  bool first = true;
  const IntVector& c = r.c;
  for (const auto& v : r.prep.vertices.vertices) {
    Rational val = 0;
    for (Eigen::Index i = 0; i < c.size(); ++i) val += Rational(c(i)) * v(i);
    if (first || val < lo) lo = val;
    first = false;
  }
  Integer f = ceil_of(lo);
  if (!f.fits_slong_p()) throw UnsupportedError("digging: degrees exceed 64 bits");
  return f.get_si();
}

}  // namespace

LPRelaxation lp_relaxation(const OptimizationProblem& p) {
  Reduced r = reduce(p);
  LPRelaxation best;
  bool first = true;
  for (const auto& v : r.prep.vertices.vertices) {
    RatVector x = lift_real(r.prep.elim, v);
    Rational val = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) val += Rational(p.cost(i)) * x(i);
    bool better = first;
    if (!first) {
      const int cmp = r.sense > 0 ? (val > best.value) - (val < best.value) : (val < best.value) - (val > best.value);
      if (cmp > 0) better = true;
      if (cmp == 0) {
        for (Eigen::Index i = 0; i < x.size(); ++i)
          if (x(i) != best.vertex(i)) {
            better = x(i) < best.vertex(i);
            break;
          }
      }
    }
    if (better) {
      best.value = val;
      best.vertex = x;
    }
    first = false;
  }
  return best;
}

OptResult digging_optimize(const OptimizationProblem& p, const IPOptions& opt) {
  Reduced r = reduce(p);
  const auto& e = r.prep.elim;
  if (e.period != 1) throw InfeasibleError("the equations have no integral solution");
  LPRelaxation lp = lp_relaxation(p);
  if (r.prep.dim() == 0) {
    OptResult res;
    res.optimal_point = e.lift(IntVector(0));
    res.optimal_value = dot(p.cost, *res.optimal_point);
    res.lp_value = lp.value;
    return res;
  }
  DecompositionOptions dopt;
  dopt.threads = opt.threads;
  PolytopeDecomposition dec = decompose_vertex_cones(r.prep.reduced(), r.prep.vertices, dopt);
  ConeTermSum terms = assemble_terms(dec, 1);
  if (count_terms(terms, opt.seed) == 0) throw InfeasibleError("the polytope has no lattice points");
  const bool lex = any_orthogonal(terms, r.c);
  IntVector c2;
  if (lex) c2 = secondary_direction(terms, {}, opt.seed);
  DigOutcome d = dig(terms, r.c, lex ? &c2 : nullptr, floor_degree(r), [](const IntVector&) { return true; }, opt);
  if (d.infeasible) throw InfeasibleError("the polytope has no lattice points");
  OptResult res = finish(r, d, IPMethod::digging, lex, dec.stats.unimodular);
  res.lp_value = lp.value;
  return res;
}

OptResult single_cone_digging(const OptimizationProblem& p, const IPOptions& opt) {
  Reduced r = reduce(p);
  const auto& e = r.prep.elim;
  if (e.period != 1) throw InfeasibleError("the equations have no integral solution");
  LPRelaxation lp = lp_relaxation(p);
  if (r.prep.dim() == 0) {
    OptResult res;
    res.method = IPMethod::single_cone;
    res.optimal_point = e.lift(IntVector(0));
    res.optimal_value = dot(p.cost, *res.optimal_point);
    res.lp_value = lp.value;
    return res;
  }
  const PolytopeSpec& q = r.prep.reduced();
  const VertexSet& vs = r.prep.vertices;
  // tangent cones of all LP-optimal vertices, to see whether the cost alone orders them
  Rational top;
  std::vector<size_t> optimal;
  for (size_t i = 0; i < vs.size(); ++i) {
    Rational val = 0;
    for (Eigen::Index j = 0; j < r.c.size(); ++j) val += Rational(r.c(j)) * vs.vertices[i](j);
    if (optimal.empty() || val > top) {
      top = val;
      optimal.assign(1, i);
    } else if (val == top) {
      optimal.push_back(i);
    }
  }
  auto cone_rays = [&](size_t i) {
    std::vector<IntVector> rays;
    Cone k = tangent_cone(q, vs.vertices[i]);
    for (Eigen::Index j = 0; j < k.rays.cols(); ++j) rays.push_back(k.rays.col(j));
    return rays;
  };
  std::vector<IntVector> extra;
  for (auto i : optimal)
    for (auto& ray : cone_rays(i)) extra.push_back(ray);
  DecompositionOptions dopt;
  dopt.threads = opt.threads;
  auto decompose_one = [&](size_t i) {
    VertexSet one;
    one.vertices.push_back(vs.vertices[i]);
    one.tight.push_back(vs.tight[i]);
    return decompose_vertex_cones(q, one, dopt);
  };
  size_t vstar = optimal.front();
  PolytopeDecomposition dec = decompose_one(vstar);
  ConeTermSum terms = assemble_terms(dec, 1);
  bool lex = optimal.size() > 1 || any_orthogonal(terms, r.c);
  for (auto& ray : extra)
    if (dot(r.c, ray) == 0) lex = true;
  IntVector c2;
  if (lex) {
    // the vertex that is best in the refined order; all its cone rays then point downwards
    c2 = secondary_direction(terms, extra, opt.seed);
    Rational best2;
    for (size_t n = 0; n < optimal.size(); ++n) {
      Rational v2 = 0;
      for (Eigen::Index j = 0; j < c2.size(); ++j) v2 += Rational(c2(j)) * vs.vertices[optimal[n]](j);
      if (n == 0 || v2 > best2) {
        best2 = v2;
        vstar = optimal[n];
      }
    }
    if (vstar != optimal.front()) {
      dec = decompose_one(vstar);
      terms = assemble_terms(dec, 1);
      c2 = secondary_direction(terms, extra, opt.seed);
    }
  }
  const PolytopeSpec full = materialize_nonnegativity(q);
  DigOutcome d = dig(terms, r.c, lex ? &c2 : nullptr, floor_degree(r),
                     [&](const IntVector& a) { return satisfies(full, a); }, opt);
  if (d.infeasible) throw InfeasibleError("the polytope has no lattice points");
  OptResult res = finish(r, d, IPMethod::single_cone, lex, dec.stats.unimodular);
  res.lp_value = lp.value;
  return res;
}

OptResult bbs_optimize(const OptimizationProblem& p, const IPOptions& opt) {
  OptResult res;
  res.method = IPMethod::bbs;
  const int sense = p.sense == Sense::maximize ? 1 : -1;
  const IntVector c = p.cost * Integer(sense);
  OptimizationProblem mx{p.spec, c, Sense::maximize};
  OptimizationProblem mn{p.spec, c, Sense::minimize};
  LPRelaxation hi_lp = lp_relaxation(mx), lo_lp = lp_relaxation(mn);
  res.lp_value = hi_lp.value * sense;
  CountOptions copt;
  copt.seed = opt.seed;
  copt.threads = opt.threads;
  // number of lattice points with c.x >= a
  std::map<Integer, Integer> seen;
  auto probe = [&](const Integer& a) {
    auto it = seen.find(a);
    if (it != seen.end()) return it->second;
    ++res.iterations;
    Integer n = count(add_row(p.spec, -c, -a), copt);
    seen[a] = n;
    return n;
  };
  Integer lo = ceil_of(lo_lp.value), hi = floor_of(hi_lp.value);
  if (lo > hi || probe(lo) == 0) throw InfeasibleError("the polytope has no lattice points");
  res.iterations = 0;  // count the bisection steps only
  // invariant: some point has c.x >= lo, none has c.x > hi
  while (lo < hi) {
    Integer mid = lo + (hi - lo + 1) / 2;
    if (probe(mid) > 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  res.optimal_value = lo * sense;
  res.optimal_count = seen.at(lo);
  return res;
}

}  // namespace barvi
