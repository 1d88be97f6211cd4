#include "barvi/ehrhart.hpp"

#include "barvi/geometry.hpp"
#include "barvi/lp.hpp"

#include <sstream>

namespace barvi {

namespace {

// x = n x0 + G lambda, lambda = n l0 + G' mu
EqualityElimination compose(const EqualityElimination& outer, const EqualityElimination& inner) {
  EqualityElimination e = outer;
  e.x0 = outer.x0 + to_rational(outer.null_basis) * inner.x0;
  e.null_basis = outer.null_basis * inner.null_basis;
  e.period = lcm(outer.period, inner.period);
  e.infeasible = outer.infeasible || inner.infeasible;
  e.reduced_spec = inner.reduced_spec;
  return e;
}

PolytopeSpec with_equalities(const PolytopeSpec& s, const std::vector<Eigen::Index>& rows) {
  PolytopeSpec r = s;
  for (auto i : rows) r.equality_rows.insert(i);
  return r;
}

// rows of Q tight at every point of Q, found by linear programming; empty set when Q is full-dimensional.
// Sets `empty` if Q has no point. Throws UnboundedError for unbounded Q.
std::vector<Eigen::Index> implicit_rows_lp(const PolytopeSpec& Q, bool& empty) {
  const Eigen::Index m = Q.rows(), d = Q.dim();
  empty = false;
  // maximize s subject to A x + s 1 <= b, s <= 1
  IntMatrix A(m + 1, d + 1);
  A.leftCols(d) = IntMatrix::Zero(m + 1, d);
  A.topLeftCorner(m, d) = Q.A;
  A.col(d) = IntVector::Ones(m + 1);
  RatVector b(m + 1);
  for (Eigen::Index i = 0; i < m; ++i) b(i) = Q.b(i);
  b(m) = 1;
  RatVector c = RatVector::Zero(d + 1);
  c(d) = 1;
  LPResult r = lp_maximize(A, b, c);
  if (r.status != LPStatus::optimal || r.value < 0) {
    empty = true;
    return {};
  }
  RatVector qb = to_rational(Q.b);
  std::vector<Eigen::Index> rows;
  if (r.value == 0) {
    for (Eigen::Index i = 0; i < m; ++i) {
      RatVector obj = -to_rational(IntVector(Q.A.row(i).transpose()));
      LPResult ri = lp_maximize(Q.A, qb, obj);
      if (ri.status == LPStatus::optimal && ri.value == -qb(i)) rows.push_back(i);
    }
    if (rows.empty()) throw InternalError("prepare: lower-dimensional polytope without implicit equations");
    return rows;
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    for (int s : {1, -1}) {
      RatVector obj = RatVector::Zero(d);
      obj(j) = s;
      if (lp_maximize(Q.A, qb, obj).status == LPStatus::unbounded) throw UnboundedError("polyhedron is unbounded");
    }
  }
  return rows;
}

}  // namespace

PreparedPolytope prepare(const PolytopeSpec& spec, bool with_vertices) {
  validate(spec);
  PreparedPolytope p;
  p.elim = eliminate_equalities(spec);
  for (int round = 0;; ++round) {
    if (p.elim.infeasible) {
      p.empty = true;
      return p;
    }
    const PolytopeSpec& Q = p.elim.reduced_spec;
    if (Q.dim() == 0) {
      p.have_vertices = true;
      p.vertices.vertices.push_back(RatVector(0));
      p.vertices.tight.emplace_back();
      return p;
    }
    std::vector<Eigen::Index> implicit;
    if (with_vertices) {
      VertexSet vs = enumerate_vertices(Q);
      if (vs.size() == 0) {
        p.empty = true;
        return p;
      }
      if (affine_dimension(vs.vertices) == Q.dim()) {
        p.vertices = std::move(vs);
        p.have_vertices = true;
        return p;
      }
      std::vector<int> hits(Q.rows(), 0);
      for (auto& t : vs.tight)
        for (auto i : t) ++hits[i];
      for (Eigen::Index i = 0; i < Q.rows(); ++i)
        if (hits[i] == static_cast<int>(vs.size())) implicit.push_back(i);
    } else {
      bool empty = false;
      implicit = implicit_rows_lp(Q, empty);
      if (empty) {
        p.empty = true;
        return p;
      }
      if (implicit.empty()) return p;
    }
    if (implicit.empty() || round > 64) throw InternalError("prepare: failed to reach full dimension");
    p.elim = compose(p.elim, eliminate_equalities(with_equalities(Q, implicit)));
  }
}

DilationCounter::DilationCounter(const PolytopeSpec& spec, CountOptions opt)
    : prep_(prepare(spec, true)), opt_(opt) {}

void DilationCounter::build() {
  if (dec_ || prep_.empty || prep_.dim() == 0) return;
  DecompositionOptions dopt;
  dopt.threads = opt_.threads;
  dopt.force_enumeration = opt_.force_enumeration;
  dec_ = std::make_unique<PolytopeDecomposition>(decompose_vertex_cones(prep_.reduced(), prep_.vertices, dopt));
}

const DecompositionStats& DilationCounter::stats() {
  static const DecompositionStats none;
  build();
  return dec_ ? dec_->stats : none;
}

ConeTermSum DilationCounter::terms(const Integer& n) {
  build();
  ConeTermSum s;
  s.dim = prep_.dim();
  if (prep_.empty || n < 0) return s;
  if (n > 0 && n % prep_.elim.period != 0) return s;
  if (!dec_) {
    // zero-dimensional: the single point
    ConeTerm t;
    t.numerator = IntVector(0);
    s.terms.push_back(t);
    return s;
  }
  if (n == 0) {
    ConeTerm t;
    t.numerator = IntVector::Zero(s.dim);
    s.terms.push_back(t);
    return s;
  }
  return assemble_terms(*dec_, n);
}

Integer DilationCounter::count(const Integer& n) {
  if (n < 0) throw ArgumentError("dilation factor must be nonnegative");
  if (prep_.empty) return 0;
  if (n == 0) return 1;
  if (n % prep_.elim.period != 0) return 0;
  if (prep_.dim() == 0) return 1;
  build();
  return count_via_residue(substitute_direction(*dec_, n, choose_generic_direction(*dec_, opt_.seed)));
}

Integer count(const PolytopeSpec& spec, const CountOptions& opt) { return DilationCounter(spec, opt).count(1); }

Integer count_dilation(const PolytopeSpec& spec, const Integer& n, const CountOptions& opt) {
  return DilationCounter(spec, opt).count(n);
}

SeriesRational ehrhart_series(const PolytopeSpec& spec, const CountOptions& opt) {
  PreparedPolytope p = prepare(spec, false);
  if (p.empty) return SeriesRational{};
  const unsigned long g = p.elim.period.get_ui();
  if (p.dim() == 0) {
    SeriesRational r;
    r.numerator = IntPoly(Integer(1));
    r.factors.push_back(g);
    return r;
  }
  DecompositionOptions dopt;
  dopt.threads = opt.threads;
  dopt.force_enumeration = opt.force_enumeration;
  ConeTermSum h = homogenized_decompose(dilate(p.reduced(), p.elim.period), dopt);
  return ehrhart_series(h, opt.seed).compose_power(g);
}

Integer count_homogenized(const PolytopeSpec& spec, const CountOptions& opt) {
  return taylor_expand(ehrhart_series(spec, opt), 1)[1];
}

Rational QuasiPolynomial::eval(const Integer& s) const {
  Integer r = s % Integer(period);
  if (r < 0) r += period;
  return constituents[r.get_ui()].eval(Rational(s));
}

std::string QuasiPolynomial::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < constituents.size(); ++i) {
    os << "s = " << i << " mod " << period << ":";
    const auto& f = constituents[i];
    if (f.is_zero()) os << " 0";
    for (size_t k = 0; k < f.size(); ++k) os << " " << f[k].get_str();
    os << "\n";
  }
  return os.str();
}

unsigned long vertex_period(const PolytopeSpec& spec) {
  PreparedPolytope p = prepare(spec, true);
  if (p.empty) return 1;
  Integer l = 1;
  RatMatrix G = to_rational(p.elim.null_basis);
  for (const auto& v : p.vertices.vertices) {
    RatVector x = p.elim.x0 + (G.cols() ? RatVector(G * v) : RatVector::Zero(p.elim.x0.size()));
    l = lcm(l, common_denominator(x));
  }
  l = lcm(l, p.elim.period);
  if (!l.fits_ulong_p()) throw Error("vertex_period: period too large");
  return l.get_ui();
}

QuasiPolynomial interpolate_ehrhart(const PolytopeSpec& spec, const CountOptions& opt) {
  DilationCounter counter(spec, opt);
  const PreparedPolytope& p = counter.prepared();
  if (p.empty) throw ArgumentError("interpolate_ehrhart: polytope is empty");
  QuasiPolynomial q;
  q.period = vertex_period(spec);
  const Eigen::Index d = p.dim();
  for (unsigned long i = 0; i < q.period; ++i) {
    unsigned long start = i == 0 ? q.period : i;
    std::vector<Rational> xs, ys;
    for (Eigen::Index j = 0; j <= d; ++j) {
      Integer n = Integer(start) + Integer(j) * Integer(q.period);
      xs.emplace_back(n);
      ys.emplace_back(counter.count(n));
    }
    // Lagrange interpolation
    RatPoly f;
    for (size_t a = 0; a < xs.size(); ++a) {
      RatPoly basis(Rational(1));
      Rational den = 1;
      for (size_t b = 0; b < xs.size(); ++b) {
        if (a == b) continue;
        basis *= RatPoly(std::vector<Rational>{-xs[b], Rational(1)});
        den *= xs[a] - xs[b];
      }
      if (den == 0) throw InternalError("interpolate_ehrhart: repeated interpolation node");
      f += basis * Rational(ys[a] / den);
    }
    q.constituents.push_back(f);
  }
  return q;
}

}  // namespace barvi
