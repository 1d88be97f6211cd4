#include "barvi/lattice.hpp"
#include "barvi/polytope.hpp"

namespace barvi {

void column_hermite(const IntMatrix& A, IntMatrix& R, IntMatrix& U) {
  const Eigen::Index r = A.rows(), n = A.cols();
  IntMatrix H = A;
  U = IntMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (H(i, j) == 0) continue;
      Integer a = H(i, i), b = H(i, j), g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ap = a / g, bp = b / g;
      IntVector hi = H.col(i), hj = H.col(j);
      H.col(i) = hi * x + hj * y;
      H.col(j) = hj * ap - hi * bp;
      IntVector ui = U.col(i), uj = U.col(j);
      U.col(i) = ui * x + uj * y;
      U.col(j) = uj * ap - ui * bp;
    }
    if (H(i, i) == 0) throw ArgumentError("column_hermite: rows are not independent");
    if (H(i, i) < 0) {
      H.col(i) = -H.col(i);
      U.col(i) = -U.col(i);
    }
    // reduce entries left of the diagonal into [0, H(i,i))
    for (Eigen::Index j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, i).get_mpz_t());
      if (q == 0) continue;
      H.col(j) -= H.col(i) * q;
      U.col(j) -= U.col(i) * q;
    }
  }
  R = H.leftCols(r);
}

IntVector EqualityElimination::lift(const IntVector& lambda) const {
  if (period != 1) throw ArgumentError("lift: equations have no integral solution");
  IntVector x = null_basis * lambda;
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) += x0(i).get_num();
  return x;
}

EqualityElimination eliminate_equalities(const PolytopeSpec& input) {
  PolytopeSpec spec = materialize_nonnegativity(input);
  const Eigen::Index d = spec.dim();
  std::vector<Eigen::Index> eq(spec.equality_rows.begin(), spec.equality_rows.end());
  std::vector<Eigen::Index> ineq;
  for (Eigen::Index i = 0; i < spec.rows(); ++i)
    if (!spec.equality_rows.count(i)) ineq.push_back(i);

  EqualityElimination e;
  IntMatrix Aeq(static_cast<Eigen::Index>(eq.size()), d);
  IntVector aeq(static_cast<Eigen::Index>(eq.size()));
  for (size_t k = 0; k < eq.size(); ++k) {
    Aeq.row(k) = spec.A.row(eq[k]);
    aeq(k) = spec.b(eq[k]);
  }

  // drop dependent rows; a dependent row that disagrees on the right-hand side is infeasible
  IntMatrix aug(Aeq.rows(), d + 1);
  aug << Aeq, aeq;
  auto keep = independent_rows(Aeq);
  if (rank(aug) > static_cast<Eigen::Index>(keep.size())) e.infeasible = true;
  const Eigen::Index r = static_cast<Eigen::Index>(keep.size());
  IntMatrix A1(r, d);
  IntVector a1(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    A1.row(k) = Aeq.row(keep[k]);
    a1(k) = aeq(keep[k]);
  }

  if (r == 0) {
    e.U = IntMatrix::Identity(d, d);
    e.R = IntMatrix(0, 0);
  } else {
    column_hermite(A1, e.R, e.U);
  }
  // forward substitution R y = a
  RatVector y(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    Rational s = a1(i);
    for (Eigen::Index j = 0; j < i; ++j) s -= e.R(i, j) * y(j);
    y(i) = s / e.R(i, i);
  }
  e.period = 1;
  for (Eigen::Index i = 0; i < r; ++i) e.period = lcm(e.period, Integer(y(i).get_den()));
  e.x0 = to_rational(IntMatrix(e.U.leftCols(r))) * y;
  IntMatrix G = e.U.rightCols(d - r);
  if (G.cols() > 1 && r > 0) lll_reduce_columns(G, nullptr);
  e.null_basis = G;
  // move x0 close to the origin along the lattice, x0 -= G round((G^T G)^{-1} G^T x0)
  if (G.cols() > 0 && r > 0) {
    RatMatrix Gr = to_rational(G);
    RatVector t = solve(IntMatrix(G.transpose() * G), RatVector(Gr.transpose() * e.x0));
    IntVector k(t.size());
    for (Eigen::Index i = 0; i < t.size(); ++i) k(i) = floor_of(t(i) + Rational(1, 2));
    e.x0 -= to_rational(IntVector(G * k));
  }

  // reduced system (B G) lambda <= b - B x0, scaled to integers
  const Eigen::Index m = static_cast<Eigen::Index>(ineq.size());
  IntMatrix C(m, G.cols());
  RatVector c(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    IntVector row = spec.A.row(ineq[k]).transpose();
    C.row(k) = (row.transpose() * G);
    Rational s = spec.b(ineq[k]);
    for (Eigen::Index j = 0; j < d; ++j) s -= row(j) * e.x0(j);
    c(k) = s;
  }
  Integer q = common_denominator(c);
  std::vector<Eigen::Index> live;
  for (Eigen::Index k = 0; k < m; ++k) {
    if (is_zero(IntVector(C.row(k).transpose()))) {
      if (c(k) < 0) e.infeasible = true;
      continue;
    }
    live.push_back(k);
  }
  PolytopeSpec red;
  red.A = IntMatrix(static_cast<Eigen::Index>(live.size()), G.cols());
  red.b = IntVector(static_cast<Eigen::Index>(live.size()));
  for (size_t k = 0; k < live.size(); ++k) {
    red.A.row(k) = C.row(live[k]) * q;
    red.b(k) = Rational(c(live[k]) * q).get_num();
  }
  e.reduced_spec = red;
  return e;
}

}  // namespace barvi
