#include "barvi/lp.hpp"

#include <vector>

namespace barvi {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> t;  // rows 0..m-1 constraints, row m objective (reduced costs)
  std::vector<size_t> basis;
  size_t cols = 0;  // number of variables; column `cols` holds the right-hand side

  void pivot(size_t r, size_t c) {
    Rational inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // maximize; objective row holds z_j - c_j style entries: entering when obj[j] < 0
  // returns false when unbounded
  bool run(const std::vector<char>& allowed) {
    const size_t m = basis.size();
    for (;;) {
      size_t enter = cols;
      for (size_t j = 0; j < cols; ++j)
        if (allowed[j] && t[m][j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      size_t leave = m;
      Rational best;
      for (size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult lp_maximize(const IntMatrix& A, const RatVector& b, const RatVector& c) {
  const size_t m = static_cast<size_t>(A.rows()), d = static_cast<size_t>(A.cols());
  if (b.size() != A.rows() || c.size() != A.cols()) throw DimensionError("lp_maximize: size mismatch");
  // columns: x+ (d), x- (d), slack (m), artificial (m)
  const size_t nx = 2 * d, ns = m, na = m;
  Tableau T;
  T.cols = nx + ns + na;
  T.t.assign(m + 1, std::vector<Rational>(T.cols + 1, Rational(0)));
  T.basis.assign(m, 0);
  for (size_t i = 0; i < m; ++i) {
    int s = b(i) < 0 ? -1 : 1;
    for (size_t j = 0; j < d; ++j) {
      T.t[i][j] = A(i, j) * s;
      T.t[i][d + j] = -A(i, j) * s;
    }
    T.t[i][nx + i] = s;
    T.t[i][nx + ns + i] = 1;
    T.t[i][T.cols] = b(i) * s;
    T.basis[i] = nx + ns + i;
  }
  // phase one: maximize -sum(artificials)
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= T.cols; ++j)
      if (j < nx + ns || j == T.cols) T.t[m][j] -= T.t[i][j];
  std::vector<char> allowed(T.cols, 1);
  T.run(allowed);
  LPResult res;
  if (T.t[m][T.cols] != 0) {
    res.status = LPStatus::infeasible;
    return res;
  }
  // drive artificials out of the basis
  for (size_t i = 0; i < m; ++i) {
    if (T.basis[i] < nx + ns) continue;
    for (size_t j = 0; j < nx + ns; ++j)
      if (T.t[i][j] != 0) {
        T.pivot(i, j);
        break;
      }
  }
  for (size_t j = nx + ns; j < T.cols; ++j) allowed[j] = 0;
  // phase two objective
  for (auto& v : T.t[m]) v = 0;
  for (size_t j = 0; j < d; ++j) {
    T.t[m][j] = -c(j);
    T.t[m][d + j] = c(j);
  }
  for (size_t i = 0; i < m; ++i) {
    size_t bj = T.basis[i];
    if (T.t[m][bj] == 0) continue;
    Rational f = T.t[m][bj];
    for (size_t j = 0; j <= T.cols; ++j) T.t[m][j] -= f * T.t[i][j];
  }
  if (!T.run(allowed)) {
    res.status = LPStatus::unbounded;
    return res;
  }
  res.status = LPStatus::optimal;
  res.value = T.t[m][T.cols];
  res.x = RatVector::Zero(static_cast<Eigen::Index>(d));
  for (size_t i = 0; i < m; ++i) {
    size_t bj = T.basis[i];
    if (bj < d)
      res.x(bj) += T.t[i][T.cols];
    else if (bj < nx)
      res.x(bj - d) -= T.t[i][T.cols];
  }
  return res;
}

LPResult lp_maximize(const IntMatrix& A, const IntVector& b, const IntVector& c) {
  return lp_maximize(A, to_rational(b), to_rational(c));
}

}  // namespace barvi
