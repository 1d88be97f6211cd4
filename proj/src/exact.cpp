#include "barvi/exact.hpp"

#include <sstream>

namespace barvi {

EchelonForm echelon(const RatMatrix& m) {
  EchelonForm e;
  e.r = m;
  RatMatrix& a = e.r;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> order(rows);
  for (Eigen::Index i = 0; i < rows; ++i) order[i] = i;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      std::swap(order[p], order[r]);
    }
    Rational inv = 1 / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rows.assign(order.begin(), order.begin() + r);
  return e;
}

Eigen::Index rank(const RatMatrix& m) { return static_cast<Eigen::Index>(echelon(m).pivots.size()); }
Eigen::Index rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<Eigen::Index> independent_rows(const IntMatrix& m) {
  // incremental: keep a reduced basis of accepted rows
  std::vector<Eigen::Index> keep;
  std::vector<RatVector> basis;
  std::vector<Eigen::Index> piv;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    RatVector v = to_rational(IntVector(m.row(i).transpose()));
    for (size_t k = 0; k < basis.size(); ++k) {
      if (v(piv[k]) != 0) {
        Rational f = v(piv[k]);
        v -= basis[k] * f;
      }
    }
    Eigen::Index p = 0;
    while (p < v.size() && v(p) == 0) ++p;
    if (p == v.size()) continue;
    Rational inv = 1 / v(p);
    v *= inv;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (basis[k](p) != 0) {
        Rational f = basis[k](p);
        basis[k] -= v * f;
      }
    }
    basis.push_back(v);
    piv.push_back(p);
    keep.push_back(i);
  }
  return keep;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const Eigen::Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  EchelonForm e = echelon(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1)
    throw ArgumentError("inverse: singular matrix");
  return e.r.rightCols(n);
}
RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

Integer adjugate_det(const IntMatrix& a, IntMatrix& adj) {
  if (a.rows() != a.cols()) throw DimensionError("adjugate: matrix is not square");
  const Eigen::Index n = a.rows();
  IntMatrix M(n, 2 * n);
  M.leftCols(n) = a;
  M.rightCols(n) = IntMatrix::Identity(n, n);
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) throw ArgumentError("adjugate: singular matrix");
      M.row(k).swap(M.row(p));
      sign = -sign;
    }
    const Integer piv = M(k, k);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer f = M(i, k);
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Integer v = piv * M(i, j) - f * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      M(i, k) = 0;
    }
    prev = piv;
  }
  // rows now read (D I | D a^{-1}) with D = det of the row-permuted matrix
  adj = M.rightCols(n);
  if (sign < 0) {
    adj = -adj;
    return -prev;
  }
  return prev;
}

IntMatrix adjugate(const IntMatrix& m) {
  IntMatrix adj;
  adjugate_det(m, adj);
  return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  IntMatrix adj;
  Integer d = adjugate_det(m, adj);
  if (d == 1) return adj;
  if (d == -1) return -adj;
  throw ArgumentError("unimodular_inverse: determinant is not +-1");
}

RatVector solve(const IntMatrix& m, const RatVector& b) {
  return inverse(m) * b;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const Eigen::Index cols = m.cols();
  EchelonForm e = echelon(to_rational(m));
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  IntMatrix k(cols, cols - static_cast<Eigen::Index>(e.pivots.size()));
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v = RatVector::Zero(cols);
    v(f) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.r(r, f);
    k.col(col++) = primitive(scale_to_integer(v, common_denominator(v)));
  }
  return k;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const IntVector& v, const char* sep) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? sep : "") << v(i).get_str();
  return os.str();
}
std::string to_string(const RatVector& v, const char* sep) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? sep : "") << v(i).get_str();
  return os.str();
}

}  // namespace barvi
