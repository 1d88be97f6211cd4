#ifndef BARVI_EXACT_HPP
#define BARVI_EXACT_HPP

#include <gmpxx.h>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 6, AddCost = 150, MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
    ReadCost = 6, AddCost = 400, MulCost = 400
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace barvi {

using Integer = mpz_class;
using Rational = mpq_class;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

// error hierarchy shared by all modules
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };
struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};
struct UnsupportedError : Error { using Error::Error; };
struct InfeasibleError : Error { using Error::Error; };
struct UnboundedError : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}
inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}
inline int sign_of(const Integer& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

inline Integer binomial(const Integer& n, unsigned long k) {
  // C(n,k) for any integer n (falling factorial / k!)
  if (n >= 0 && n.fits_ulong_p()) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k);
    return r;
  }
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

template <class Derived>
Integer content(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

// divide by the gcd of the entries; zero stays zero
inline IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) mpz_divexact(r(i).get_mpz_t(), v(i).get_mpz_t(), g.get_mpz_t());
  return r;
}

inline bool is_zero(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <class A, class B>
typename A::Scalar dot(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  typename A::Scalar s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

inline RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i);
  return r;
}
inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

// lcm of denominators; v * result is integral
inline Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(v(i).get_den()));
  return l;
}
inline IntVector scale_to_integer(const RatVector& v, const Integer& den) {
  IntVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational q = v(i) * den;
    if (q.get_den() != 1) throw InternalError("scale_to_integer: not integral");
    r(i) = q.get_num();
  }
  return r;
}

// Bareiss fraction-free elimination
template <class Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? Scalar(a(n - 1, n - 1)) : Scalar(-a(n - 1, n - 1));
}

// rank and row echelon data over the rationals (works for integer input)
struct EchelonForm {
  RatMatrix r;                      // reduced row echelon form
  std::vector<Eigen::Index> pivots; // pivot column per nonzero row
  std::vector<Eigen::Index> rows;   // original index of each independent row, in order found
};

EchelonForm echelon(const RatMatrix& m);
Eigen::Index rank(const IntMatrix& m);
Eigen::Index rank(const RatMatrix& m);

// indices of a maximal independent subset of rows, greedy in row order
std::vector<Eigen::Index> independent_rows(const IntMatrix& m);

// exact inverse; throws on singular
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);
// adj(m) = det(m) * m^{-1}, integral
IntMatrix adjugate(const IntMatrix& m);
// fraction-free Gauss-Jordan: returns det(m) and writes adj(m); throws on singular
Integer adjugate_det(const IntMatrix& m, IntMatrix& adj);
// inverse of a matrix with determinant +-1
IntMatrix unimodular_inverse(const IntMatrix& m);
// solve m x = b, m square nonsingular
RatVector solve(const IntMatrix& m, const RatVector& b);
// integer basis of the rational kernel {x : m x = 0}, one vector per column
IntMatrix kernel_basis(const IntMatrix& m);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const IntVector& v, const char* sep = " ");
std::string to_string(const RatVector& v, const char* sep = " ");

}  // namespace barvi

#endif
