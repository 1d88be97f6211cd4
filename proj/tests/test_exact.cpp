#include "barvi/exact.hpp"
#include "barvi/polynomial.hpp"
#include "barvi/polytope.hpp"

#include <doctest.h>

#include <random>

using namespace barvi;

namespace {

// cofactor expansion, fine for n <= 5
Integer det_cofactor(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer s = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    s += (j % 2 ? -1 : 1) * m(0, j) * det_cofactor(minor);
  }
  return s;
}

IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c, int lim) {
  std::uniform_int_distribution<int> u(-lim, lim);
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("det agrees with cofactor expansion") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, trial % 3 == 0 ? 1 : 9);
    CHECK(det(m) == det_cofactor(m));
  }
  IntMatrix z(2, 2);
  z << 1, 2, 2, 4;
  CHECK(det(z) == 0);
  CHECK(det(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("det of a large-entry matrix") {
  IntMatrix m(2, 2);
  m << Integer("123456789012345678901234567890"), 1, Integer("98765432109876543210"), 1;
  CHECK(det(m) == Integer("123456789012345678901234567890") - Integer("98765432109876543210"));
}

TEST_CASE("adjugate and inverse") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, 7);
    Integer d = det(m);
    if (d == 0) continue;
    IntMatrix adj;
    CHECK(adjugate_det(m, adj) == d);
    IntMatrix prod = m * adj;
    CHECK(prod == IntMatrix::Identity(n, n) * d);
    CHECK(to_rational(m) * inverse(m) == RatMatrix::Identity(n, n));
  }
  IntMatrix s(2, 2);
  s << 1, 2, 2, 4;
  CHECK_THROWS(inverse(s));
}

TEST_CASE("kernel basis and rank") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 3, 4, 5);
    IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == 4 - rank(m));
    CHECK((m * k).isZero());
    if (k.cols() > 0) CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("column hermite form") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 5, 9);
    if (rank(a) < 2) continue;
    IntMatrix R, U;
    column_hermite(a, R, U);
    CHECK(abs(det(U)) == 1);
    IntMatrix au = a * U;
    CHECK(au.leftCols(2) == R);
    CHECK(au.rightCols(3).isZero());
    CHECK(R(0, 1) == 0);
    CHECK(R(0, 0) > 0);
    CHECK(R(1, 1) > 0);
  }
}

TEST_CASE("polynomial arithmetic") {
  IntPoly a(std::vector<Integer>{1, 1});  // 1 + t
  IntPoly b(std::vector<Integer>{-1, 0, 1});
  CHECK(exact_divide(b, a) == IntPoly(std::vector<Integer>{-1, 1}));
  CHECK_THROWS(exact_divide(b + IntPoly(Integer(1)), a));
  CHECK(divides(a, b));
  CHECK(a * a == IntPoly(std::vector<Integer>{1, 2, 1}));
  CHECK((a - a).is_zero());
  CHECK(a.eval(Integer(3)) == 4);
  auto [q, r] = divmod(to_rational(b), to_rational(IntPoly(std::vector<Integer>{0, 2})));
  CHECK(q == RatPoly(std::vector<Rational>{0, Rational(1, 2)}));
  CHECK(r == RatPoly(Rational(-1)));
  RatPoly g = gcd(to_rational(b), to_rational(a * a));
  CHECK(g == to_rational(a));
}

TEST_CASE("t^n - 1 is the product of cyclotomic polynomials") {
  for (unsigned n = 1; n <= 30; ++n) {
    IntPoly p(Integer(1));
    for (unsigned k = 1; k <= n; ++k)
      if (n % k == 0) p *= cyclotomic(k);
    CHECK(p == -one_minus_power(n));
  }
}

TEST_CASE("series division") {
  // 1/(1-t)^2 = sum (k+1) t^k
  IntPoly q = one_minus_power(1) * one_minus_power(1);
  auto c = poly_divide_series(IntPoly(Integer(1)), q, 10);
  REQUIRE(c.size() == 11);
  for (size_t k = 0; k <= 10; ++k) CHECK(c[k] == Integer(k + 1));
  // product check on a random pair
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> pv, qv;
    for (int i = 0; i < 4; ++i) pv.push_back(u(rng));
    qv.push_back(1 + (u(rng) + 5) % 3);
    for (int i = 0; i < 3; ++i) qv.push_back(u(rng));
    RatPoly p(pv), qq(qv);
    auto s = poly_divide_series(p, qq, 12);
    RatPoly sp(s);
    CHECK((sp * qq).truncated(13) == p.truncated(13));
  }
}

TEST_CASE("binomial series") {
  IntPoly b = binomial_series(Integer(-2), 5);  // 1/(1+x)^2
  for (size_t k = 0; k <= 5; ++k) CHECK(b[k] == Integer((k % 2 ? -1 : 1) * static_cast<long>(k + 1)));
  CHECK(binomial(Integer(-3), 2) == 6);
  CHECK(binomial(Integer(10), 3) == 120);
}

TEST_CASE("rational function normalization") {
  RatPoly t1(std::vector<Rational>{-1, 1});  // t - 1
  RatPoly tp1(std::vector<Rational>{1, 1});
  UnivariateRat r(t1 * tp1 * Rational(2), t1 * t1 * Rational(-4));
  UnivariateRat n = rat_normalize(r);
  // (t+1) / (-2 (t-1)) -> (-t-1) / (2t - 2) with primitive parts
  CHECK(n.denominator().lead() > 0);
  CHECK(n.numerator() * r.denominator() == n.denominator() * r.numerator());
  CHECK(n.denominator().degree() == 1);
  CHECK_THROWS(UnivariateRat(t1, RatPoly()));
}

TEST_CASE("floor and ceil of rationals") {
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(ceil_of(Rational(6, 3)) == 2);
}
