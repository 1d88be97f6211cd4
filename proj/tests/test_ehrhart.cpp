#include "barvi/ehrhart.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace barvi;

TEST_CASE("counts match brute force on random polytopes") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    PolytopeSpec s = oracle::random_polytope(rng, 1 + trial % 4);
    Integer want = oracle::count(s);
    CountOptions opt;
    opt.force_enumeration = trial % 5 == 0;
    CHECK(count(s, opt) == want);
  }
}

TEST_CASE("counts do not depend on the seed") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    PolytopeSpec s = oracle::random_polytope(rng, 2 + trial % 3);
    CountOptions a, b;
    a.seed = 1;
    b.seed = 0xdeadbeef;
    CHECK(count(s, a) == count(s, b));
  }
  PolytopeSpec m = read_polytope_file(oracle::data("magic4x4"), false);
  CountOptions a, b;
  b.seed = 12345;
  CHECK(count_dilation(m, 12, a) == count_dilation(m, 12, b));
}

TEST_CASE("count and homogenized count agree") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    PolytopeSpec s = oracle::random_polytope(rng, 1 + trial % 3);
    CHECK(count(s) == count_homogenized(s));
  }
  for (const char* f : {"24_cell", "magic4x4", "quadrilateral", "flow_k4", "table_2x3"}) {
    PolytopeSpec s = read_polytope_file(oracle::data(f), false);
    CHECK(count(s) == count_homogenized(s));
  }
}

TEST_CASE("one decomposition serves every dilation") {
  PolytopeSpec m = read_polytope_file(oracle::data("magic4x4"), false);
  DilationCounter dc(m);
  CHECK(dc.count(1) == 8);
  CHECK(dc.count(12) == 225351);
  CHECK(dc.count(2) == 48);
  CHECK(dc.count(0) == 1);
}

TEST_CASE("small known counts") {
  CHECK(count(read_polytope_file(oracle::data("quadrilateral"), false)) == 16);
  CHECK(count(read_polytope_file(oracle::data("24_cell"), false)) == 33);
  CHECK(count(interior_transform(read_polytope_file(oracle::data("24_cell"), false))) == 1);
  CHECK(count(read_polytope_file(oracle::data("table_2x3"), false)) == 19);
  CHECK(count(read_polytope_file(oracle::data("flow_k4"), false)) == 223);
  PolytopeSpec cdd = read_polytope_file(oracle::data("cdd_sample.ine"), true);
  CHECK(count(cdd) == oracle::count(cdd));
}

TEST_CASE("empty or lower-dimensional or unbounded inputs") {
  PolytopeSpec empty(IntMatrix(2, 1), IntVector(2));
  empty.A << 1, -1;
  empty.b << 0, -1;
  CHECK(count(empty) == 0);
  CHECK(prepare(empty).empty);
  // hidden equation: x <= 0 and x >= 0 in the plane with 0 <= y <= 3
  PolytopeSpec flat(IntMatrix(4, 2), IntVector(4));
  flat.A << 1, 0, -1, 0, 0, 1, 0, -1;
  flat.b << 0, 0, 3, 0;
  CHECK(count(flat) == 4);
  CHECK(prepare(flat).dim() == 1);
  PolytopeSpec half(IntMatrix(1, 2), IntVector(1));
  half.A << 1, 0;
  half.b << 0;
  CHECK_THROWS_AS(count(half), UnboundedError);
  // no lattice point although nonempty: 2x = 1
  PolytopeSpec odd(IntMatrix(1, 1), IntVector(1));
  odd.A << 2;
  odd.b << 1;
  odd.equality_rows = {0};
  CHECK(count(odd) == 0);
  CHECK(count_dilation(odd, 2) == 1);
}

TEST_CASE("vertex period") {
  CHECK(vertex_period(read_polytope_file(oracle::data("quadrilateral"), false)) == 1);
  PolytopeSpec half(IntMatrix(2, 1), IntVector(2));
  half.A << 2, -1;
  half.b << 1, 0;  // 0 <= x <= 1/2
  CHECK(vertex_period(half) == 2);
  CHECK(vertex_period(read_polytope_file(oracle::data("cuboctahedron"), false)) == 2);
}

TEST_CASE("quasi-polynomials predict fresh dilations") {
  std::mt19937_64 rng(64);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    const Eigen::Index d = 1 + trial % 3;
    PolytopeSpec s = oracle::random_polytope(rng, d, false);
    if (prepare(s).empty || vertex_period(s) > (d == 3 ? 2u : 6u)) continue;
    QuasiPolynomial q = interpolate_ehrhart(s);
    const unsigned long p = q.period;
    // dilations past the (d+1) p interpolation points
    const unsigned long first = (d + 1) * p + 1;
    for (unsigned long n = first; n < first + 2 * p; ++n)
      CHECK(q.eval(Integer(n)) == Rational(oracle::count(dilate(s, n))));
    ++checked;
  }
  CHECK(checked >= 8);
  PolytopeSpec half(IntMatrix(2, 1), IntVector(2));
  half.A << 2, -1;
  half.b << 1, 0;
  QuasiPolynomial q = interpolate_ehrhart(half);
  CHECK(q.period == 2);
  for (int n = 1; n <= 9; ++n) CHECK(q.eval(Integer(n)) == n / 2 + 1);
}

TEST_CASE("24-cell Ehrhart polynomial") {
  QuasiPolynomial q = interpolate_ehrhart(read_polytope_file(oracle::data("24_cell"), false));
  REQUIRE(q.period == 1);
  RatPoly want(std::vector<Rational>{1, Rational(16, 3), 8, Rational(32, 3), 8});
  CHECK(q.constituents[0] == want);
}
