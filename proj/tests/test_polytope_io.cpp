#include "barvi/polytope.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace barvi;

TEST_CASE("parse the magic square file") {
  PolytopeSpec s = read_polytope_file(oracle::data("magic4x4"), false);
  CHECK(s.rows() == 10);
  CHECK(s.dim() == 16);
  CHECK(s.equality_rows.size() == 10);
  CHECK(s.nonnegative_vars.size() == 16);
  // "1 -1 -1 -1 -1 0 ..." is 1 - x1 - x2 - x3 - x4 = 0
  CHECK(s.b(0) == 1);
  CHECK(s.A(0, 0) == 1);
  CHECK(s.A(0, 4) == 0);
}

TEST_CASE("serialize round trip") {
  for (const char* f : {"magic4x4", "24_cell", "cuww1", "square_nonneg", "flow_k4"}) {
    PolytopeSpec s = read_polytope_file(oracle::data(f), false);
    CHECK(parse_latte(serialize(s)) == s);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    PolytopeSpec s = oracle::random_polytope(rng, 1 + i % 4);
    CHECK(parse_latte(serialize(s)) == s);
  }
}

TEST_CASE("latte parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_latte(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("2 3\n1 0 1\n1 x 0\n") == 3);
  CHECK(line_of("2 3\n1 0 1\n1 0\n") == 3);
  CHECK(line_of("1 3\n1 0 1\nlinearity 1 2\n") == 3);
  CHECK(line_of("1 3\n1 0 1\nnonnegative 1 3\n") == 3);
  CHECK(line_of("1 3\n1 0 1\nfoo 1 1\n") == 3);
  CHECK(line_of("1 3\n1 0 1\n5\n") == 3);
  CHECK(line_of("1 1\n1\n") == 1);
  CHECK(line_of("") == 0);
}

TEST_CASE("cdd input") {
  std::vector<std::string> warn;
  PolytopeSpec s = parse_cdd(read_file(oracle::data("cdd_sample.ine")), &warn);
  CHECK(s.rows() == 4);
  CHECK(s.dim() == 3);
  CHECK(s.b(0) == 2);
  CHECK(s.A(0, 0) == 2);  // "2 -2 4 -1": 2 - 2x + 4y - z >= 0
  CHECK(s.A(0, 1) == -4);
  PolytopeSpec lin = parse_cdd("H-representation\nlinearity 1 1\nbegin\n2 2 integer\n1 -1\n0 1\nend\nincidence\n", &warn);
  CHECK(lin.equality_rows == std::set<Eigen::Index>{0});
  CHECK(warn.size() == 1);
  CHECK_THROWS_AS(parse_cdd("begin\n1 2 rational\n1 1\nend\n"), UnsupportedError);
  CHECK_THROWS_AS(parse_cdd("V-representation\nbegin\n1 2 integer\n1 1\nend\n"), UnsupportedError);
  CHECK_THROWS_AS(parse_cdd("begin\n1 2 integer\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cdd("H-representation\n"), ParseError);
}

TEST_CASE("cost files") {
  IntVector c = parse_cost(read_file(oracle::data("cuww1.cost")));
  REQUIRE(c.size() == 5);
  CHECK(c(0) == 213);
  CHECK(c(4) == 9123);
  CHECK_THROWS_AS(parse_cost("2 2\n1 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cost("1 2\n1\n"), ParseError);
}

TEST_CASE("validate") {
  PolytopeSpec s(IntMatrix(0, 2), IntVector(0));
  CHECK_THROWS_AS(validate(s), ArgumentError);
  PolytopeSpec t = read_polytope_file(oracle::data("square"), false);
  CHECK_NOTHROW(validate(t));
  t.equality_rows.insert(9);
  CHECK_THROWS_AS(validate(t), ArgumentError);
}

TEST_CASE("dilation and interior") {
  PolytopeSpec sq(IntMatrix(4, 2), IntVector(4));
  sq.A << 1, 0, 0, 1, -1, 0, 0, -1;
  sq.b << 1, 1, 0, 0;
  CHECK(oracle::count(sq) == 4);
  CHECK(dilate(dilate(sq, 2), 3) == dilate(sq, 6));
  CHECK(dilate(sq, 1) == sq);
  // the appendix example file is the triangle x, y >= 0, x + y <= 1
  CHECK(oracle::count(read_polytope_file(oracle::data("square"), false)) == 3);
  CHECK(oracle::count(read_polytope_file(oracle::data("square_lin"), false)) == 2);
  CHECK(oracle::count(read_polytope_file(oracle::data("square_nonneg"), false)) == 2);
  CHECK(oracle::count(dilate(sq, 3)) == 16);
  CHECK(oracle::count(interior_transform(sq)) == 0);
  CHECK(oracle::count(interior_transform(dilate(sq, 3))) == 4);
  CHECK_THROWS_AS(dilate(sq, 0), ArgumentError);
  PolytopeSpec cell = read_polytope_file(oracle::data("24_cell"), false);
  CHECK(oracle::count(cell) == 33);
  CHECK(oracle::count(interior_transform(cell)) == 1);
  CHECK_THROWS_AS(interior_transform(read_polytope_file(oracle::data("magic4x4"), false)), UnsupportedError);
}

TEST_CASE("equality elimination is a bijection on lattice points") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    PolytopeSpec s = oracle::random_polytope(rng, 2 + trial % 3);
    if (!s.has_equalities()) continue;
    EqualityElimination e = eliminate_equalities(s);
    auto pts = oracle::points(s);
    if (e.infeasible || e.period != 1) {
      CHECK(pts.empty());
      continue;
    }
    auto lam = oracle::points(e.reduced_spec);
    REQUIRE(lam.size() == pts.size());
    std::set<std::vector<Integer>> a, b;
    for (auto& x : pts) a.insert(std::vector<Integer>(x.data(), x.data() + x.size()));
    for (auto& l : lam) {
      IntVector x = e.lift(l);
      b.insert(std::vector<Integer>(x.data(), x.data() + x.size()));
    }
    CHECK(a == b);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("equality elimination periods") {
  // 2x + 4y = 2 has integral solutions; 2x + 4y = 1 only in the dilation by 2
  PolytopeSpec s(IntMatrix(3, 2), IntVector(3));
  s.A << 2, 4, -1, 0, 0, -1;
  s.b << 1, 0, 0;
  s.equality_rows = {0};
  EqualityElimination e = eliminate_equalities(s);
  CHECK(!e.infeasible);
  CHECK(e.period == 2);
  CHECK(!e.integral_feasible());
  CHECK(oracle::count(dilate(s, 2)) == 1);  // 2x + 4y = 2, x, y >= 0: (1, 0)
  // contradictory equations
  PolytopeSpec t(IntMatrix(2, 2), IntVector(2));
  t.A << 1, 1, 1, 1;
  t.b << 1, 2;
  t.equality_rows = {0, 1};
  CHECK(eliminate_equalities(t).infeasible);
  // the magic square equations have rank 9
  EqualityElimination m = eliminate_equalities(read_polytope_file(oracle::data("magic4x4"), false));
  CHECK(m.null_basis.cols() == 7);
  CHECK(m.period == 1);
}
