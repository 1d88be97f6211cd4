#include "barvi/decomposition.hpp"
#include "barvi/ehrhart.hpp"
#include "barvi/geometry.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace barvi;

namespace {

// 1 inside the open cone, 0 outside, nullopt on a boundary hyperplane
std::optional<int> open_indicator(const IntMatrix& rays, const IntVector& p) {
  RatVector x = solve(rays, to_rational(p));
  int in = 1;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) return std::nullopt;
    if (x(i) < 0) in = 0;
  }
  return in;
}

Cone random_simplicial(std::mt19937_64& rng, Eigen::Index d, int lim) {
  std::uniform_int_distribution<int> u(-lim, lim);
  while (true) {
    IntMatrix r(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) r(i, j) = u(rng);
    bool prim = true;
    for (Eigen::Index j = 0; j < d; ++j) prim = prim && content(r.col(j)) == 1;
    if (prim && det(r) != 0) return Cone(RatVector::Zero(d), r);
  }
}

std::vector<Rational> probe_point(Eigen::Index d, int salt) {
  static const Rational base[] = {Rational(2, 3), Rational(5, 7), Rational(11, 13), Rational(3, 2), Rational(7, 5)};
  std::vector<Rational> z;
  for (Eigen::Index i = 0; i < d; ++i) z.push_back(base[(i + salt) % 5]);
  return z;
}

bool safe(const ConeTermSum& s, const std::vector<Rational>& z) {
  for (auto& t : s.terms)
    for (auto& r : t.rays)
      if (oracle::monomial(z, r) == 1) return false;
  return true;
}

}  // namespace

TEST_CASE("signed unimodular decomposition agrees with the cone on generic points") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> big(-1000000, 1000000);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index d = 2 + trial % 3;
    Cone k = random_simplicial(rng, d, trial % 2 ? 6 : 12);
    DecompositionStats st;
    DecompositionOptions opt;
    opt.force_enumeration = trial % 4 == 0;
    SignedConeList pieces = decompose_simplicial(k, opt, &st);
    CHECK(st.unimodular == pieces.size());
    for (auto& c : pieces) {
      CHECK(abs(det(c.rays)) == 1);
      CHECK((c.sign == 1 || c.sign == -1));
    }
    for (int sample = 0; sample < 30; ++sample) {
      IntVector p(d);
      for (Eigen::Index i = 0; i < d; ++i) p(i) = big(rng);
      auto want = open_indicator(k.rays, p);
      if (!want) continue;
      int got = 0;
      bool boundary = false;
      for (auto& c : pieces) {
        auto in = open_indicator(c.rays, p);
        if (!in) {
          boundary = true;
          break;
        }
        got += c.sign * *in;
      }
      if (!boundary) CHECK(got == *want);
    }
  }
}

TEST_CASE("parallelepiped point") {
  IntMatrix r(2, 2);
  r << 1, 0, 1, 1;
  RatVector apex(2);
  apex << Rational(1, 2), Rational(-1, 3);
  IntVector p = parallelepiped_point(Cone(apex, r));
  RatVector t = solve(r, to_rational(p) - apex);
  for (Eigen::Index i = 0; i < 2; ++i) {
    CHECK(t(i) >= 0);
    CHECK(t(i) < 1);
  }
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> u(-20, 20), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = IntMatrix::Identity(3, 3);
    for (int k = 0; k < 4; ++k) {  // random unimodular matrix by row operations
      Eigen::Index i = k % 3, j = (k + 1 + trial) % 3;
      if (i == j) continue;
      m.row(i) += m.row(j) * Integer(u(rng) % 3);
    }
    RatVector a(3);
    for (Eigen::Index i = 0; i < 3; ++i) a(i) = Rational(u(rng), den(rng));
    IntVector q = parallelepiped_point(Cone(a, m));
    RatVector s = solve(m, to_rational(q) - a);
    for (Eigen::Index i = 0; i < 3; ++i) CHECK((s(i) >= 0 && s(i) < 1));
  }
}

TEST_CASE("Brion sum evaluated at rational points") {
  std::mt19937_64 rng(43);
  int done = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index d = 1 + trial % 3;
    PolytopeSpec s = oracle::random_polytope(rng, d, false);
    PreparedPolytope p = prepare(s);
    if (p.empty || p.dim() < d) continue;
    DecompositionOptions opt;
    opt.force_enumeration = trial % 3 == 0;
    ConeTermSum terms = decompose_polytope(materialize_nonnegativity(s), opt);
    validate(terms);
    auto pts = oracle::points(s);
    for (int salt = 0; salt < 2; ++salt) {
      auto z = probe_point(d, salt + trial);
      if (!safe(terms, z)) continue;
      CHECK(oracle::evaluate(terms, z) == oracle::evaluate_points(pts, z));
    }
    ++done;
  }
  CHECK(done > 20);
}

TEST_CASE("Brion sum of the quadrilateral") {
  PolytopeSpec q = read_polytope_file(oracle::data("quadrilateral"), false);
  ConeTermSum t = decompose_polytope(q);
  auto z = probe_point(2, 0);
  REQUIRE(safe(t, z));
  CHECK(oracle::evaluate(t, z) == oracle::evaluate_points(oracle::points(q), z));
  CHECK(oracle::points(q).size() == 16);
}

TEST_CASE("dilated assembly matches brute force") {
  PolytopeSpec q = read_polytope_file(oracle::data("cdd_sample.ine"), true);
  PreparedPolytope p = prepare(q);
  REQUIRE(!p.empty);
  PolytopeDecomposition dec = decompose_vertex_cones(p.reduced(), p.vertices);
  for (int n = 1; n <= 4; ++n) {
    ConeTermSum t = assemble_terms(dec, n);
    auto pts = oracle::points(dilate(p.reduced(), n));
    auto z = probe_point(p.dim(), n);
    if (!safe(t, z)) continue;
    CHECK(oracle::evaluate(t, z) == oracle::evaluate_points(pts, z));
  }
}
