#include "barvi/decomposition.hpp"
#include "barvi/ehrhart.hpp"
#include "barvi/specialization.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace barvi;

namespace {

ConeTermSum segment_terms(long n) {
  // [0, n]: 1/(1 - z) + z^n/(1 - z^-1)
  ConeTermSum s;
  s.dim = 1;
  IntVector u0(1), un(1), up(1), dn(1);
  u0 << 0;
  un << n;
  up << 1;
  dn << -1;
  s.add(ConeTerm{1, u0, {up}});
  s.add(ConeTerm{1, un, {dn}});
  return s;
}

}  // namespace

TEST_CASE("residue count of a segment") {
  for (long n : {0L, 1L, 7L, 1000000L}) CHECK(count_terms(segment_terms(n), 0) == n + 1);
}

TEST_CASE("generic direction avoids every ray") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    PolytopeSpec s = oracle::random_polytope(rng, 2 + trial % 3, false);
    PreparedPolytope p = prepare(s);
    if (p.empty || p.dim() < s.dim()) continue;
    ConeTermSum t = decompose_polytope(materialize_nonnegativity(s));
    for (uint64_t seed : {0ull, 99ull}) {
      GenericDirection g = choose_generic_direction(t, seed);
      for (auto& term : t.terms)
        for (auto& r : term.rays) CHECK(dot(g.lambda, r) != 0);
      UnivariateTermSum u = substitute_direction(t, g);
      CHECK(u.size() == t.size());
      CHECK(count_via_residue(u) == oracle::count(s));
    }
  }
}

TEST_CASE("series of the unit square and its dilations") {
  PolytopeSpec sq(IntMatrix(4, 2), IntVector(4));
  sq.A << 1, 0, 0, 1, -1, 0, 0, -1;
  sq.b << 1, 1, 0, 0;
  SeriesRational r = ehrhart_series(sq);
  // (1 + t) / (1 - t)^3
  IntPoly num(std::vector<Integer>{1, 1});
  IntPoly den = one_minus_power(1) * one_minus_power(1) * one_minus_power(1);
  CHECK(equivalent(r, num, den));
  auto c = taylor_expand(r, 6);
  for (size_t k = 0; k <= 6; ++k) CHECK(c[k] == Integer((k + 1) * (k + 1)));
  // t -> t^2 keeps only even dilations
  auto c2 = taylor_expand(r.compose_power(2), 6);
  CHECK(c2[1] == 0);
  CHECK(c2[4] == 9);
}

TEST_CASE("taylor expansion matches brute-force dilation counts") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index d = 1 + trial % 3;
    PolytopeSpec s = oracle::random_polytope(rng, d, trial % 2 == 0);
    SeriesRational r = ehrhart_series(s);
    auto c = taylor_expand(r, 3);
    CHECK(c[0] == (oracle::count(s) == 0 && prepare(s).empty ? 0 : 1));
    for (int n = 1; n <= 3; ++n) CHECK(c[n] == oracle::count(dilate(s, n)));
  }
}

TEST_CASE("simplified series is the same function") {
  SeriesRational m = ehrhart_series(read_polytope_file(oracle::data("magic4x4"), false));
  SeriesRational s = simplify_series(m);
  CHECK(equivalent(m, s));
  CHECK(taylor_expand(m, 12) == taylor_expand(s, 12));
  CHECK(s.factors.size() <= m.factors.size());
}

TEST_CASE("homogenized taylor expansion from the terms") {
  PolytopeSpec q = read_polytope_file(oracle::data("quadrilateral"), false);
  ConeTermSum h = homogenized_decompose(q);
  auto c = taylor_expand(h, 3);
  for (int n = 0; n <= 3; ++n) CHECK(c[n] == oracle::count(dilate(q, n == 0 ? 1 : n)) * (n > 0) + (n == 0));
}
