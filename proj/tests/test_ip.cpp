#include "barvi/decomposition.hpp"
#include "barvi/ehrhart.hpp"
#include "barvi/ip.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace barvi;

namespace {

IntVector random_cost(std::mt19937_64& rng, Eigen::Index d) {
  std::uniform_int_distribution<int> u(-3, 3);
  IntVector c(d);
  do {
    for (Eigen::Index j = 0; j < d; ++j) c(j) = u(rng);
  } while (c.isZero());
  return c;
}

void check_against_oracle(const OptimizationProblem& p, const OptResult& r) {
  const IntVector c = p.sense == Sense::maximize ? p.cost : IntVector(-p.cost);
  auto want = oracle::optimum(p.spec, c);
  REQUIRE(want);
  const Integer v = p.sense == Sense::maximize ? want->first : Integer(-want->first);
  CHECK(r.optimal_value == v);
  if (r.optimal_point) {
    CHECK(oracle::satisfies(p.spec, *r.optimal_point));
    CHECK(dot(p.cost, *r.optimal_point) == v);
  }
  if (r.optimal_count != 0) CHECK(r.optimal_count == want->second);
}

PolytopeSpec unit_square() {
  PolytopeSpec sq(IntMatrix(4, 2), IntVector(4));
  sq.A << 1, 0, 0, 1, -1, 0, 0, -1;
  sq.b << 1, 1, 0, 0;
  return sq;
}

}  // namespace

TEST_CASE("leading term of a segment") {
  for (long n : {0L, 3L, 250L}) {
    ConeTermSum s;
    s.dim = 1;
    IntVector u0(1), un(1), up(1), dn(1), c(1);
    u0 << 0;
    un << n;
    up << 1;
    dn << -1;
    c << 1;
    s.add(ConeTerm{1, u0, {up}});
    s.add(ConeTerm{1, un, {dn}});
    LeadingTermCertificate cert = lasserre_leading_term(s, c);
    CHECK(cert.conclusive());
    CHECK(cert.M == n);
    CHECK(cert.terms[0].n == 1);
    CHECK(cert.terms[1].n == 0);
  }
}

TEST_CASE("a conclusive leading term is the optimum") {
  std::mt19937_64 rng(71);
  int conclusive = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index d = 1 + trial % 3;
    PolytopeSpec s = oracle::random_polytope(rng, d, false);
    PreparedPolytope p = prepare(s);
    if (p.empty || p.dim() < d) continue;
    ConeTermSum t = decompose_polytope(materialize_nonnegativity(s));
    IntVector c = random_cost(rng, d);
    bool generic = true;
    for (auto& term : t.terms)
      for (auto& r : term.rays) generic = generic && dot(c, r) != 0;
    if (!generic) continue;
    LeadingTermCertificate cert = lasserre_leading_term(t, c);
    if (!cert.conclusive()) continue;
    ++conclusive;
    auto want = oracle::optimum(s, c);
    REQUIRE(want);
    CHECK(cert.M == want->first);
  }
  CHECK(conclusive > 5);
}

TEST_CASE("linear relaxation") {
  IntVector c(2);
  c << 1, 1;
  LPRelaxation lp = lp_relaxation({unit_square(), c, Sense::maximize});
  CHECK(lp.value == 2);
  PolytopeSpec quad = read_polytope_file(oracle::data("quadrilateral"), false);
  c << 1, 0;
  lp = lp_relaxation({quad, c, Sense::maximize});
  CHECK(lp.value == 5);
  CHECK(lp.vertex(0) == 5);
  CHECK(lp.vertex(1) == 0);
  lp = lp_relaxation({quad, c, Sense::minimize});
  CHECK(lp.value == 0);
}

TEST_CASE("all three methods agree with brute force") {
  std::mt19937_64 rng(72);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index d = 1 + trial % 4;
    PolytopeSpec s = oracle::random_polytope(rng, d);
    OptimizationProblem p{s, random_cost(rng, d), trial % 3 == 0 ? Sense::minimize : Sense::maximize};
    if (!oracle::optimum(s, p.cost)) {
      CHECK_THROWS_AS(digging_optimize(p), InfeasibleError);
      CHECK_THROWS_AS(bbs_optimize(p), InfeasibleError);
      continue;
    }
    ++solved;
    IPOptions opt;
    opt.seed = trial;
    OptResult a = digging_optimize(p, opt);
    check_against_oracle(p, a);
    if (!a.lexicographic) CHECK(a.optimal_count != 0);
    check_against_oracle(p, single_cone_digging(p, opt));
    OptResult b = bbs_optimize(p, opt);
    check_against_oracle(p, b);
    CHECK(b.optimal_count != 0);
  }
  CHECK(solved > 30);
}

TEST_CASE("ties are broken the same way by both digging variants") {
  // the right edge of the square is optimal
  IntVector e(2);
  e << 1, 0;
  OptimizationProblem p{unit_square(), e, Sense::maximize};
  OptResult a = digging_optimize(p), b = single_cone_digging(p);
  CHECK(a.optimal_value == 1);
  CHECK(b.optimal_value == 1);
  REQUIRE(a.optimal_point);
  REQUIRE(b.optimal_point);
  CHECK(*a.optimal_point == *b.optimal_point);
  // the cost is constant along the top edge of the quadrilateral: a secondary direction decides
  PolytopeSpec quad = read_polytope_file(oracle::data("quadrilateral"), false);
  IntVector up(2);
  up << 0, 1;
  OptimizationProblem q{quad, up, Sense::maximize};
  OptResult r = digging_optimize(q), t = single_cone_digging(q);
  CHECK(r.optimal_value == 2);
  CHECK(t.optimal_value == 2);
  CHECK(r.lexicographic);
  CHECK(*r.optimal_point == *t.optimal_point);
}

TEST_CASE("bbs on a segment") {
  PolytopeSpec seg(IntMatrix(2, 1), IntVector(2));
  seg.A << 1, -1;
  seg.b << 5, 0;
  IntVector c(1);
  c << 1;
  OptResult r = bbs_optimize({seg, c, Sense::maximize});
  CHECK(r.optimal_value == 5);
  CHECK(r.optimal_count == 1);
  CHECK(!r.optimal_point);
  r = bbs_optimize({seg, c, Sense::minimize});
  CHECK(r.optimal_value == 0);
}

TEST_CASE("infeasible problems") {
  // 2x = 1
  PolytopeSpec odd(IntMatrix(1, 1), IntVector(1));
  odd.A << 2;
  odd.b << 1;
  odd.equality_rows = {0};
  IntVector c(1);
  c << 1;
  OptimizationProblem p{odd, c, Sense::maximize};
  CHECK_THROWS_AS(digging_optimize(p), InfeasibleError);
  CHECK_THROWS_AS(single_cone_digging(p), InfeasibleError);
  CHECK_THROWS_AS(bbs_optimize(p), InfeasibleError);
  // nonempty but without lattice points: 1 <= 3x <= 2
  PolytopeSpec gap(IntMatrix(2, 1), IntVector(2));
  gap.A << 3, -3;
  gap.b << 2, -1;
  OptimizationProblem g{gap, c, Sense::maximize};
  CHECK_THROWS_AS(digging_optimize(g), InfeasibleError);
  CHECK_THROWS_AS(single_cone_digging(g), InfeasibleError);
  CHECK_THROWS_AS(bbs_optimize(g), InfeasibleError);
}
