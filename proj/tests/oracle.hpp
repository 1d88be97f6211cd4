// brute force reference values for the tests
#ifndef BARVI_TESTS_ORACLE_HPP
#define BARVI_TESTS_ORACLE_HPP

#include "barvi/cone_term.hpp"
#include "barvi/lp.hpp"
#include "barvi/polytope.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using namespace barvi;

inline std::string data(const std::string& name) { return std::string(BARVI_DATA_DIR) + "/" + name; }

inline bool satisfies(const PolytopeSpec& s, const IntVector& x) {
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    Integer lhs = 0;
    for (Eigen::Index j = 0; j < s.dim(); ++j) lhs += s.A(i, j) * x(j);
    if (s.equality_rows.count(i) ? lhs != s.b(i) : lhs > s.b(i)) return false;
  }
  for (auto j : s.nonnegative_vars)
    if (x(j) < 0) return false;
  return true;
}

// equations as two inequalities, nonnegativity as rows
inline PolytopeSpec inequalities_only(const PolytopeSpec& s) {
  PolytopeSpec m = materialize_nonnegativity(s);
  PolytopeSpec r;
  const Eigen::Index extra = static_cast<Eigen::Index>(m.equality_rows.size());
  r.A.resize(m.rows() + extra, m.dim());
  r.b.resize(m.rows() + extra);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i, ++k) {
    r.A.row(k) = m.A.row(i);
    r.b(k) = m.b(i);
  }
  for (auto i : m.equality_rows) {
    r.A.row(k) = -m.A.row(i);
    r.b(k) = -m.b(i);
    ++k;
  }
  return r;
}

// integer bounding box from the LP; nullopt when empty
inline std::optional<std::pair<IntVector, IntVector>> box(const PolytopeSpec& s) {
  PolytopeSpec q = inequalities_only(s);
  const Eigen::Index d = s.dim();
  IntVector lo(d), hi(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    IntVector c = IntVector::Zero(d);
    c(j) = 1;
    LPResult up = lp_maximize(q.A, q.b, c);
    if (up.status == LPStatus::infeasible) return std::nullopt;
    if (up.status == LPStatus::unbounded) throw UnboundedError("oracle: unbounded");
    c(j) = -1;
    LPResult down = lp_maximize(q.A, q.b, c);
    hi(j) = floor_of(up.value);
    lo(j) = ceil_of(-down.value);
  }
  return std::make_pair(lo, hi);
}

inline void for_each_point(const PolytopeSpec& s, const std::function<void(const IntVector&)>& f) {
  auto b = box(s);
  if (!b) return;
  const auto& [lo, hi] = *b;
  const Eigen::Index d = s.dim();
  for (Eigen::Index j = 0; j < d; ++j)
    if (lo(j) > hi(j)) return;
  IntVector x = lo;
  while (true) {
    if (satisfies(s, x)) f(x);
    Eigen::Index j = 0;
    while (j < d && x(j) == hi(j)) {
      x(j) = lo(j);
      ++j;
    }
    if (j == d) return;
    x(j) += 1;
  }
}

inline Integer count(const PolytopeSpec& s) {
  Integer n = 0;
  for_each_point(s, [&](const IntVector&) { n += 1; });
  return n;
}

inline std::vector<IntVector> points(const PolytopeSpec& s) {
  std::vector<IntVector> out;
  for_each_point(s, [&](const IntVector& x) { out.push_back(x); });
  return out;
}

// max of c.x and the number of maximizers; nullopt when there is no lattice point
inline std::optional<std::pair<Integer, Integer>> optimum(const PolytopeSpec& s, const IntVector& c) {
  std::optional<std::pair<Integer, Integer>> best;
  for_each_point(s, [&](const IntVector& x) {
    Integer v = dot(c, x);
    if (!best || v > best->first)
      best = std::make_pair(v, Integer(1));
    else if (v == best->first)
      best->second += 1;
  });
  return best;
}

inline Rational power(const Rational& z, const Integer& e) {
  Rational r = 1, b = e >= 0 ? z : 1 / z;
  Integer k = e >= 0 ? e : Integer(-e);
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r *= b;
    b *= b;
    k /= 2;
  }
  return r;
}

inline Rational monomial(const std::vector<Rational>& z, const IntVector& e) {
  Rational r = 1;
  for (Eigen::Index i = 0; i < e.size(); ++i) r *= power(z[i], e(i));
  return r;
}

// value of a term sum at a point z with z^v != 1 for every ray v
inline Rational evaluate(const ConeTermSum& s, const std::vector<Rational>& z) {
  Rational total = 0;
  for (const auto& t : s.terms) {
    Rational den = 1;
    for (const auto& r : t.rays) den *= 1 - monomial(z, r);
    total += Rational(t.sign) * monomial(z, t.numerator) / den;
  }
  return total;
}

inline Rational evaluate_points(const std::vector<IntVector>& pts, const std::vector<Rational>& z) {
  Rational total = 0;
  for (const auto& x : pts) total += monomial(z, x);
  return total;
}

// bounded random polytope in dimension d with entries in [-8, 8]; some rows may become
// equations and some variables get sign flags
inline PolytopeSpec random_polytope(std::mt19937_64& rng, Eigen::Index d, bool allow_equations = true) {
  std::uniform_int_distribution<int> coef(-8, 8), bound(1, 8), extra(0, 3), coin(0, 5);
  const Eigen::Index m = 2 * d + extra(rng);
  PolytopeSpec s;
  s.A = IntMatrix::Zero(m, d);
  s.b = IntVector::Zero(m);
  // a box keeps it bounded
  for (Eigen::Index j = 0; j < d; ++j) {
    s.A(2 * j, j) = 1;
    s.b(2 * j) = bound(rng);
    s.A(2 * j + 1, j) = -1;
    s.b(2 * j + 1) = bound(rng);
  }
  for (Eigen::Index i = 2 * d; i < m; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) s.A(i, j) = coef(rng);
    s.b(i) = coef(rng);
    if (allow_equations && d > 1 && coin(rng) == 0) s.equality_rows.insert(i);
  }
  for (Eigen::Index j = 0; j < d; ++j)
    if (coin(rng) == 0) s.nonnegative_vars.insert(j);
  return s;
}

}  // namespace oracle

#endif
