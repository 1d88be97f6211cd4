#ifndef BARVI_POLYTOPE_HPP
#define BARVI_POLYTOPE_HPP

#include "barvi/exact.hpp"

#include <set>
#include <string>
#include <vector>

namespace barvi {

// {x : A x <= b} with some rows read as equations and optional x_j >= 0 rows.
// Indices are 0-based here; the file formats use 1-based indices.
struct PolytopeSpec {
  IntMatrix A;
  IntVector b;
  std::set<Eigen::Index> equality_rows;
  std::set<Eigen::Index> nonnegative_vars;

  PolytopeSpec() = default;
  PolytopeSpec(IntMatrix a, IntVector rhs) : A(std::move(a)), b(std::move(rhs)) {}

  Eigen::Index rows() const { return A.rows(); }
  Eigen::Index dim() const { return A.cols(); }
  bool has_equalities() const { return !equality_rows.empty(); }
  friend bool operator==(const PolytopeSpec& x, const PolytopeSpec& y) {
    return x.A == y.A && x.b == y.b && x.equality_rows == y.equality_rows &&
           x.nonnegative_vars == y.nonnegative_vars;
  }
};

PolytopeSpec parse_latte(const std::string& text);
PolytopeSpec parse_cdd(const std::string& text, std::vector<std::string>* warnings = nullptr);
// canonical LattE-format text; parse_latte(serialize(s)) == s
std::string serialize(const PolytopeSpec& spec);
IntVector parse_cost(const std::string& text);

// reads either format, sniffing for the cdd keywords
PolytopeSpec read_polytope_file(const std::string& path, bool cdd);
std::string read_file(const std::string& path);

// rejects empty or malformed specs
void validate(const PolytopeSpec& spec);

PolytopeSpec dilate(const PolytopeSpec& spec, const Integer& n);
// turn the nonnegativity flags into explicit rows -x_j <= 0
PolytopeSpec materialize_nonnegativity(const PolytopeSpec& spec);
// a.x <= beta  ->  a.x <= beta - 1 on every row (integer points strictly inside)
PolytopeSpec interior_transform(const PolytopeSpec& spec);
// append a row a.x <= beta
PolytopeSpec add_row(const PolytopeSpec& spec, const IntVector& a, const Integer& beta, bool equality = false);

// Result of removing the equations. Lattice points of n*P correspond to those of
// n*reduced_spec through x = n*x0 + G*lambda whenever period divides n, and n*P has
// no lattice points otherwise. With an integral x0 (period 1) this is the usual
// bijection x = x0 + G lambda.
struct EqualityElimination {
  PolytopeSpec reduced_spec;  // pure inequalities in k variables
  RatVector x0;               // particular solution of the equations
  IntMatrix null_basis;       // d x k, columns g_1..g_k
  IntMatrix U;                // unimodular, A_eq U = (R | 0)
  IntMatrix R;                // lower triangular r x r
  Integer period = 1;         // smallest n for which n*a has an integral solution
  bool infeasible = false;    // equations (or a vanished inequality) have no real solution

  bool integral_feasible() const { return !infeasible && period == 1; }
  IntVector lift(const IntVector& lambda) const;  // requires period 1
};

EqualityElimination eliminate_equalities(const PolytopeSpec& spec);

// column Hermite form of a full-row-rank matrix: A U = (R | 0), R lower triangular with positive diagonal
void column_hermite(const IntMatrix& A, IntMatrix& R, IntMatrix& U);

}  // namespace barvi

#endif
