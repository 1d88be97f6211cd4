#include "barvi/lattice.hpp"

#include <functional>

namespace barvi {

LatticeBasis::LatticeBasis(IntMatrix b, Integer den) : basis(std::move(b)), denominator(std::move(den)) {
  U = IntMatrix::Identity(basis.cols(), basis.cols());
}

LatticeBasis::LatticeBasis(const RatMatrix& b) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) l = lcm(l, Integer(b(i, j).get_den()));
  basis = IntMatrix(b.rows(), b.cols());
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) basis(i, j) = Rational(b(i, j) * l).get_num();
  denominator = l;
  U = IntMatrix::Identity(b.cols(), b.cols());
}

RatMatrix LatticeBasis::rational() const {
  RatMatrix r = to_rational(basis);
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) /= denominator;
  return r;
}

RatVector ShortVector::value() const {
  RatVector r = to_rational(scaled);
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= denominator;
  return r;
}

namespace {

Integer col_dot(const IntMatrix& b, Eigen::Index i, Eigen::Index j) {
  Integer s = 0;
  for (Eigen::Index r = 0; r < b.rows(); ++r) s += b(r, i) * b(r, j);
  return s;
}

// nearest integer to p/q, q > 0, halves rounded up
Integer round_div(const Integer& p, const Integer& q) {
  Integer r;
  Integer num = 2 * p + q;
  Integer den = 2 * q;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

// integral Gram-Schmidt data: d[i+1] = prod of |b*_j|^2 for j <= i, lam(k,j) = d[j+1] mu_{kj}
struct GramData {
  std::vector<Integer> d;
  IntMatrix lam;
};

GramData gram_schmidt(const IntMatrix& b) {
  const Eigen::Index n = b.cols();
  GramData g;
  g.d.assign(n + 1, Integer(0));
  g.d[0] = 1;
  g.lam = IntMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j <= k; ++j) {
      Integer u = col_dot(b, k, j);
      for (Eigen::Index i = 0; i < j; ++i) u = (g.d[i + 1] * u - g.lam(k, i) * g.lam(j, i)) / g.d[i];
      if (j < k)
        g.lam(k, j) = u;
      else
        g.d[k + 1] = u;
    }
    if (g.d[k + 1] == 0) throw ArgumentError("lattice basis is linearly dependent");
  }
  return g;
}

}  // namespace

void lll_reduce_columns(IntMatrix& b, IntMatrix* u) {
  const Eigen::Index n = b.cols();
  if (u) *u = IntMatrix::Identity(n, n);
  if (n <= 1) {
    if (n == 1 && is_zero(IntVector(b.col(0)))) throw ArgumentError("lattice basis is linearly dependent");
    return;
  }
  // d[i] is Cohen's d_i with d[0] = 1; vectors are 0-based, vector k uses d[k+1]
  std::vector<Integer> d(n + 1);
  IntMatrix lam = IntMatrix::Zero(n, n);
  d[0] = 1;
  d[1] = col_dot(b, 0, 0);
  if (d[1] == 0) throw ArgumentError("lattice basis is linearly dependent");
  Eigen::Index k = 1, kmax = 0;

  auto redi = [&](Eigen::Index kk, Eigen::Index l) {
    Integer twice = 2 * lam(kk, l);
    if (abs(twice) <= d[l + 1]) return;
    Integer q = round_div(lam(kk, l), d[l + 1]);
    b.col(kk) -= b.col(l) * q;
    if (u) u->col(kk) -= u->col(l) * q;
    lam(kk, l) -= q * d[l + 1];
    for (Eigen::Index i = 0; i < l; ++i) lam(kk, i) -= q * lam(l, i);
  };
  auto swapi = [&](Eigen::Index kk) {
    b.col(kk).swap(b.col(kk - 1));
    if (u) u->col(kk).swap(u->col(kk - 1));
    for (Eigen::Index j = 0; j + 1 < kk; ++j) std::swap(lam(kk, j), lam(kk - 1, j));
    Integer l = lam(kk, kk - 1);
    Integer B = (d[kk - 1] * d[kk + 1] + l * l) / d[kk];
    for (Eigen::Index i = kk + 1; i <= kmax; ++i) {
      Integer t = lam(i, kk);
      lam(i, kk) = (d[kk + 1] * lam(i, kk - 1) - l * t) / d[kk];
      lam(i, kk - 1) = (B * t + l * lam(i, kk)) / d[kk + 1];
    }
    d[kk] = B;
  };

  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (Eigen::Index j = 0; j <= k; ++j) {
        Integer v = col_dot(b, k, j);
        for (Eigen::Index i = 0; i < j; ++i) v = (d[i + 1] * v - lam(k, i) * lam(j, i)) / d[i];
        if (j < k)
          lam(k, j) = v;
        else
          d[k + 1] = v;
      }
      if (d[k + 1] == 0) throw ArgumentError("lattice basis is linearly dependent");
    }
    redi(k, k - 1);
    // Lovasz condition with delta = 3/4
    if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam(k, k - 1) * lam(k, k - 1)) {
      swapi(k);
      if (k > 1) --k;
    } else {
      for (Eigen::Index l = k - 2; l >= 0; --l) redi(k, l);
      ++k;
    }
  }
}

LatticeBasis lll_reduce(const LatticeBasis& in) {
  LatticeBasis out = in;
  if (in.basis.cols() == 0) return out;
  if (rank(in.basis) < in.basis.cols()) throw ArgumentError("lll_reduce: singular basis");
  lll_reduce_columns(out.basis, &out.U);
  return out;
}

namespace {

Integer linf(const IntVector& v) {
  Integer m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (abs(v(i)) > m) m = abs(v(i));
  return m;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

}  // namespace

ShortVector heuristic_short_vector(const LatticeBasis& reduced) {
  ShortVector best;
  best.denominator = reduced.denominator;
  for (Eigen::Index j = 0; j < reduced.basis.cols(); ++j) {
    IntVector v = reduced.basis.col(j);
    Integer n = linf(v);
    if (j == 0 || n < best.norm) {
      best.norm = n;
      best.scaled = v;
      best.alpha = reduced.U.col(j);
    }
  }
  return best;
}

ShortVector shortest_vector_linf(const LatticeBasis& input) {
  const Eigen::Index n = input.basis.cols();
  const Eigen::Index dim = input.basis.rows();
  if (n == 0) throw ArgumentError("shortest_vector_linf: empty basis");
  LatticeBasis red = lll_reduce(LatticeBasis(input.basis, input.denominator));
  GramData g = gram_schmidt(red.basis);

  // squared Gram-Schmidt lengths B_i and coefficients mu_{k,j}
  std::vector<Rational> B(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    B[i] = Rational(g.d[i + 1], g.d[i]);
    B[i].canonicalize();
  }
  RatMatrix mu = RatMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index j = 0; j < k; ++j) {
      mu(k, j) = Rational(g.lam(k, j), g.d[j + 1]);
      mu(k, j).canonicalize();
    }

  ShortVector best = heuristic_short_vector(red);
  best.denominator = input.denominator;
  // any vector at least as short in l_inf has squared l2 norm <= dim * best^2
  Rational radius = Rational(best.norm * best.norm * dim);

  IntVector x = IntVector::Zero(n);
  std::function<void(Eigen::Index, const Rational&)> search = [&](Eigen::Index i, const Rational& used) {
    Rational c = 0;
    for (Eigen::Index j = i + 1; j < n; ++j) c -= mu(j, i) * x(j);
    Rational room = (radius - used) / B[i];
    if (room < 0) return;
    Integer s = sqrt(floor_of(room)) + 1;
    Integer lo = floor_of(c) - s, hi = ceil_of(c) + s;
    for (Integer v = lo; v <= hi; ++v) {
      Rational diff = Rational(v) - c;
      Rational add = B[i] * diff * diff;
      Rational tot = used + add;
      if (tot > radius) continue;
      x(i) = v;
      if (i == 0) {
        if (is_zero(x)) continue;
        IntVector vec = red.basis * x;
        Integer nrm = linf(vec);
        if (nrm > best.norm) continue;
        IntVector alpha = red.U * x;
        if (nrm < best.norm || lex_less(alpha, best.alpha)) {
          best.norm = nrm;
          best.scaled = vec;
          best.alpha = alpha;
          radius = Rational(nrm * nrm * dim);
        }
      } else {
        search(i - 1, tot);
      }
    }
    x(i) = 0;
  };
  search(n - 1, Rational(0));
  return best;
}

}  // namespace barvi
