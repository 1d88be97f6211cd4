#include "barvi/polynomial.hpp"

#include <map>
#include <mutex>
#include <type_traits>
#include <sstream>

namespace barvi {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(v));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw InternalError("polynomial has a non-integral coefficient");
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = 1 / b.lead();
  for (long k = a.degree() - db; k >= 0; --k) {
    Rational f = r[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) r[k + j] -= f * b[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  std::vector<Integer> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) throw ArgumentError("exact_divide: not divisible");
  std::vector<Integer> q(a.degree() - db + 1);
  const Integer& lb = b.lead();
  for (long k = a.degree() - db; k >= 0; --k) {
    if (r[k + db] == 0) continue;
    if (!mpz_divisible_p(r[k + db].get_mpz_t(), lb.get_mpz_t())) throw ArgumentError("exact_divide: not divisible");
    Integer f = r[k + db] / lb;
    q[k] = f;
    for (long j = 0; j <= db; ++j) r[k + j] -= f * b[j];
  }
  for (long j = 0; j < db; ++j)
    if (r[j] != 0) throw ArgumentError("exact_divide: not divisible");
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  try {
    exact_divide(a, b);
    return true;
  } catch (const ArgumentError&) {
    return false;
  }
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.lead());
}

template <class Scalar>
std::vector<Scalar> poly_divide_series(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q, size_t k) {
  if (q[0] == 0) throw ArgumentError("poly_divide_series: Q(0) = 0, pole at the origin");
  std::vector<Scalar> c(k + 1);
  const Scalar b0 = q[0];
  for (size_t j = 0; j <= k; ++j) {
    Scalar s = p[j];
    const size_t lim = std::min<size_t>(j, q.size() ? q.size() - 1 : 0);
    for (size_t i = 1; i <= lim; ++i) s -= q[i] * c[j - i];
    if constexpr (std::is_same_v<Scalar, Integer>) {
      if (!mpz_divisible_p(s.get_mpz_t(), b0.get_mpz_t()))
        throw ArgumentError("poly_divide_series: coefficients leave the integers");
    }
    c[j] = s / b0;
  }
  return c;
}
template std::vector<Rational> poly_divide_series(const RatPoly&, const RatPoly&, size_t);
template std::vector<Integer> poly_divide_series(const IntPoly&, const IntPoly&, size_t);

IntPoly binomial_series(const Integer& n, size_t k) {
  std::vector<Integer> v(k + 1);
  v[0] = 1;
  for (size_t m = 1; m <= k; ++m) v[m] = v[m - 1] * (n - Integer(m - 1)) / Integer(m);
  return IntPoly(std::move(v));
}

const IntPoly& cyclotomic(unsigned n) {
  static std::map<unsigned, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly p = IntPoly::monomial(1, n) - IntPoly(Integer(1));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    // recursion would deadlock on the mutex; build divisors iteratively
    auto jt = cache.find(d);
    IntPoly phi;
    if (jt != cache.end()) {
      phi = jt->second;
    } else {
      phi = IntPoly::monomial(1, d) - IntPoly(Integer(1));
      for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) phi = exact_divide(phi, cache.at(e));
      cache[d] = phi;
    }
    p = exact_divide(p, phi);
  }
  return cache[n] = p;
}

IntPoly one_minus_power(unsigned long e) {
  return IntPoly(Integer(1)) - IntPoly::monomial(1, e);
}

namespace {
template <class Scalar>
std::string poly_str(const Polynomial<Scalar>& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    Scalar c = p[k];
    if (c == 0) continue;
    bool neg = sgn(c) < 0;
    Scalar a = neg ? Scalar(-c) : c;
    if (!first || neg) os << (neg ? "-" : "+");
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}
}  // namespace

std::string to_string(const IntPoly& p, const char* var) { return poly_str(p, var); }
std::string to_string(const RatPoly& p, const char* var) { return poly_str(p, var); }

UnivariateRat::UnivariateRat(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArgumentError("rational function with zero denominator");
}

UnivariateRat rat_normalize(const UnivariateRat& r) {
  const RatPoly& den = r.denominator();
  if (den.is_zero()) throw ArgumentError("rat_normalize: zero denominator");
  if (r.numerator().is_zero()) return UnivariateRat(RatPoly(), RatPoly(Rational(1)));
  RatPoly g = gcd(r.numerator(), den);
  RatPoly n = divmod(r.numerator(), g).first;
  RatPoly d = divmod(den, g).first;
  // clear denominators and content jointly: scale so that d is primitive integral with positive lead
  Integer l = 1;
  for (const auto& c : d.coeffs()) l = lcm(l, Integer(c.get_den()));
  for (const auto& c : n.coeffs()) l = lcm(l, Integer(c.get_den()));
  n *= Rational(l);
  d *= Rational(l);
  Integer cont = 0;
  for (const auto& c : d.coeffs()) cont = gcd(cont, Integer(c.get_num()));
  for (const auto& c : n.coeffs()) cont = gcd(cont, Integer(c.get_num()));
  if (sgn(d.lead()) < 0) cont = -cont;
  n *= Rational(1, 1) / Rational(cont);
  d *= Rational(1, 1) / Rational(cont);
  return UnivariateRat(std::move(n), std::move(d));
}

}  // namespace barvi
