#ifndef BARVI_POLYNOMIAL_HPP
#define BARVI_POLYNOMIAL_HPP

#include "barvi/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace barvi {

// dense univariate polynomial, coefficients low to high; zero is the empty sequence
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Scalar c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(Scalar c, size_t k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar operator[](size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  const Scalar& lead() const { return c_.back(); }

  void set(size_t k, const Scalar& v) {
    if (k >= c_.size()) c_.resize(k + 1, Scalar(0));
    c_[k] = v;
    trim();
  }
  void add_to(size_t k, const Scalar& v) {
    if (k >= c_.size()) c_.resize(k + 1, Scalar(0));
    c_[k] += v;
    trim();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // multiply by t^k
  Polynomial shifted(size_t k) const {
    if (is_zero()) return *this;
    std::vector<Scalar> v(k, Scalar(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }
  Polynomial truncated(size_t n) const {
    if (c_.size() <= n) return *this;
    return Polynomial(std::vector<Scalar>(c_.begin(), c_.begin() + n));
  }

  template <class T>
  T eval(const T& x) const {
    T r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + T(c_[i]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(const IntPoly& p);
// p must have integral coefficients
IntPoly to_integer(const RatPoly& p);

// quotient and remainder over the rationals
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// exact division over the integers; throws if b does not divide a
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);
// monic gcd over the rationals
RatPoly gcd(RatPoly a, RatPoly b);

// first k+1 Taylor coefficients of P/Q, Q(0) != 0
template <class Scalar>
std::vector<Scalar> poly_divide_series(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q, size_t k);

// (1+x)^n truncated after degree k, n any integer
IntPoly binomial_series(const Integer& n, size_t k);
// cyclotomic polynomial Phi_n
const IntPoly& cyclotomic(unsigned n);
// 1 - t^e
IntPoly one_minus_power(unsigned long e);

std::string to_string(const IntPoly& p, const char* var = "t");
std::string to_string(const RatPoly& p, const char* var = "t");

// quotient of two polynomials; canonical form has coprime parts and a positive leading denominator coefficient
class UnivariateRat {
 public:
  UnivariateRat() : den_(Rational(1)) {}
  UnivariateRat(RatPoly num, RatPoly den);
  const RatPoly& numerator() const { return num_; }
  const RatPoly& denominator() const { return den_; }
  friend bool operator==(const UnivariateRat& a, const UnivariateRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RatPoly num_, den_;
};

// gcd-reduced form with primitive integral numerator and denominator, denominator leading coefficient positive
UnivariateRat rat_normalize(const UnivariateRat& r);

}  // namespace barvi

#endif
