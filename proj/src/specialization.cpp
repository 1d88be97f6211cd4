#include "barvi/specialization.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace barvi {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

struct VecLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

}  // namespace

namespace {

// rays whose entries stay below 2^40 go to `small` (stride n), the rest to `big`
struct RayPool {
  Eigen::Index n;
  std::vector<long> small;
  std::set<IntVector, VecLess> big;

  void add_primitive(const IntVector& h) {
    for (Eigen::Index i = 0; i < n; ++i)
      if (abs(h(i)) > Integer(1L << 40)) {
        big.insert(h);
        return;
      }
    for (Eigen::Index i = 0; i < n; ++i) small.push_back(h(i).get_si());
  }
  void add_primitive(const int64_t* h) {
    for (Eigen::Index i = 0; i < n; ++i)
      if (h[i] > (1L << 40) || h[i] < -(1L << 40)) {
        IntVector v(n);
        for (Eigen::Index k = 0; k < n; ++k) v(k) = static_cast<long>(h[k]);
        big.insert(v);
        return;
      }
    small.insert(small.end(), h, h + n);
  }
  void dedupe() {
    const size_t m = n ? small.size() / n : 0;
    std::vector<uint32_t> idx(m);
    for (size_t k = 0; k < m; ++k) idx[k] = static_cast<uint32_t>(k);
    auto at = [&](uint32_t k) { return small.begin() + static_cast<std::ptrdiff_t>(k) * n; };
    std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
      return std::lexicographical_compare(at(a), at(a) + n, at(b), at(b) + n);
    });
    std::vector<long> out;
    for (size_t k = 0; k < m; ++k) {
      if (k > 0 && std::equal(at(idx[k]), at(idx[k]) + n, at(idx[k - 1]))) continue;
      out.insert(out.end(), at(idx[k]), at(idx[k]) + n);
    }
    small.swap(out);
  }
};

GenericDirection pick_direction(RayPool& pool, uint64_t seed) {
  const Eigen::Index n = pool.n;
  pool.dedupe();
  const size_t m = n ? pool.small.size() / n : 0;
  std::mt19937_64 rng(seed);
  const long cap = 1000000;
  long draws = 0;
  for (long k = 1;; k *= 2) {
    std::uniform_int_distribution<long> dist(-k, k);
    for (int attempt = 0; attempt < 64; ++attempt) {
      if (++draws > cap) throw Error("choose_generic_direction: no generic direction after 10^6 draws");
      GenericDirection g;
      g.lambda = IntVector(n);
      std::vector<long> lam(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        lam[i] = dist(rng);
        g.lambda(i) = lam[i];
      }
      bool ok = true;
      for (size_t r = 0; r < m && ok; ++r) {
        const long* v = pool.small.data() + r * n;
        __int128 acc = 0;
        for (Eigen::Index i = 0; i < n; ++i) acc += static_cast<__int128>(lam[i]) * v[i];
        ok = acc != 0;
      }
      if (ok)
        for (const auto& r : pool.big)
          if (dot(g.lambda, r) == 0) {
            ok = false;
            break;
          }
      if (ok) return g;
    }
  }
}

Integer from_i128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Integer(static_cast<long>(v));
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer r = Integer(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += Integer(static_cast<unsigned long>(u));
  return neg ? Integer(-r) : r;
}

}  // namespace

GenericDirection choose_generic_direction(const ConeTermSum& s, uint64_t seed, Eigen::Index coords) {
  RayPool pool{coords < 0 ? s.dim : coords, {}, {}};
  for (const auto& t : s.terms)
    for (const auto& r : t.rays) {
      IntVector h = r.head(pool.n);
      if (is_zero(h)) continue;
      pool.add_primitive(primitive(h));
    }
  return pick_direction(pool, seed);
}

GenericDirection choose_generic_direction(const PolytopeDecomposition& dec, uint64_t seed) {
  const Eigen::Index d = dec.dim;
  RayPool pool{d, {}, {}};
  // rays of unimodular cones are primitive
  for (const auto& vc : dec.cones) {
    for (size_t k = 0; k < vc.packed_signs.size(); ++k)
      for (Eigen::Index j = 0; j < d; ++j) pool.add_primitive(vc.packed.data() + k * 2 * d * d + j * d);
    for (const auto& r : vc.rays)
      for (Eigen::Index j = 0; j < d; ++j) pool.add_primitive(IntVector(r.col(j)));
  }
  return pick_direction(pool, seed);
}

UnivariateTermSum substitute_direction(const PolytopeDecomposition& dec, const Integer& dilation,
                                       const GenericDirection& dir) {
  const Eigen::Index d = dec.dim;
  if (dir.lambda.size() != d) throw DimensionError("substitute_direction: direction has wrong length");
  bool small_lambda = true;
  std::vector<long> lam(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    small_lambda = small_lambda && abs(dir.lambda(i)) <= Integer(1L << 40);
    if (small_lambda) lam[i] = dir.lambda(i).get_si();
  }
  UnivariateTermSum u;
  Integer c, acc;
  for (const auto& vc : dec.cones) {
    // apex = num / den, as in assemble_terms
    RatVector apex = vc.vertex * Rational(dilation);
    Integer den = 1;
    for (Eigen::Index i = 0; i < d; ++i) den = lcm(den, Integer(apex(i).get_den()));
    IntVector num(d);
    for (Eigen::Index i = 0; i < d; ++i) num(i) = Rational(apex(i) * den).get_num();
    const Integer lnum = dot(dir.lambda, num);
    auto finish = [&](UnivariateTerm& t) {
      for (const auto& v : t.denominators)
        if (v == 0) throw ArgumentError("substitute_direction: direction is orthogonal to a ray");
      u.terms.push_back(std::move(t));
    };
    // numerator = rays * ceil(inverse num / den), so lambda.numerator = sum_j (lambda.ray_j) c_j
    const size_t step = 2 * d * d;
    for (size_t k = 0; k < vc.packed_signs.size(); ++k) {
      const int64_t* R = vc.packed.data() + k * step;
      const int64_t* V = R + d * d;
      UnivariateTerm t;
      t.sign = vc.packed_signs[k];
      t.denominators.resize(d);
      for (Eigen::Index j = 0; j < d; ++j) {
        if (small_lambda) {
          // |lambda_i ray_ij| < 2^104, the sum of at most 2^20 of them fits
          __int128 s = 0;
          for (Eigen::Index i = 0; i < d; ++i) s += static_cast<__int128>(lam[i]) * R[j * d + i];
          t.denominators[j] = from_i128(s);
        } else {
          Integer s = 0;
          for (Eigen::Index i = 0; i < d; ++i) s += dir.lambda(i) * Integer(static_cast<long>(R[j * d + i]));
          t.denominators[j] = s;
        }
      }
      if (den == 1) {
        t.numerator = lnum;
      } else {
        t.numerator = 0;
        for (Eigen::Index j = 0; j < d; ++j) {
          acc = 0;
          for (Eigen::Index i = 0; i < d; ++i) {
            const int64_t v = V[i * d + j];  // inverse(j, i)
            if (v >= 0)
              mpz_addmul_ui(acc.get_mpz_t(), num(i).get_mpz_t(), static_cast<unsigned long>(v));
            else
              mpz_submul_ui(acc.get_mpz_t(), num(i).get_mpz_t(), 0ul - static_cast<unsigned long>(v));
          }
          mpz_cdiv_q(c.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
          mpz_addmul(t.numerator.get_mpz_t(), t.denominators[j].get_mpz_t(), c.get_mpz_t());
        }
      }
      finish(t);
    }
    for (size_t k = 0; k < vc.signs.size(); ++k) {
      UnivariateTerm t;
      t.sign = vc.signs[k];
      for (Eigen::Index j = 0; j < d; ++j) t.denominators.push_back(dot(dir.lambda, IntVector(vc.rays[k].col(j))));
      if (den == 1) {
        t.numerator = lnum;
      } else {
        IntVector cv = vc.inverse[k] * num;
        t.numerator = 0;
        for (Eigen::Index j = 0; j < d; ++j) {
          mpz_cdiv_q(c.get_mpz_t(), cv(j).get_mpz_t(), den.get_mpz_t());
          t.numerator += t.denominators[j] * c;
        }
      }
      finish(t);
    }
  }
  return u;
}

UnivariateTermSum substitute_direction(const ConeTermSum& s, const GenericDirection& dir) {
  if (dir.lambda.size() != s.dim) throw DimensionError("substitute_direction: direction has wrong length");
  UnivariateTermSum u;
  u.terms.reserve(s.terms.size());
  for (size_t i = 0; i < s.terms.size(); ++i) {
    const auto& t = s.terms[i];
    UnivariateTerm ut;
    ut.sign = t.sign;
    ut.numerator = dot(dir.lambda, t.numerator);
    for (const auto& r : t.rays) {
      Integer dv = dot(dir.lambda, r);
      if (dv == 0)
        throw ArgumentError("substitute_direction: direction is orthogonal to a ray of term " + std::to_string(i) +
                            " [" + to_string(r) + "]");
      ut.denominators.push_back(dv);
    }
    u.terms.push_back(std::move(ut));
  }
  return u;
}

Integer count_via_residue(const UnivariateTermSum& u) {
  if (u.terms.empty()) return 0;
  struct Flipped {
    int sign;
    Integer N;
    std::vector<Integer> D;
  };
  std::vector<Flipped> fl;
  fl.reserve(u.terms.size());
  Integer c;
  for (size_t i = 0; i < u.terms.size(); ++i) {
    const auto& t = u.terms[i];
    Flipped f{t.sign, t.numerator, t.denominators};
    for (auto& d : f.D) {
      if (d == 0) throw ArgumentError("count_via_residue: zero denominator exponent");
      if (d < 0) {
        // 1/(1-t^d) = -t^{-d}/(1-t^{-d})
        f.sign = -f.sign;
        f.N -= d;
        d = -d;
      }
    }
    std::sort(f.D.begin(), f.D.end());
    if (i == 0 || f.N < c) c = f.N;
    fl.push_back(std::move(f));
  }
  // the recurrence below is linear in a, so terms with equal denominators share it
  std::map<std::vector<Integer>, std::vector<Integer>> groups;
  for (auto& f : fl) {
    const size_t k = f.D.size();
    const Integer M = f.N - c;
    auto& acc = groups[f.D];
    if (acc.empty()) acc.assign(k + 1, Integer(0));
    // a_m = C(M, m)
    Integer a = 1;
    for (size_t m = 0; m <= k; ++m) {
      if (m > 0) {
        a *= M - static_cast<long>(m) + 1;
        mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), m);
      }
      if (f.sign > 0)
        acc[m] += a;
      else
        acc[m] -= a;
    }
  }
  // each group contributes num / b0^{k+1}; the total is an integer, recovered by CRT
  struct Part {
    Integer num, b0;
    size_t k;
  };
  std::vector<Part> parts;
  parts.reserve(groups.size());
  std::vector<Integer> Q, q, tmp, cp, pw;
  long top = 0;
  for (auto& [D, a] : groups) {
    const size_t k = D.size();
    // Q = prod_j sum_m C(D_j, m+1) s^m, truncated after s^k
    Q.assign(k + 1, Integer(0));
    Q[0] = 1;
    for (const auto& d : D) {
      q.assign(k + 1, Integer(0));
      for (size_t m = 0; m <= k; ++m) q[m] = binomial(d, m + 1);
      tmp.assign(k + 1, Integer(0));
      for (size_t i = 0; i <= k; ++i) {
        if (Q[i] == 0) continue;
        for (size_t j = 0; i + j <= k; ++j) tmp[i + j] += Q[i] * q[j];
      }
      Q.swap(tmp);
    }
    // c'_j = c_j b0^{j+1} keeps the recurrence in the integers
    const Integer& b0 = Q[0];
    pw.assign(k + 1, Integer(1));
    for (size_t j = 1; j <= k; ++j) pw[j] = pw[j - 1] * b0;
    cp.assign(k + 1, Integer(0));
    cp[0] = a[0];
    for (size_t j = 1; j <= k; ++j) {
      Integer v = a[j] * pw[j];
      for (size_t i = 1; i <= j; ++i) v -= Q[i] * pw[i - 1] * cp[j - i];
      cp[j] = v;
    }
    if (cp[k] == 0) continue;
    Part part{cp[k], b0, k};
    if (k % 2 == 1) part.num = -part.num;
    // |num / b0^{k+1}| < 2^(bits(num) - (k+1)(bits(b0)-1))
    const long e = static_cast<long>(mpz_sizeinbase(part.num.get_mpz_t(), 2)) -
                   static_cast<long>(k + 1) * (static_cast<long>(mpz_sizeinbase(b0.get_mpz_t(), 2)) - 1);
    if (parts.empty() || e > top) top = e;
    parts.push_back(std::move(part));
  }
  if (parts.empty()) return 0;
  // |total| < 2^bound
  const long bound = std::max(top, 0L) + static_cast<long>(mpz_sizeinbase(Integer(parts.size()).get_mpz_t(), 2)) + 1;

  auto residue_mod = [&](uint64_t p, bool& ok) {
    using u128 = unsigned __int128;
    uint64_t total = 0;
    Integer P(static_cast<unsigned long>(p)), inv;
    for (const auto& part : parts) {
      const uint64_t b = mpz_fdiv_ui(part.b0.get_mpz_t(), p);
      if (b == 0) {
        ok = false;
        return uint64_t(0);
      }
      Integer bz(static_cast<unsigned long>(b));
      mpz_invert(inv.get_mpz_t(), bz.get_mpz_t(), P.get_mpz_t());
      const uint64_t bi = inv.get_ui();
      uint64_t f = 1;
      for (size_t j = 0; j <= part.k; ++j) f = static_cast<uint64_t>(static_cast<u128>(f) * bi % p);
      const uint64_t n = mpz_fdiv_ui(part.num.get_mpz_t(), p);
      total = static_cast<uint64_t>((static_cast<u128>(n) * f + total) % p);
    }
    ok = true;
    return total;
  };

  Integer modulus = 1, value = 0, prime = Integer(1) << 62;
  while (true) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const uint64_t p = prime.get_ui();
    bool ok;
    const uint64_t r = residue_mod(p, ok);
    if (!ok) continue;
    const bool enough = static_cast<long>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) > bound + 1;
    if (enough) {
      // one more prime confirms that the sum really is an integer
      Integer sym = value;
      if (2 * sym > modulus) sym -= modulus;
      if (mpz_fdiv_ui(sym.get_mpz_t(), p) != r)
        throw InternalError("count_via_residue: the term sum is not an integer");
      value = sym;
      break;
    }
    // value += modulus * ((r - value) / modulus mod p)
    Integer mp(static_cast<unsigned long>(p)), minv, diff;
    Integer mm = modulus % mp;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), mp.get_mpz_t());
    diff = (Integer(static_cast<unsigned long>(r)) - value % mp) * minv % mp;
    if (diff < 0) diff += mp;
    value += modulus * diff;
    modulus *= mp;
  }
  return value;
}

Integer count_terms(const ConeTermSum& s, uint64_t seed) {
  if (s.terms.empty()) return 0;
  return count_via_residue(substitute_direction(s, choose_generic_direction(s, seed)));
}

IntPoly SeriesRational::denominator() const {
  IntPoly d(Integer(1));
  for (auto s : factors) d *= one_minus_power(s);
  return d;
}

UnivariateRat SeriesRational::reduced() const {
  return rat_normalize(UnivariateRat(to_rational(numerator), to_rational(denominator())));
}

namespace {
IntPoly stretch(const IntPoly& p, unsigned long g) {
  if (g == 1 || p.is_zero()) return p;
  std::vector<Integer> v(static_cast<size_t>(p.degree()) * g + 1, Integer(0));
  for (size_t i = 0; i < p.size(); ++i) v[i * g] = p[i];
  return IntPoly(std::move(v));
}
}  // namespace

SeriesRational SeriesRational::compose_power(unsigned long g) const {
  SeriesRational r;
  r.numerator = stretch(numerator, g);
  for (auto s : factors) r.factors.push_back(s * g);
  return r;
}

bool equivalent(const SeriesRational& a, const SeriesRational& b) {
  return a.numerator * b.denominator() == b.numerator * a.denominator();
}

bool equivalent(const SeriesRational& a, const IntPoly& num, const IntPoly& den) {
  return a.numerator * den == num * a.denominator();
}

SeriesRational simplify_series(const SeriesRational& r) {
  if (r.numerator.is_zero()) return SeriesRational{};
  // 1 - t^s = -prod_{e | s} Phi_e(t)
  std::map<unsigned long, int> phi;
  for (auto s : r.factors)
    for (unsigned long e = 1; e <= s; ++e)
      if (s % e == 0) ++phi[e];
  int sign = (r.factors.size() % 2) ? -1 : 1;  // numerator / prod(-Phi) bookkeeping
  IntPoly num = r.numerator;
  for (auto it = phi.rbegin(); it != phi.rend(); ++it) {
    const IntPoly& c = cyclotomic(static_cast<unsigned>(it->first));
    while (it->second > 0 && divides(c, num)) {
      num = exact_divide(num, c);
      --it->second;
    }
  }
  // regroup the remaining cyclotomic factors into factors 1 - t^s, completing where needed
  SeriesRational out;
  int nf = 0;
  for (;;) {
    unsigned long top = 0;
    for (auto& [e, cnt] : phi)
      if (cnt > 0) top = e;
    if (top == 0) break;
    for (unsigned long e = 1; e <= top; ++e) {
      if (top % e) continue;
      auto it = phi.find(e);
      if (it != phi.end() && it->second > 0)
        --it->second;
      else
        num *= cyclotomic(static_cast<unsigned>(e));
    }
    out.factors.push_back(top);
    ++nf;
  }
  if (((nf % 2) ? -1 : 1) != sign) num = -num;
  std::sort(out.factors.begin(), out.factors.end());
  out.numerator = num;
  return out;
}

std::string to_string(const SeriesRational& r) {
  std::ostringstream os;
  os << "(" << to_string(r.numerator) << ")";
  if (r.factors.empty()) return os.str();
  std::map<unsigned long, int> mult;
  for (auto s : r.factors) ++mult[s];
  os << "/(";
  bool first = true;
  for (auto& [s, m] : mult) {
    if (!first) os << "*";
    first = false;
    os << "(1-t";
    if (s > 1) os << "^" << s;
    os << ")";
    if (m > 1) os << "^" << m;
  }
  os << ")";
  return os.str();
}

namespace {

using Signature = std::vector<std::pair<unsigned long, unsigned long>>;

IntPoly power(const IntPoly& p, unsigned long e) {
  IntPoly r(Integer(1));
  for (unsigned long i = 0; i < e; ++i) r *= p;
  return r;
}

// truncated product of two series with polynomial coefficients
std::vector<RatPoly> series_mul(const std::vector<RatPoly>& a, const std::vector<RatPoly>& b, size_t k) {
  std::vector<RatPoly> r(k + 1);
  for (size_t i = 0; i <= k; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j <= k; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

SeriesRational ehrhart_series(const ConeTermSum& h, uint64_t seed) {
  SeriesRational out;
  if (h.terms.empty()) return out;
  const Eigen::Index n = h.dim - 1;
  GenericDirection dir = choose_generic_direction(h, seed, n);
  std::map<Signature, RatPoly> groups;

  for (const auto& term : h.terms) {
    int eps = term.sign;
    Integer a = dot(dir.lambda, IntVector(term.numerator.head(n)));
    Integer b = term.numerator(n);
    std::vector<Integer> zero;
    std::vector<std::pair<Integer, unsigned long>> mixed;
    std::map<unsigned long, unsigned long> sig;
    for (const auto& v : term.rays) {
      Integer alpha = dot(dir.lambda, IntVector(v.head(n)));
      Integer beta = v(n);
      if (alpha == 0 && !is_zero(IntVector(v.head(n))))
        throw InternalError("ehrhart_series: direction is not generic");
      if (beta < 0 || (beta == 0 && alpha < 0)) {
        eps = -eps;
        a -= alpha;
        b -= beta;
        alpha = -alpha;
        beta = -beta;
      }
      if (beta == 0)
        zero.push_back(alpha);
      else if (alpha == 0)
        ++sig[beta.get_ui()];
      else
        mixed.emplace_back(alpha, beta.get_ui());
    }
    const size_t k = zero.size();
    for (auto& [alpha, beta] : mixed) sig[beta] += k + 1;
    // scalar part (1+s)^a / prod Q_alpha(s), Q_alpha(s) = ((1+s)^alpha - 1)/s
    RatPoly P = to_rational(binomial_series(a, k));
    RatPoly Q(Rational(1));
    for (auto& al : zero) {
      IntPoly bs = binomial_series(al, k + 1);
      std::vector<Integer> qc(k + 1);
      for (size_t m = 0; m <= k; ++m) qc[m] = bs[m + 1];
      Q = (Q * to_rational(IntPoly(qc))).truncated(k + 1);
    }
    std::vector<Rational> S = poly_divide_series(P, Q, k);
    std::vector<RatPoly> cur(k + 1);
    for (size_t m = 0; m <= k; ++m) cur[m] = RatPoly(S[m]);
    for (auto& [alpha, beta] : mixed) {
      // (1-T)^{k+1} / (1 - T(1+s)^alpha) = sum_m s^m sum_{j<=m} T^j (1-T)^{k-j} [s^m] delta^j
      IntPoly bs = binomial_series(alpha, k);
      std::vector<Integer> dc(k + 1);
      for (size_t m = 1; m <= k; ++m) dc[m] = bs[m];
      IntPoly delta(dc);
      std::vector<IntPoly> dpow(k + 1);
      dpow[0] = IntPoly(Integer(1));
      for (size_t j = 1; j <= k; ++j) dpow[j] = (dpow[j - 1] * delta).truncated(k + 1);
      std::vector<RatPoly> G(k + 1);
      for (size_t m = 0; m <= k; ++m) {
        IntPoly g;
        for (size_t j = 0; j <= m; ++j) {
          if (dpow[j][m] == 0) continue;
          g += (power(one_minus_power(1), k - j).shifted(j)) * dpow[j][m];
        }
        G[m] = to_rational(stretch(g, beta));
      }
      cur = series_mul(cur, G, k);
    }
    RatPoly c = cur[k];
    if (c.is_zero()) continue;
    if (b < 0) throw InternalError("ehrhart_series: negative degree shift");
    c = c.shifted(b.get_ui());
    if ((eps < 0) != (k % 2 == 1)) c = -c;
    Signature s(sig.begin(), sig.end());
    groups[s] += c;
  }

  std::map<unsigned long, unsigned long> common;
  for (auto& [s, p] : groups) {
    if (p.is_zero()) continue;
    for (auto& [beta, m] : s) common[beta] = std::max(common[beta], m);
  }
  RatPoly total;
  for (auto& [s, p] : groups) {
    if (p.is_zero()) continue;
    std::map<unsigned long, unsigned long> own(s.begin(), s.end());
    IntPoly f(Integer(1));
    for (auto& [beta, m] : common) f *= power(one_minus_power(beta), m - own[beta]);
    total += p * to_rational(f);
  }
  out.numerator = to_integer(total);
  for (auto& [beta, m] : common)
    for (unsigned long i = 0; i < m; ++i) out.factors.push_back(beta);
  return out;
}

std::vector<Integer> taylor_expand(const SeriesRational& r, size_t n) {
  std::vector<Integer> c(n + 1, Integer(0));
  for (size_t i = 0; i <= n && i < r.numerator.size(); ++i) c[i] = r.numerator[i];
  for (auto s : r.factors)
    for (size_t j = s; j <= n; ++j) c[j] += c[j - s];
  return c;
}

std::vector<Integer> taylor_expand(const ConeTermSum& h, size_t n, uint64_t seed) {
  return taylor_expand(ehrhart_series(h, seed), n);
}

}  // namespace barvi
