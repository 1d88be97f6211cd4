#include "barvi/cone_term.hpp"

#include <algorithm>
#include <ostream>

namespace barvi {

namespace {
bool vec_less(const IntVector& a, const IntVector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return a.size() < b.size();
}
bool term_less(const ConeTerm& a, const ConeTerm& b) {
  if (vec_less(a.numerator, b.numerator)) return true;
  if (vec_less(b.numerator, a.numerator)) return false;
  for (size_t j = 0; j < std::min(a.rays.size(), b.rays.size()); ++j) {
    if (vec_less(a.rays[j], b.rays[j])) return true;
    if (vec_less(b.rays[j], a.rays[j])) return false;
  }
  if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
  return a.sign < b.sign;
}
}  // namespace

void ConeTermSum::add(ConeTerm t) {
  if (t.numerator.size() != dim) throw DimensionError("cone term dimension mismatch");
  terms.push_back(std::move(t));
}

void ConeTermSum::append(const ConeTermSum& other) {
  if (other.terms.empty()) return;
  if (other.dim != dim) throw DimensionError("cone term sums of different dimension");
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
}

void ConeTermSum::canonicalize() {
  for (auto& t : terms) std::sort(t.rays.begin(), t.rays.end(), vec_less);
  std::sort(terms.begin(), terms.end(), term_less);
}

void write_terms(std::ostream& os, const ConeTermSum& s) {
  for (const auto& t : s.terms) {
    os << (t.sign > 0 ? "+1" : "-1") << "; " << to_string(t.numerator) << ";";
    for (size_t j = 0; j < t.rays.size(); ++j) os << (j ? ", " : " ") << "[" << to_string(t.rays[j]) << "]";
    os << "\n";
  }
}

void validate(const ConeTermSum& s) {
  for (const auto& t : s.terms) {
    if (t.numerator.size() != s.dim) throw DimensionError("term numerator has wrong length");
    if (t.sign != 1 && t.sign != -1) throw InternalError("term sign must be +1 or -1");
    for (const auto& r : t.rays) {
      if (r.size() != s.dim) throw DimensionError("term ray has wrong length");
      if (is_zero(r)) throw InternalError("zero ray exponent");
      if (content(r) != 1) throw InternalError("ray exponent is not primitive");
    }
  }
}

}  // namespace barvi
