#include "polytess/rational.hpp"

#include <stdexcept>

namespace polytess {

std::pair<std::string, std::string> rational_to_strings(const Rational& r) {
  return {numerator(r).str(), denominator(r).str()};
}

namespace {

bool decimal_digits(const std::string& s) {
  const size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start) return false;
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational rational_from_strings(const std::string& num, const std::string& den) {
  if (!decimal_digits(num) || !decimal_digits(den)) {
    throw std::invalid_argument("rational_from_strings: malformed integer digits");
  }
  const Integer n(num);
  const Integer d(den);
  if (d <= 0) {
    throw std::invalid_argument("rational_from_strings: denominator must be positive");
  }
  return Rational(n, d);
}

bool lex_less(const RatVec& a, const RatVec& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

}  // namespace polytess
