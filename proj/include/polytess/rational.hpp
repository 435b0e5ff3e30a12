#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>

namespace polytess {

/// Exact arbitrary-precision integer and rational scalars. GMP keeps every
/// rational canonical (positive denominator, coprime numerator) after each
/// arithmetic operation, so equality is structural.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Dense column vector / matrix over an arbitrary scalar.
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = Vec<Rational>;
using RatMat = Mat<Rational>;

inline Rational rat(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

/// Canonical wire form: numerator and denominator as decimal strings.
std::pair<std::string, std::string> rational_to_strings(const Rational& r);

/// Inverse of rational_to_strings. Throws std::invalid_argument on a
/// non-positive denominator or malformed digits.
Rational rational_from_strings(const std::string& num, const std::string& den);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Lexicographic order on coordinate vectors; used for canonical vertex-set
/// comparisons.
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace polytess
