#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphdiv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational with 64-bit parts, always stored in lowest terms with a
/// positive denominator. Only used for the small bounds of the balance
/// inequality, where the operands are edge counts and divisor degrees.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Dense integer matrix in row-major order.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Invariant factors of the integer matrix: the nonzero diagonal of its
/// Smith normal form, each dividing the next. Units (1) are kept.
std::vector<BigInt> smith_diagonal(const IntMatrix& m);

/// Solves m x = b over Q for square nonsingular m. Returns empty on singular m.
std::vector<BigRational> solve_rational(const IntMatrix& m, const std::vector<std::int64_t>& b);

}  // namespace graphdiv
