#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mkl {

using BigInt = mpz_class;

/// Dense univariate polynomial in t with arbitrary-precision coefficients.
/// Index i of coeffs() holds the coefficient of t^i. The representation is
/// canonical: no trailing zeros, and the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// (t - root)
  static IntPoly linear_root(long root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);

  /// Adds c * t^shift * rhs in place.
  void add_scaled(const IntPoly& rhs, const BigInt& c, std::size_t shift = 0);

  /// t^shift * p
  IntPoly shifted(std::size_t shift) const;
  /// t^n p(1/t). Throws DegreeTooLarge when deg p > n.
  IntPoly reversed(std::size_t n) const;
  /// Coefficients of t^0 .. t^(n-1).
  IntPoly truncated(std::size_t n) const;
  IntPoly pow(unsigned exponent) const;
  BigInt eval(const BigInt& t) const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "1 + 27t + 120t^2".
  std::string to_string(char var = 't') const;
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

}  // namespace mkl
