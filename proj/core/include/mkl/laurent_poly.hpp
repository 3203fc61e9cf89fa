#pragma once

#include <string>
#include <vector>

#include "mkl/int_poly.hpp"

namespace mkl {

/// Univariate Laurent polynomial in q over the integers. coeffs()[k] is the
/// coefficient of q^(lowest() + k). Canonical form has nonzero coefficients at
/// both ends; the zero element has no coefficients and lowest() == 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long lowest, std::vector<BigInt> coeffs);

  static LaurentPoly monomial(const BigInt& c, long exponent);
  static LaurentPoly from_poly(const IntPoly& p, long shift = 0);
  /// q^shift * p(q^-2)
  static LaurentPoly from_poly_inverse_square(const IntPoly& p, long shift);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long lowest() const noexcept { return lowest_; }
  /// Highest exponent; meaningless for zero.
  long highest() const noexcept { return lowest_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(long exponent) const;

  bool has_negative_coefficient() const;
  bool has_negative_exponent() const { return !is_zero() && lowest_ < 0; }
  /// Value at q = 1.
  BigInt at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  /// this += a * b
  void add_product(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly shifted(long k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'q') const;
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize();
  void accumulate(const LaurentPoly& rhs, int sign);

  long lowest_ = 0;
  std::vector<BigInt> coeffs_;
};

}  // namespace mkl
