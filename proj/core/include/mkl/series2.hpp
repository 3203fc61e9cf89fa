#pragma once

#include <cstddef>
#include <vector>

#include "mkl/int_poly.hpp"

namespace mkl {

/// Power series in u whose coefficients are polynomials in t, known exactly
/// through u^order. Higher powers are discarded by every operation; results
/// carry the smallest order that is still exact.
class Series2 {
 public:
  explicit Series2(long order = 0);
  Series2(long order, std::vector<IntPoly> coeffs);

  /// The constant series c.
  static Series2 constant(const IntPoly& c, long order);
  /// c * u^k
  static Series2 monomial(const IntPoly& c, long k, long order);

  long order() const noexcept { return order_; }
  /// Coefficient of u^k (zero polynomial outside 0..order).
  const IntPoly& coeff(long k) const;
  void set_coeff(long k, IntPoly c);

  Series2& operator+=(const Series2& rhs);
  Series2& operator-=(const Series2& rhs);
  Series2& operator*=(const IntPoly& c);

  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
  friend Series2 operator*(const Series2& a, const Series2& b);
  friend Series2 operator*(Series2 a, const IntPoly& c) { return a *= c; }

  /// Multiplicative inverse; the u^0 coefficient must be the constant 1 or -1.
  Series2 inverse() const;
  /// this^e for any integer e (negative powers go through inverse()).
  Series2 pow(long e) const;
  /// this(t, g(t,u)); g must have no u^0 term.
  Series2 compose(const Series2& g) const;
  /// (d/du)^k / k!
  Series2 divided_derivative(long k) const;
  /// u^s * this. For negative s the dropped coefficients must vanish.
  Series2 shifted(long s) const;
  Series2 truncated(long order) const;

  /// Equality of the coefficients of u^0 .. u^through.
  bool agrees_with(const Series2& other, long through) const;

 private:
  long order_;
  std::vector<IntPoly> coeffs_;
};

}  // namespace mkl
