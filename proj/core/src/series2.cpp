#include "mkl/series2.hpp"

#include <algorithm>

#include "mkl/combinatorics.hpp"
#include "mkl/error.hpp"

namespace mkl {

namespace {

const IntPoly kZero;

}  // namespace

Series2::Series2(long order) : order_(order), coeffs_(static_cast<std::size_t>(std::max(order + 1, 0L))) {}

Series2::Series2(long order, std::vector<IntPoly> coeffs) : Series2(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

Series2 Series2::constant(const IntPoly& c, long order) { return monomial(c, 0, order); }

Series2 Series2::monomial(const IntPoly& c, long k, long order) {
  Series2 s(order);
  if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

const IntPoly& Series2::coeff(long k) const {
  if (k < 0 || k > order_) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void Series2::set_coeff(long k, IntPoly c) {
  if (k < 0 || k > order_) throw Error(ErrorKind::IndexOutOfRange, "series coefficient beyond truncation order");
  coeffs_[static_cast<std::size_t>(k)] = std::move(c);
}

Series2& Series2::operator+=(const Series2& rhs) {
  *this = truncated(std::min(order_, rhs.order_));
  for (long k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] += rhs.coeff(k);
  return *this;
}

Series2& Series2::operator-=(const Series2& rhs) {
  *this = truncated(std::min(order_, rhs.order_));
  for (long k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] -= rhs.coeff(k);
  return *this;
}

Series2& Series2::operator*=(const IntPoly& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
  Series2 out(std::min(a.order_, b.order_));
  for (long i = 0; i <= out.order_; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (long j = 0; i + j <= out.order_; ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

Series2 Series2::inverse() const {
  const IntPoly& c0 = coeff(0);
  if (c0.degree() != 0 || (c0.coeff(0) != 1 && c0.coeff(0) != -1)) {
    throw Error(ErrorKind::InvariantViolated, "series inverse needs constant term +1 or -1");
  }
  const BigInt inv0 = c0.coeff(0);  // its own inverse
  Series2 out(order_);
  out.coeffs_[0] = IntPoly::constant(inv0);
  for (long k = 1; k <= order_; ++k) {
    IntPoly acc;
    for (long j = 1; j <= k; ++j) acc += coeff(j) * out.coeff(k - j);
    out.coeffs_[static_cast<std::size_t>(k)] = acc * BigInt(-inv0);
  }
  return out;
}

Series2 Series2::pow(long e) const {
  Series2 base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Series2 result = constant(IntPoly{1}, order_);
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Series2 Series2::compose(const Series2& g) const {
  if (!g.coeff(0).is_zero()) throw Error(ErrorKind::InvariantViolated, "substituted series must vanish at u = 0");
  const long ord = std::min(order_, g.order_);
  // Horner from the top; each multiplication by g raises the valuation.
  Series2 out = constant(coeff(ord), ord);
  for (long k = ord; k-- > 0;) {
    out = out * g;
    out.coeffs_[0] += coeff(k);
  }
  return out;
}

Series2 Series2::divided_derivative(long k) const {
  Series2 out(order_ - k);
  for (long j = 0; j <= out.order_; ++j) {
    out.coeffs_[static_cast<std::size_t>(j)] = coeff(j + k) * binomial(j + k, k);
  }
  return out;
}

Series2 Series2::shifted(long s) const {
  if (s < 0) {
    for (long k = 0; k < -s; ++k) {
      if (!coeff(k).is_zero()) throw Error(ErrorKind::InvariantViolated, "negative u-power after shift");
    }
  }
  Series2 out(order_ + s);
  for (long k = 0; k <= out.order_; ++k) out.coeffs_[static_cast<std::size_t>(k)] = coeff(k - s);
  return out;
}

Series2 Series2::truncated(long order) const {
  Series2 out(std::min(order, order_));
  for (long k = 0; k <= out.order_; ++k) out.coeffs_[static_cast<std::size_t>(k)] = coeff(k);
  return out;
}

bool Series2::agrees_with(const Series2& other, long through) const {
  if (through > order_ || through > other.order_) {
    throw Error(ErrorKind::IndexOutOfRange, "comparison beyond known series coefficients");
  }
  for (long k = 0; k <= through; ++k) {
    if (!(coeff(k) == other.coeff(k))) return false;
  }
  return true;
}

}  // namespace mkl
