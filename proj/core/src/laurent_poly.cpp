#include "mkl/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mkl {

LaurentPoly::LaurentPoly(long lowest, std::vector<BigInt> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, long exponent) {
  return LaurentPoly(exponent, std::vector<BigInt>{c});
}

LaurentPoly LaurentPoly::from_poly(const IntPoly& p, long shift) {
  return LaurentPoly(shift, p.coeffs());
}

LaurentPoly LaurentPoly::from_poly_inverse_square(const IntPoly& p, long shift) {
  if (p.is_zero()) return {};
  const long deg = p.degree();
  std::vector<BigInt> v(static_cast<std::size_t>(2 * deg + 1));
  for (long i = 0; i <= deg; ++i) v[static_cast<std::size_t>(2 * (deg - i))] = p.coeffs()[i];
  return LaurentPoly(shift - 2 * deg, std::move(v));
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  lowest_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

BigInt LaurentPoly::coeff(long exponent) const {
  const long k = exponent - lowest_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool LaurentPoly::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c < 0; });
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void LaurentPoly::accumulate(const LaurentPoly& rhs, int sign) {
  if (rhs.is_zero()) return;
  if (is_zero()) {
    *this = rhs;
    if (sign < 0) for (auto& c : coeffs_) c = -c;
    return;
  }
  const long lo = std::min(lowest_, rhs.lowest_);
  const long hi = std::max(highest(), rhs.highest());
  if (lo < lowest_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lowest_ - lo), BigInt(0));
  lowest_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto off = static_cast<std::size_t>(rhs.lowest_ - lo);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    if (sign > 0) {
      coeffs_[off + i] += rhs.coeffs_[i];
    } else {
      coeffs_[off + i] -= rhs.coeffs_[i];
    }
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  accumulate(rhs, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  accumulate(rhs, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly(a.lowest_ + b.lowest_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) { *this += a * b; }

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) return {};
  LaurentPoly out = *this;
  out.lowest_ += k;
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const long e = lowest_ + static_cast<long>(k);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag.get_str();
    if (e != 0) os << var;
    if (e != 0 && e != 1) os << '^' << e;
  }
  return os.str();
}

std::vector<std::string> LaurentPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

}  // namespace mkl
