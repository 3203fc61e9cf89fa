#include "mkl/families.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "mkl/error.hpp"
#include "mkl/kl.hpp"
#include "mkl/series2.hpp"

namespace mkl {

namespace {

std::mutex uniform_mutex;
std::map<std::pair<long, long>, IntPoly> uniform_memo;

std::mutex braid_mutex;
std::map<long, IntPoly> braid_memo;

BigInt sign(long e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

BigInt S(long n, long k) { return stirling_or_zero(StirlingKind::Second, n, k); }

/// prod_{j=1}^{lambda_1 - 1} (t - j)^{lambda^t_{j+1}}
IntPoly localization_char(const Partition& lambda) {
  IntPoly out{1};
  for (long j = 1; j < lambda.part(1); ++j) {
    out *= IntPoly::linear_root(j).pow(static_cast<unsigned>(lambda.transpose_part(j + 1)));
  }
  return out;
}

}  // namespace

IntPoly uniform_kl(long m, long d) {
  if (m < 0 || d < 0) throw Error(ErrorKind::IndexOutOfRange, "uniform_kl needs m, d >= 0");
  {
    std::lock_guard lock(uniform_mutex);
    if (auto it = uniform_memo.find({m, d}); it != uniform_memo.end()) return it->second;
  }
  std::vector<BigInt> c;
  if (d == 0) c.push_back(1);
  for (long i = 0; 2 * i < d; ++i) {
    BigInt ci = sign(i) * binomial(m + d, i);
    for (long j = 0; j < i; ++j) {
      for (long k = 2 * j + 1; k <= i + j; ++k) {
        const BigInt cj = uniform_kl(m, k).coeff(static_cast<std::size_t>(j));
        if (cj == 0) continue;
        ci += sign(i + j + k) * multinomial({m + k, i + j - k, d - i - j}) * cj;
      }
    }
    c.push_back(std::move(ci));
  }
  IntPoly p(std::move(c));
  std::lock_guard lock(uniform_mutex);
  return uniform_memo.try_emplace({m, d}, std::move(p)).first->second;
}

BigInt uniform_coeff_closed(long m, long d, int i) {
  if (i < 0 || i > 3) throw Error(ErrorKind::UnsupportedIndex, "closed forms exist only for coefficients 0..3");
  if (i == 0) return 1;
  if (2 * i >= d) return 0;
  const long n = m + d;
  auto mn = [](std::initializer_list<long> parts) { return multinomial(parts); };
  switch (i) {
    case 1:
      return binomial(n, m + 1) - binomial(n, 1);
    case 2:
      return mn({m + 1, d - 3, 2}) - mn({m + 1, d - 2, 1}) + mn({m + 2, d - 2, 0}) - mn({m + 2, d - 3, 1}) +
             binomial(n, 2);
    default:
      break;
  }
  return mn({m + 1, d - 3, 2, 0}) - mn({m + 1, d - 4, 2, 1}) + mn({m + 1, d - 4, 3, 0}) - mn({m + 1, d - 5, 3, 1}) +
         mn({m + 1, d - 5, 2, 2}) - mn({m + 2, d - 3, 1, 0}) + mn({m + 2, d - 4, 1, 1}) - mn({m + 2, d - 5, 2, 1}) +
         mn({m + 2, d - 5, 3, 0}) + mn({m + 3, d - 3, 0, 0}) - mn({m + 3, d - 4, 1, 0}) + mn({m + 3, d - 5, 2, 0}) -
         binomial(n, 3);
}

BigInt m_count(const Partition& lambda) {
  BigInt denom = 1;
  for (long part : lambda.parts()) denom *= factorial(part);
  for (long j = 1; j <= lambda.part(1); ++j) denom *= factorial(lambda.multiplicity(j));
  return factorial(lambda.size()) / denom;
}

IntPoly braid_kl(long n) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "braid_kl needs n >= 1");
  {
    std::lock_guard lock(braid_mutex);
    if (auto it = braid_memo.find(n); it != braid_memo.end()) return it->second;
  }
  // Every partition except 1^n (the bottom flat, whose term is the unknown
  // P_n itself) contributes m(lambda) P_{l(lambda)} chi_lambda.
  IntPoly remainder;
  for (const Partition& lambda : partitions(n)) {
    if (lambda.length() == n) continue;
    remainder += localization_char(lambda) * braid_kl(lambda.length()) * m_count(lambda);
  }
  IntPoly p = kl_solve(remainder, static_cast<int>(n - 1));
  std::lock_guard lock(braid_mutex);
  return braid_memo.try_emplace(n, std::move(p)).first->second;
}

BigInt braid_whitney(long n, long i, long j) {
  if (n < 1 || i < 0 || i > j || j > n - 1) {
    throw Error(ErrorKind::IndexOutOfRange, "braid_whitney needs 0 <= i <= j <= n-1");
  }
  return stirling(StirlingKind::Second, n, n - i) * stirling(StirlingKind::Second, n - i, n - j);
}

namespace {

enum class CubicVariant { Derived, AsPrinted };

BigInt braid_cubic_impl(long n, CubicVariant variant) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "braid_cubic needs n >= 1");
  const bool printed = variant == CubicVariant::AsPrinted;
  // w_{0,2} of M_{l1} + M_{l2}, the localization at a two-block flat.
  const long bracket_length = printed ? 4 : 2;
  BigInt c = stirling_or_zero(StirlingKind::First, n, n - 3);
  for (const Partition& lambda : partitions(n)) {
    if (lambda.length() != bracket_length) continue;
    const long l1 = lambda.part(1);
    const long l2 = lambda.part(2);
    c += m_count(lambda) * (S(l1, l1 - 1) * S(l1 - 1, l1 - 2) + S(l2, l2 - 1) * S(l1, l1 - 1) +
                            S(l2, l2 - 1) * S(l2 - 1, l2 - 2) - S(l1, l1 - 2) - S(l2, l2 - 2));
  }
  c += -S(n, n - 1) * S(n - 1, 3) + S(n, 4);
  // Flats with four blocks: atoms of the localization times the linear
  // coefficient of P_4, which is 1.
  BigInt binom_sum = 0;
  for (const Partition& lambda : partitions(n)) {
    if (lambda.length() != 4) continue;
    BigInt pairs = 0;
    for (long part : lambda.parts()) pairs += binomial(part, 2);
    binom_sum += m_count(lambda) * pairs;
  }
  c += printed ? binom_sum : BigInt(-binom_sum);
  c += 5 * S(n, 5) + 15 * S(n, 6);
  return c;
}

}  // namespace

BigInt braid_cubic(long n) { return braid_cubic_impl(n, CubicVariant::Derived); }

BigInt braid_cubic_as_printed(long n) { return braid_cubic_impl(n, CubicVariant::AsPrinted); }

IntPoly uniform_char_poly(long m, long d) {
  if (m < 0 || d < 0) throw Error(ErrorKind::IndexOutOfRange, "uniform parameters must be non-negative");
  if (d == 0) return IntPoly{1};
  IntPoly chi;
  for (long k = 0; k < d; ++k) {
    const BigInt c = sign(k) * binomial(m + d, k);
    chi.add_scaled(IntPoly{1}, c, static_cast<std::size_t>(d - k));
    chi.add_scaled(IntPoly{1}, -c);
  }
  return chi;
}

IntPoly braid_char_poly(long n) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "braid size must be at least 1");
  IntPoly chi{1};
  for (long j = 1; j < n; ++j) chi *= IntPoly::linear_root(j);
  return chi;
}

IntPoly boolean_char_poly(long n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "boolean size must be non-negative");
  return IntPoly::linear_root(1).pow(static_cast<unsigned>(n));
}

IntPoly family_kl(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyKind::Boolean:
      return IntPoly{1};
    case FamilyKind::Uniform:
      return uniform_kl(tag.m, tag.d);
    case FamilyKind::Braid:
      return braid_kl(tag.n);
  }
  throw Error(ErrorKind::InvariantViolated, "unknown family");
}

IntPoly family_char_poly(const FamilyTag& tag) {
  switch (tag.kind) {
    case FamilyKind::Boolean:
      return boolean_char_poly(tag.n);
    case FamilyKind::Uniform:
      return uniform_char_poly(tag.m, tag.d);
    case FamilyKind::Braid:
      return braid_char_poly(tag.n);
  }
  throw Error(ErrorKind::InvariantViolated, "unknown family");
}

bool gf_check_uniform(long m, long order) {
  if (m < 0 || order < 1) throw Error(ErrorKind::IndexOutOfRange, "gf_check_uniform needs m >= 0, order >= 1");
  // Phi(t, u) = sum_{d >= 1} P_{m,d}(t) u^d and its left-hand transform
  // sum_d t^d P_{m,d}(1/t) u^d, which is a polynomial series.
  Series2 phi(order);
  Series2 lhs(order);
  for (long d = 1; d <= order; ++d) {
    const IntPoly p = uniform_kl(m, d);
    phi.set_coeff(d, p);
    lhs.set_coeff(d, p.reversed(static_cast<std::size_t>(d)));
  }
  const Series2 x = Series2::monomial(IntPoly{-1, 1}, 1, order);           // (t - 1) u
  const Series2 a = (Series2::constant(IntPoly{1}, order) - x).inverse();  // 1 / (1 - tu + u)
  const Series2 one_plus_u = Series2::constant(IntPoly{1}, order) + Series2::monomial(IntPoly{1}, 1, order);
  const Series2 u = Series2::monomial(IntPoly{1}, 1, order);

  const Series2 rhs = x * a * one_plus_u.pow(-m) + a.pow(m + 1) * phi.compose(u * a);
  return lhs.agrees_with(rhs, order);
}

bool gf_check_braid(long order) {
  if (order < 1) throw Error(ErrorKind::IndexOutOfRange, "gf_check_braid needs order >= 1");
  // Psi(t, u) = sum_{n >= 1} P_n(t) u^(n-1), known through one extra power
  // so that the derivative terms stay exact through u^order.
  const long known = order + 1;
  Series2 psi(known);
  Series2 lhs(order);
  for (long n = 1; n <= known + 1; ++n) {
    const IntPoly p = braid_kl(n);
    psi.set_coeff(n - 1, p);
    if (n - 1 <= order) lhs.set_coeff(n - 1, p.reversed(static_cast<std::size_t>(n - 1)));
  }
  Series2 rhs(order);
  // Only nu with |nu~| = |nu| + l(nu) <= order + 1 reach u^order.
  for (long size = 0; size <= order; ++size) {
    for (const Partition& nu : partitions(size)) {
      const long tilde_size = size + nu.length();
      if (tilde_size > order + 1) continue;
      IntPoly factor = IntPoly::constant(m_count(nu.incremented()));
      for (long j = 1; j <= nu.part(1); ++j) {
        factor *= IntPoly::linear_root(j).pow(static_cast<unsigned>(nu.transpose_part(j)));
      }
      const Series2 term = psi.shifted(size + 1).divided_derivative(tilde_size).shifted(tilde_size - 1) * factor;
      rhs += term;
    }
  }
  return lhs.agrees_with(rhs, order);
}

}  // namespace mkl
