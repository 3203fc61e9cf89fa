#include "mkl/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mkl/error.hpp"

namespace mkl {

namespace {

struct StirlingTables {
  std::mutex mu;
  std::vector<std::vector<BigInt>> first{{1}};
  std::vector<std::vector<BigInt>> second{{1}};

  void extend_to(long n) {
    while (static_cast<long>(first.size()) <= n) {
      const long m = static_cast<long>(first.size());
      const auto& pf = first.back();
      const auto& ps = second.back();
      std::vector<BigInt> nf(static_cast<std::size_t>(m + 1));
      std::vector<BigInt> ns(static_cast<std::size_t>(m + 1));
      for (long k = 1; k <= m; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        BigInt a = pf[ku - 1];
        BigInt b = k < m ? pf[ku] : BigInt(0);
        nf[ku] = a - BigInt(m - 1) * b;
        BigInt c = ps[ku - 1];
        BigInt d = k < m ? ps[ku] : BigInt(0);
        ns[ku] = c + BigInt(k) * d;
      }
      first.push_back(std::move(nf));
      second.push_back(std::move(ns));
    }
  }
};

StirlingTables& stirling_tables() {
  static StirlingTables tables;
  return tables;
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) return 0;
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt multinomial(std::span<const long> parts) {
  long total = 0;
  for (long k : parts) {
    if (k < 0) return 0;
    total += k;
  }
  BigInt r = 1;
  long running = 0;
  for (long k : parts) {
    running += k;
    r *= binomial(running, k);
  }
  return r;
}

BigInt multinomial(std::initializer_list<long> parts) {
  return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

BigInt catalan(long n) {
  if (n < 0) return 0;
  BigInt r = binomial(2 * n, n);
  r /= n + 1;
  return r;
}

BigInt double_factorial_odd(long k) {
  BigInt r = 1;
  for (long j = 1; j <= 2 * k - 1; j += 2) r *= j;
  return r;
}

BigInt bell(long n) {
  BigInt total = 0;
  for (long k = 0; k <= n; ++k) total += stirling_or_zero(StirlingKind::Second, n, k);
  return total;
}

BigInt stirling(StirlingKind kind, long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "Stirling index (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  auto& t = stirling_tables();
  std::lock_guard lock(t.mu);
  t.extend_to(n);
  const auto& table = kind == StirlingKind::First ? t.first : t.second;
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt stirling_or_zero(StirlingKind kind, long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return stirling(kind, n, k);
}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  std::erase_if(parts_, [](long p) { return p == 0; });
  if (std::any_of(parts_.begin(), parts_.end(), [](long p) { return p < 0; })) {
    throw Error(ErrorKind::ParseError, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::part(long i) const noexcept {
  return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::transpose() const {
  std::vector<long> t;
  const long width = part(1);
  for (long j = 1; j <= width; ++j) t.push_back(transpose_part(j));
  return Partition(std::move(t));
}

long Partition::transpose_part(long j) const {
  if (j < 1) return 0;
  return static_cast<long>(std::count_if(parts_.begin(), parts_.end(), [j](long p) { return p >= j; }));
}

long Partition::multiplicity(long j) const {
  return static_cast<long>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::incremented() const {
  std::vector<long> v = parts_;
  for (auto& p : v) ++p;
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::vector<Partition> partitions(long n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor for reverse-lexicographic order.
  std::vector<long> a{n};
  while (true) {
    out.emplace_back(a);
    long rem = 0;
    while (!a.empty() && a.back() == 1) {
      ++rem;
      a.pop_back();
    }
    if (a.empty()) break;
    const long v = --a.back();
    ++rem;
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    a.push_back(rem);
  }
  return out;
}

void for_each_set_partition(std::size_t n, const std::function<void(std::span<const int>)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<int> a(n, 0);
  std::vector<int> prefix_max(n, 0);
  while (true) {
    visit(a);
    // Find the rightmost position that can be incremented.
    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace mkl
