#include <gtest/gtest.h>

#include <map>

#include "mkl/combinatorics.hpp"
#include "mkl/error.hpp"
#include "mkl/families.hpp"
#include "oracles.hpp"

using mkl::BigInt;
using mkl::Partition;
using mkl::StirlingKind;

TEST(Combinatorics, Basics) {
  EXPECT_EQ(mkl::factorial(10), 3628800);
  EXPECT_EQ(mkl::binomial(10, 3), 120);
  EXPECT_EQ(mkl::binomial(3, 5), 0);
  EXPECT_EQ(mkl::binomial(3, -1), 0);
  EXPECT_EQ(mkl::multinomial({2, 1, 1}), 12);
  EXPECT_EQ(mkl::multinomial({2, -1, 3}), 0);
  EXPECT_EQ(mkl::catalan(4), 14);
  EXPECT_EQ(mkl::double_factorial_odd(0), 1);
  EXPECT_EQ(mkl::double_factorial_odd(4), 105);
}

TEST(Combinatorics, StirlingAgainstSetPartitions) {
  for (int n = 0; n <= 8; ++n) {
    std::map<long, long> by_blocks;
    for (const auto& p : oracle::set_partitions(n)) ++by_blocks[static_cast<long>(p.size())];
    EXPECT_EQ(mkl::bell(n), static_cast<long>(oracle::set_partitions(n).size()));
    for (long k = 0; k <= n; ++k) EXPECT_EQ(mkl::stirling(StirlingKind::Second, n, k), by_blocks[k]) << n << "," << k;
  }
  EXPECT_EQ(mkl::stirling(StirlingKind::Second, 4, 2), 7);
}

TEST(Combinatorics, StirlingFirstKind) {
  // sum_k s(n,k) t^k = t (t-1) ... (t-n+1)
  for (long n = 0; n <= 12; ++n) {
    mkl::IntPoly falling{1};
    for (long j = 0; j < n; ++j) falling *= mkl::IntPoly::linear_root(j);
    for (long k = 0; k <= n; ++k) EXPECT_EQ(mkl::stirling(StirlingKind::First, n, k), falling.coeff(static_cast<std::size_t>(k)));
    EXPECT_EQ(mkl::stirling(StirlingKind::First, n, n), 1);
    if (n >= 1) {
      EXPECT_EQ(mkl::stirling(StirlingKind::Second, n, n - 1), mkl::binomial(n, 2));
    }
  }
  EXPECT_THROW((void)mkl::stirling(StirlingKind::First, 3, 4), mkl::Error);
  EXPECT_EQ(mkl::stirling_or_zero(StirlingKind::First, 3, 4), 0);
}

TEST(Partitions, CountsAndOrder) {
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(static_cast<long>(mkl::partitions(n).size()), expected[n]);
  const auto p4 = mkl::partitions(4);
  EXPECT_EQ(p4.front(), Partition({4}));
  EXPECT_EQ(p4.back(), Partition({1, 1, 1, 1}));
}

TEST(Partitions, Transpose) {
  const Partition lam({4, 2, 1});
  EXPECT_EQ(lam.transpose(), Partition({3, 2, 1, 1}));
  EXPECT_EQ(lam.transpose().transpose(), lam);
  EXPECT_EQ(lam.transpose_part(2), 2);
  EXPECT_EQ(lam.transpose_part(9), 0);
  EXPECT_EQ(lam.part(4), 0);
  EXPECT_EQ(lam.multiplicity(1), 1);
  EXPECT_EQ(lam.incremented(), Partition({5, 3, 2}));
  EXPECT_EQ(lam.size(), 7);
}

TEST(Partitions, FlatCountMatchesSetPartitionTypes) {
  for (int n = 1; n <= 8; ++n) {
    std::map<std::vector<long>, long> by_type;
    for (const auto& p : oracle::set_partitions(n)) {
      std::vector<long> sizes;
      for (const auto& b : p) sizes.push_back(static_cast<long>(b.size()));
      std::sort(sizes.rbegin(), sizes.rend());
      ++by_type[sizes];
    }
    for (const auto& lam : mkl::partitions(n)) EXPECT_EQ(mkl::m_count(lam), by_type[lam.parts()]) << lam.to_string();
  }
  EXPECT_EQ(mkl::m_count(Partition({2, 1, 1})), 6);
  EXPECT_EQ(mkl::m_count(Partition({2, 2})), 3);
  EXPECT_EQ(mkl::m_count(Partition({1, 1, 1, 1, 1})), 1);
}

TEST(SetPartitions, RestrictedGrowthStrings) {
  std::size_t count = 0;
  mkl::for_each_set_partition(6, [&](std::span<const int> rgs) {
    ++count;
    int mx = -1;
    for (int b : rgs) {
      EXPECT_LE(b, mx + 1);
      mx = std::max(mx, b);
    }
  });
  EXPECT_EQ(count, 203U);
}
