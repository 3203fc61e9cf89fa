#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mkl/int_poly.hpp"

namespace mkl {

BigInt factorial(long n);
/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);
/// n! / (k_1! ... k_r!) with n = sum of k_i; zero if any k_i is negative.
BigInt multinomial(std::initializer_list<long> parts);
BigInt multinomial(std::span<const long> parts);
BigInt catalan(long n);
/// (2k-1)!! for k >= 0, with (-1)!! = 1.
BigInt double_factorial_odd(long k);
BigInt bell(long n);

enum class StirlingKind { First, Second };

/// Signed Stirling numbers of the first kind s(n,k) or Stirling numbers of the
/// second kind S(n,k). Requires 0 <= k <= n, otherwise IndexOutOfRange.
BigInt stirling(StirlingKind kind, long n, long k);
/// Same values, but returns 0 instead of throwing for out-of-range indices.
BigInt stirling_or_zero(StirlingKind kind, long n, long k);

/// Integer partition: parts are positive and weakly decreasing.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const noexcept { return parts_; }
  long size() const noexcept { return size_; }
  long length() const noexcept { return static_cast<long>(parts_.size()); }
  /// lambda_i with 1-based index; zero past the end.
  long part(long i) const noexcept;
  /// Conjugate partition.
  Partition transpose() const;
  /// lambda^t_j, 1-based; zero past the end.
  long transpose_part(long j) const;
  /// Multiplicity of part size j.
  long multiplicity(long j) const;
  /// Adds 1 to every part.
  Partition incremented() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<long> parts_;
  long size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(long n);

/// Calls visit(block_of) for every set partition of {0..n-1}, where
/// block_of[i] is the block index of i as a restricted growth string
/// (block_of[0] == 0, block_of[i] <= 1 + max(block_of[0..i-1])).
void for_each_set_partition(std::size_t n, const std::function<void(std::span<const int>)>& visit);

}  // namespace mkl
