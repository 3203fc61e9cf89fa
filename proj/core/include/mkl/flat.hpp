#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mkl {

/// Subset of a ground set {0, ..., ground_size-1}, stored as a bitset.
/// Ordering is by numeric value of the bitset (element e contributes 2^e).
class Flat {
 public:
  Flat() = default;
  explicit Flat(std::size_t ground_size);
  Flat(std::size_t ground_size, std::span<const std::size_t> members);

  static Flat from_words(std::size_t ground_size, std::span<const std::uint64_t> words);
  static Flat full(std::size_t ground_size);

  std::size_t ground_size() const noexcept { return ground_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool contains(std::size_t e) const noexcept {
    return e < ground_ && ((words_[e / 64] >> (e % 64)) & 1U) != 0;
  }
  void insert(std::size_t e);
  void erase(std::size_t e);
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const Flat& other) const noexcept;
  std::vector<std::size_t> members() const;

  Flat& operator|=(const Flat& rhs);
  Flat& operator&=(const Flat& rhs);
  friend Flat operator|(Flat a, const Flat& b) { return a |= b; }
  friend Flat operator&(Flat a, const Flat& b) { return a &= b; }

  friend bool operator==(const Flat& a, const Flat& b) noexcept {
    return a.ground_ == b.ground_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Flat& a, const Flat& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t ground_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t words_for(std::size_t ground_size) { return (ground_size + 63) / 64; }

/// Subset test on raw word ranges of equal length.
inline bool words_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace mkl

template <>
struct std::hash<mkl::Flat> {
  std::size_t operator()(const mkl::Flat& f) const noexcept { return f.hash(); }
};
