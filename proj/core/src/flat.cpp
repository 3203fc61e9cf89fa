#include "mkl/flat.hpp"

#include <bit>

#include "mkl/error.hpp"

namespace mkl {

Flat::Flat(std::size_t ground_size) : ground_(ground_size), words_(words_for(ground_size), 0) {}

Flat::Flat(std::size_t ground_size, std::span<const std::size_t> members) : Flat(ground_size) {
  for (std::size_t e : members) insert(e);
}

Flat Flat::from_words(std::size_t ground_size, std::span<const std::uint64_t> words) {
  Flat f(ground_size);
  for (std::size_t i = 0; i < f.words_.size() && i < words.size(); ++i) f.words_[i] = words[i];
  return f;
}

Flat Flat::full(std::size_t ground_size) {
  Flat f(ground_size);
  for (std::size_t e = 0; e < ground_size; ++e) f.insert(e);
  return f;
}

void Flat::insert(std::size_t e) {
  if (e >= ground_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(e) + " outside ground set of size " + std::to_string(ground_));
  }
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void Flat::erase(std::size_t e) {
  if (e < ground_) words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

std::size_t Flat::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Flat::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Flat::is_subset_of(const Flat& other) const noexcept {
  if (other.words_.size() != words_.size()) return false;
  return words_subset(words_.data(), other.words_.data(), words_.size());
}

std::vector<std::size_t> Flat::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

Flat& Flat::operator|=(const Flat& rhs) {
  for (std::size_t i = 0; i < words_.size() && i < rhs.words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

Flat& Flat::operator&=(const Flat& rhs) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < rhs.words_.size() ? rhs.words_[i] : 0;
  return *this;
}

std::strong_ordering operator<=>(const Flat& a, const Flat& b) noexcept {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Flat::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ ground_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace mkl
