#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mkl/flat.hpp"
#include "mkl/int_poly.hpp"

namespace mkl {

/// Default cap on the number of flats any constructed lattice may hold.
inline constexpr std::size_t kDefaultFlatCap = 1'000'000;

enum class FamilyKind { Boolean, Uniform, Braid };

/// Set on lattices built directly from a named family so that callers can
/// route interval computations to the family-specific formulas.
struct FamilyTag {
  FamilyKind kind;
  long m = 0;  // Uniform: corank parameter
  long d = 0;  // Uniform: rank
  long n = 0;  // Boolean: size; Braid: number of vertices

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// The lattice of flats of a loopless matroid. Flats are stored in the fixed
/// order (rank, bitset value); index 0 is the bottom flat and size()-1 the top.
/// Instances are immutable after construction. Derived tables (up-sets,
/// Möbius rows, join-with-atom table) are built lazily, once, and shared
/// between copies; concurrent readers are safe.
class FlatLattice {
 public:
  using Index = std::uint32_t;

  /// Builds a lattice from closed sets and their ranks. Only structural
  /// sanity is checked here (unique bottom/top, consistent sizes, no
  /// duplicates); see validate_geometric() for the full check.
  static FlatLattice from_flats(std::size_t ground_size, std::vector<std::pair<Flat, int>> flats,
                                std::size_t cap = kDefaultFlatCap);

  std::size_t size() const noexcept { return rank_.size(); }
  std::size_t ground_size() const noexcept { return ground_; }
  int rank() const noexcept { return rank_.back(); }
  int rank(Index i) const noexcept { return rank_[i]; }
  int corank(Index i) const noexcept { return rank() - rank_[i]; }
  Index bottom() const noexcept { return 0; }
  Index top() const noexcept { return static_cast<Index>(size() - 1); }

  Flat flat(Index i) const;
  std::optional<Index> find(const Flat& f) const;
  /// Throws FlatNotInLattice when f is not one of the flats.
  Index index_of(const Flat& f) const;

  /// Half-open index range of the flats of rank r.
  std::pair<Index, Index> rank_range(int r) const;

  bool leq(Index a, Index b) const noexcept {
    return rank_[a] <= rank_[b] && words_subset(bits(a), bits(b), words_);
  }
  /// All flats >= a in ascending index order (a itself first).
  std::span<const Index> up(Index a) const;
  /// All flats <= a in ascending index order (a itself last).
  std::vector<Index> down(Index a) const;
  /// mu(a, b) for every b in up(a), aligned with up(a).
  std::span<const BigInt> mobius_row(Index a) const;
  /// mu(a, b); throws NotComparable when a is not <= b.
  BigInt mobius(Index a, Index b) const;

  Index join(Index a, Index b) const;
  Index meet(Index a, Index b) const;
  /// The atoms (rank-1 flats) below a.
  std::vector<Index> atoms_below(Index a) const;

  const std::optional<FamilyTag>& family() const noexcept { return family_; }
  void set_family(FamilyTag tag) { family_ = tag; }

  const std::uint64_t* bits(Index i) const noexcept { return bits_.data() + std::size_t{i} * words_; }
  std::size_t words_per_flat() const noexcept { return words_; }

 private:
  struct Caches;

  FlatLattice() = default;
  const Caches& caches() const;
  Index cover_with_atom(Index a, Index atom) const;

  std::size_t ground_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> rank_;
  std::vector<Index> rank_start_;
  std::vector<Index> atom_of_element_;
  std::optional<FamilyTag> family_;
  std::shared_ptr<Caches> caches_;
};

/// Full geometric-lattice validation: closed under intersection, graded by
/// the given ranks, atomistic, semimodular, and every element lies in an atom.
/// Throws InvalidLattice describing the first failure.
void validate_geometric(const FlatLattice& lat);

BigInt mobius(const FlatLattice& lat, const Flat& lower, const Flat& upper);

/// chi_M(t) = sum_F mu(bottom, F) t^(rk M - rk F)
IntPoly char_poly(const FlatLattice& lat);
/// Characteristic polynomial of the interval [lo, hi] viewed as a lattice.
IntPoly interval_char_poly(const FlatLattice& lat, FlatLattice::Index lo, FlatLattice::Index hi);

/// The interval [lo, hi] as a standalone lattice on the relabeled ground set
/// members(hi) \ members(lo).
FlatLattice interval(const FlatLattice& lat, FlatLattice::Index lo, FlatLattice::Index hi);
/// Lattice of the localization at F, i.e. the interval [bottom, F].
FlatLattice localization(const FlatLattice& lat, const Flat& f);
/// Lattice of the restriction at F, i.e. the interval [F, top].
FlatLattice restriction(const FlatLattice& lat, const Flat& f);
FlatLattice direct_sum(const FlatLattice& a, const FlatLattice& b, std::size_t cap = kDefaultFlatCap);

enum class WhitneyKind { First, Second };

/// Doubly indexed Whitney numbers w_{i,j} (First) and W_{i,j} (Second).
/// Throws RankOutOfRange unless 0 <= i, j <= rk M.
BigInt whitney(const FlatLattice& lat, WhitneyKind kind, int i, int j);
/// Whitney numbers of the interval [lo, hi] with ranks measured from lo.
/// Indices outside 0..rank return 0.
BigInt interval_whitney(const FlatLattice& lat, FlatLattice::Index lo, FlatLattice::Index hi,
                        WhitneyKind kind, int i, int j);

bool is_modular(const FlatLattice& lat);

}  // namespace mkl
