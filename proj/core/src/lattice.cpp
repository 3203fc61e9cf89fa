#include "mkl/lattice.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>

#include "mkl/error.hpp"

namespace mkl {

namespace {

constexpr FlatLattice::Index kNone = std::numeric_limits<FlatLattice::Index>::max();

int compare_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

struct FlatLattice::Caches {
  std::once_flag up_once;
  std::vector<std::vector<Index>> up;

  std::unique_ptr<std::once_flag[]> mu_once;
  std::vector<std::vector<BigInt>> mu;

  std::once_flag cover_once;
  // cover[a][t - first_atom] = a v t
  std::vector<std::vector<Index>> cover;
};

FlatLattice FlatLattice::from_flats(std::size_t ground_size, std::vector<std::pair<Flat, int>> flats,
                                    std::size_t cap) {
  if (flats.empty()) throw Error(ErrorKind::InvalidLattice, "no flats given");
  if (flats.size() > cap) {
    throw Error(ErrorKind::TooLarge, std::to_string(flats.size()) + " flats exceed the cap of " +
                                         std::to_string(cap));
  }
  if (flats.size() >= std::numeric_limits<Index>::max()) {
    throw Error(ErrorKind::TooLarge, "flat count does not fit the index type");
  }
  for (const auto& [f, r] : flats) {
    if (f.ground_size() != ground_size) {
      throw Error(ErrorKind::InvalidLattice, "flat built over a different ground set");
    }
    if (r < 0) throw Error(ErrorKind::InvalidLattice, "negative rank");
  }
  std::sort(flats.begin(), flats.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.first < y.first;
  });
  for (std::size_t i = 1; i < flats.size(); ++i) {
    if (flats[i].first == flats[i - 1].first) {
      throw Error(ErrorKind::InvalidLattice, "duplicate flat");
    }
  }
  if (flats.front().second != 0) throw Error(ErrorKind::InvalidLattice, "no flat of rank 0");
  if (flats.size() > 1 && flats[1].second == 0) {
    throw Error(ErrorKind::InvalidLattice, "more than one flat of rank 0");
  }
  const int top_rank = flats.back().second;
  if (flats.size() > 1 && flats[flats.size() - 2].second == top_rank) {
    throw Error(ErrorKind::InvalidLattice, "more than one maximal-rank flat");
  }

  FlatLattice lat;
  lat.ground_ = ground_size;
  lat.words_ = words_for(ground_size);
  lat.bits_.resize(flats.size() * lat.words_);
  lat.rank_.resize(flats.size());
  lat.rank_start_.assign(static_cast<std::size_t>(top_rank) + 2, 0);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    const auto w = flats[i].first.words();
    std::copy(w.begin(), w.end(), lat.bits_.begin() + static_cast<long>(i * lat.words_));
    lat.rank_[i] = flats[i].second;
  }
  {
    std::size_t i = 0;
    for (int r = 0; r <= top_rank + 1; ++r) {
      while (i < flats.size() && flats[i].second < r) ++i;
      lat.rank_start_[static_cast<std::size_t>(r)] = static_cast<Index>(i);
    }
  }
  lat.atom_of_element_.assign(ground_size, kNone);
  if (top_rank >= 1) {
    const auto [lo, hi] = lat.rank_range(1);
    for (Index a = lo; a < hi; ++a) {
      for (std::size_t e : lat.flat(a).members()) lat.atom_of_element_[e] = a;
    }
  }
  lat.caches_ = std::make_shared<Caches>();
  lat.caches_->mu_once = std::make_unique<std::once_flag[]>(flats.size());
  lat.caches_->mu.resize(flats.size());
  return lat;
}

Flat FlatLattice::flat(Index i) const {
  return Flat::from_words(ground_, std::span<const std::uint64_t>(bits(i), words_));
}

std::pair<FlatLattice::Index, FlatLattice::Index> FlatLattice::rank_range(int r) const {
  if (r < 0 || r > rank()) return {0, 0};
  return {rank_start_[static_cast<std::size_t>(r)], rank_start_[static_cast<std::size_t>(r) + 1]};
}

std::optional<FlatLattice::Index> FlatLattice::find(const Flat& f) const {
  if (f.ground_size() != ground_) return std::nullopt;
  const std::uint64_t* key = f.words().data();
  for (int r = 0; r <= rank(); ++r) {
    auto [lo, hi] = rank_range(r);
    while (lo < hi) {
      const Index mid = lo + (hi - lo) / 2;
      const int c = compare_words(bits(mid), key, words_);
      if (c == 0) return mid;
      if (c < 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
  }
  return std::nullopt;
}

FlatLattice::Index FlatLattice::index_of(const Flat& f) const {
  auto idx = find(f);
  if (!idx) throw Error(ErrorKind::FlatNotInLattice, "set is not a flat of this lattice");
  return *idx;
}

const FlatLattice::Caches& FlatLattice::caches() const {
  Caches& c = *caches_;
  std::call_once(c.up_once, [&] {
    const std::size_t n = size();
    c.up.resize(n);
    for (Index a = 0; a < n; ++a) {
      auto& row = c.up[a];
      row.push_back(a);
      const Index start = rank_start_[static_cast<std::size_t>(rank_[a]) + 1];
      for (Index b = start; b < n; ++b) {
        if (words_subset(bits(a), bits(b), words_)) row.push_back(b);
      }
      row.shrink_to_fit();
    }
  });
  return c;
}

std::span<const FlatLattice::Index> FlatLattice::up(Index a) const { return caches().up[a]; }

std::vector<FlatLattice::Index> FlatLattice::down(Index a) const {
  std::vector<Index> out;
  for (Index b = 0; b <= a; ++b) {
    if (leq(b, a)) out.push_back(b);
  }
  return out;
}

std::span<const BigInt> FlatLattice::mobius_row(Index a) const {
  const Caches& c = caches();
  std::call_once(c.mu_once[a], [&] {
    const auto ups = up(a);
    thread_local std::vector<std::int64_t> pos;
    if (pos.size() < size()) pos.assign(size(), -1);
    for (std::size_t k = 0; k < ups.size(); ++k) pos[ups[k]] = static_cast<std::int64_t>(k);
    std::vector<BigInt> acc(ups.size());
    std::vector<BigInt> mu(ups.size());
    // Ascending index order is a linear extension, so acc[k] is final when reached.
    for (std::size_t k = 0; k < ups.size(); ++k) {
      mu[k] = k == 0 ? BigInt(1) : BigInt(-acc[k]);
      if (mu[k] == 0) continue;
      for (Index e : up(ups[k])) {
        acc[static_cast<std::size_t>(pos[e])] += mu[k];
      }
    }
    for (Index b : ups) pos[b] = -1;
    caches_->mu[a] = std::move(mu);
  });
  return caches_->mu[a];
}

BigInt FlatLattice::mobius(Index a, Index b) const {
  if (!leq(a, b)) throw Error(ErrorKind::NotComparable, "mobius(E,F) requires E <= F");
  const auto ups = up(a);
  const auto it = std::lower_bound(ups.begin(), ups.end(), b);
  return mobius_row(a)[static_cast<std::size_t>(it - ups.begin())];
}

FlatLattice::Index FlatLattice::cover_with_atom(Index a, Index atom) const {
  Caches& c = *caches_;
  caches();
  std::call_once(c.cover_once, [&] {
    const auto [alo, ahi] = rank_range(1);
    const std::size_t num_atoms = ahi - alo;
    c.cover.assign(size(), std::vector<Index>(num_atoms, kNone));
    for (Index f = 0; f < size(); ++f) {
      auto& row = c.cover[f];
      for (Index t = alo; t < ahi; ++t) {
        if (leq(t, f)) row[t - alo] = f;
      }
      for (Index g : up(f)) {
        if (rank_[g] != rank_[f] + 1) continue;
        for (Index t = alo; t < ahi; ++t) {
          if (row[t - alo] == kNone && leq(t, g)) row[t - alo] = g;
        }
      }
    }
  });
  const Index r = c.cover[a][atom - rank_start_[1]];
  if (r == kNone) throw Error(ErrorKind::InvalidLattice, "join with atom undefined; lattice not geometric");
  return r;
}

FlatLattice::Index FlatLattice::join(Index a, Index b) const {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  Index cur = a;
  for (std::size_t e : flat(b).members()) {
    if ((bits(cur)[e / 64] >> (e % 64) & 1U) != 0) continue;
    const Index atom = atom_of_element_[e];
    if (atom == kNone) throw Error(ErrorKind::InvalidLattice, "element not covered by an atom");
    cur = cover_with_atom(cur, atom);
  }
  return cur;
}

FlatLattice::Index FlatLattice::meet(Index a, Index b) const {
  if (leq(a, b)) return a;
  if (leq(b, a)) return b;
  const Flat f = flat(a) & flat(b);
  auto idx = find(f);
  if (!idx) throw Error(ErrorKind::InvalidLattice, "flats not closed under intersection");
  return *idx;
}

std::vector<FlatLattice::Index> FlatLattice::atoms_below(Index a) const {
  std::vector<Index> out;
  const auto [lo, hi] = rank_range(1);
  for (Index t = lo; t < hi; ++t) {
    if (leq(t, a)) out.push_back(t);
  }
  return out;
}

void validate_geometric(const FlatLattice& lat) {
  using Index = FlatLattice::Index;
  const std::size_t n = lat.size();
  if (!lat.flat(lat.bottom()).empty()) throw Error(ErrorKind::InvalidLattice, "bottom flat is not empty");
  if (!(lat.flat(lat.top()) == Flat::full(lat.ground_size()))) {
    throw Error(ErrorKind::InvalidLattice, "top flat is not the whole ground set");
  }
  // Strict containment must raise the rank; covers must raise it by exactly one.
  for (Index b = 1; b < n; ++b) {
    std::vector<Index> below;
    for (Index a = 0; a < n; ++a) {
      if (a == b || !lat.leq(a, b)) continue;
      if (lat.rank(a) >= lat.rank(b)) throw Error(ErrorKind::InvalidLattice, "rank not strictly increasing");
      below.push_back(a);
    }
    for (Index a : below) {
      bool maximal = true;
      for (Index c : below) {
        if (c != a && lat.leq(a, c)) {
          maximal = false;
          break;
        }
      }
      if (maximal && lat.rank(a) != lat.rank(b) - 1) {
        throw Error(ErrorKind::InvalidLattice, "lattice is not graded by the given ranks");
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (!lat.find(lat.flat(a) & lat.flat(b))) {
        throw Error(ErrorKind::InvalidLattice, "flats not closed under intersection");
      }
    }
  }
  for (Index a = 1; a < n; ++a) {
    Flat u(lat.ground_size());
    for (Index t : lat.atoms_below(a)) u |= lat.flat(t);
    if (!(u == lat.flat(a))) throw Error(ErrorKind::InvalidLattice, "lattice is not atomistic");
  }
  // Semimodularity, with joins found by scanning (no cached tables yet).
  auto scan_join = [&](Index a, Index b) -> Index {
    const Flat u = lat.flat(a) | lat.flat(b);
    for (Index c = 0; c < n; ++c) {
      if (u.is_subset_of(lat.flat(c))) return c;
    }
    throw Error(ErrorKind::InvalidLattice, "no upper bound");
  };
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const Index j = scan_join(a, b);
      const Index m = lat.meet(a, b);
      if (lat.rank(a) + lat.rank(b) < lat.rank(j) + lat.rank(m)) {
        throw Error(ErrorKind::InvalidLattice, "lattice is not semimodular");
      }
    }
  }
}

BigInt mobius(const FlatLattice& lat, const Flat& lower, const Flat& upper) {
  return lat.mobius(lat.index_of(lower), lat.index_of(upper));
}

IntPoly interval_char_poly(const FlatLattice& lat, FlatLattice::Index lo, FlatLattice::Index hi) {
  if (!lat.leq(lo, hi)) throw Error(ErrorKind::NotComparable, "interval requires lo <= hi");
  const auto ups = lat.up(lo);
  const auto mu = lat.mobius_row(lo);
  const int r = lat.rank(hi);
  std::vector<BigInt> c(static_cast<std::size_t>(r - lat.rank(lo)) + 1);
  for (std::size_t k = 0; k < ups.size(); ++k) {
    if (!lat.leq(ups[k], hi)) continue;
    c[static_cast<std::size_t>(r - lat.rank(ups[k]))] += mu[k];
  }
  return IntPoly(std::move(c));
}

IntPoly char_poly(const FlatLattice& lat) { return interval_char_poly(lat, lat.bottom(), lat.top()); }

FlatLattice interval(const FlatLattice& lat, FlatLattice::Index lo, FlatLattice::Index hi) {
  if (!lat.leq(lo, hi)) throw Error(ErrorKind::NotComparable, "interval requires lo <= hi");
  const Flat low = lat.flat(lo);
  std::vector<std::size_t> relabel(lat.ground_size(), 0);
  std::size_t next = 0;
  for (std::size_t e : lat.flat(hi).members()) {
    if (!low.contains(e)) relabel[e] = next++;
  }
  std::vector<std::pair<Flat, int>> flats;
  for (FlatLattice::Index f : lat.up(lo)) {
    if (!lat.leq(f, hi)) continue;
    Flat g(next);
    for (std::size_t e : lat.flat(f).members()) {
      if (!low.contains(e)) g.insert(relabel[e]);
    }
    flats.emplace_back(std::move(g), lat.rank(f) - lat.rank(lo));
  }
  return FlatLattice::from_flats(next, std::move(flats));
}

FlatLattice localization(const FlatLattice& lat, const Flat& f) {
  return interval(lat, lat.bottom(), lat.index_of(f));
}

FlatLattice restriction(const FlatLattice& lat, const Flat& f) {
  return interval(lat, lat.index_of(f), lat.top());
}

FlatLattice direct_sum(const FlatLattice& a, const FlatLattice& b, std::size_t cap) {
  if (a.size() * b.size() > cap) {
    throw Error(ErrorKind::TooLarge, "direct sum would have " + std::to_string(a.size() * b.size()) +
                                         " flats, above the cap of " + std::to_string(cap));
  }
  const std::size_t ground = a.ground_size() + b.ground_size();
  std::vector<std::pair<Flat, int>> flats;
  flats.reserve(a.size() * b.size());
  for (FlatLattice::Index i = 0; i < a.size(); ++i) {
    const auto ma = a.flat(i).members();
    for (FlatLattice::Index j = 0; j < b.size(); ++j) {
      Flat f(ground);
      for (std::size_t e : ma) f.insert(e);
      for (std::size_t e : b.flat(j).members()) f.insert(a.ground_size() + e);
      flats.emplace_back(std::move(f), a.rank(i) + b.rank(j));
    }
  }
  return FlatLattice::from_flats(ground, std::move(flats), cap);
}

BigInt interval_whitney(const FlatLattice& lat, FlatLattice::Index lo, FlatLattice::Index hi,
                        WhitneyKind kind, int i, int j) {
  const int base = lat.rank(lo);
  const int span = lat.rank(hi) - base;
  if (i < 0 || j < 0 || i > span || j > span || i > j) return 0;
  BigInt total = 0;
  for (FlatLattice::Index e : lat.up(lo)) {
    if (lat.rank(e) - base != i || !lat.leq(e, hi)) continue;
    const auto ups = lat.up(e);
    if (kind == WhitneyKind::Second) {
      for (FlatLattice::Index f : ups) {
        if (lat.rank(f) - base == j && lat.leq(f, hi)) ++total;
      }
    } else {
      const auto mu = lat.mobius_row(e);
      for (std::size_t k = 0; k < ups.size(); ++k) {
        if (lat.rank(ups[k]) - base == j && lat.leq(ups[k], hi)) total += mu[k];
      }
    }
  }
  return total;
}

BigInt whitney(const FlatLattice& lat, WhitneyKind kind, int i, int j) {
  if (i < 0 || j < 0 || i > lat.rank() || j > lat.rank()) {
    throw Error(ErrorKind::RankOutOfRange, "Whitney indices (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") outside 0.." +
                                               std::to_string(lat.rank()));
  }
  return interval_whitney(lat, lat.bottom(), lat.top(), kind, i, j);
}

bool is_modular(const FlatLattice& lat) {
  for (FlatLattice::Index a = 0; a < lat.size(); ++a) {
    for (FlatLattice::Index b = a + 1; b < lat.size(); ++b) {
      if (lat.leq(a, b)) continue;
      const auto j = lat.join(a, b);
      const auto m = lat.meet(a, b);
      if (lat.rank(a) + lat.rank(b) != lat.rank(j) + lat.rank(m)) return false;
    }
  }
  return true;
}

}  // namespace mkl
