#include "mkl/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "mkl/error.hpp"
#include "mkl/families.hpp"
#include "mkl/kl.hpp"
#include "mkl/matroid_spec.hpp"

namespace mkl {

namespace {

using Index = FlatLattice::Index;

LaurentPoly q_power(long e) { return LaurentPoly::monomial(BigInt(1), e); }

LaurentPoly scaled(const LaurentPoly& p, const BigInt& c) { return p * LaurentPoly::monomial(c, 0); }

}  // namespace

void accumulate(AlgebraElement& a, Index idx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = a.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

struct MobiusAlgebra::Tables {
  explicit Tables(std::size_t n)
      : interval_once(std::make_unique<std::once_flag[]>(n)),
        interval(n),
        diag_once(std::make_unique<std::once_flag[]>(n)),
        diag(n) {}

  // interval[g] holds (f, P_{[f,g]}) sorted by f; generic routing only
  std::unique_ptr<std::once_flag[]> interval_once;
  std::vector<std::vector<std::pair<Index, IntPoly>>> interval;
  std::unique_ptr<std::once_flag[]> diag_once;
  std::vector<std::vector<LaurentPoly>> diag;
  // family routing: braid_kl(k) by k, or uniform_kl(m, d - rk f) by rk f
  std::vector<IntPoly> family_kl;
};

MobiusAlgebra::MobiusAlgebra(FlatLattice lat, IntervalRouting routing)
    : lat_(std::move(lat)), routing_(routing), tables_(std::make_shared<Tables>(lat_.size())) {
  const auto& family = lat_.family();
  if (routing_ == IntervalRouting::Generic || !family) return;
  if (family->kind == FamilyKind::Braid) {
    tables_->family_kl.push_back(IntPoly{1});
    for (long k = 1; k <= family->n; ++k) tables_->family_kl.push_back(braid_kl(k));
  } else if (family->kind == FamilyKind::Uniform) {
    for (long r = 0; r <= family->d; ++r) tables_->family_kl.push_back(uniform_kl(family->m, family->d - r));
  }
}

IntPoly MobiusAlgebra::interval_kl(Index f, Index g) const {
  if (!lat_.leq(f, g)) throw Error(ErrorKind::NotComparable, "interval [F,G] needs F <= G");
  Tables& t = *tables_;
  const auto& family = lat_.family();
  if (routing_ == IntervalRouting::Generic || !family) {
    std::call_once(t.interval_once[g], [&] {
      auto table = kl_toward(lat_, g);
      auto& column = t.interval[g];
      for (Index lo = 0; lo <= g; ++lo) {
        if (table.poly[lo]) column.emplace_back(lo, std::move(*table.poly[lo]));
      }
    });
    const auto& column = t.interval[g];
    auto it = std::lower_bound(column.begin(), column.end(), f,
                               [](const auto& entry, Index key) { return entry.first < key; });
    return it->second;
  }
  switch (family->kind) {
    case FamilyKind::Boolean:
      return IntPoly{1};
    case FamilyKind::Uniform:
      // Below the top every interval is Boolean; [F, top] is uniform again.
      return g == lat_.top() ? t.family_kl[static_cast<std::size_t>(lat_.rank(f))] : IntPoly{1};
    case FamilyKind::Braid: {
      // [F, G] is a product of partition lattices, one per block of G,
      // each on the set of F-blocks it contains.
      const auto upper_blocks = braid_blocks(family->n, lat_.flat(g));
      const auto lower_blocks = braid_blocks(family->n, lat_.flat(f));
      std::map<int, std::set<int>> inside;
      for (std::size_t v = 0; v < lower_blocks.size(); ++v) inside[upper_blocks[v]].insert(lower_blocks[v]);
      IntPoly p{1};
      for (const auto& [block, lows] : inside) p *= t.family_kl[lows.size()];
      return p;
    }
  }
  throw Error(ErrorKind::InvariantViolated, "unknown matroid family");
}

AlgebraElement MobiusAlgebra::eps_product(Index f, Index g) const {
  AlgebraElement out;
  const Index j = lat_.join(f, g);
  for (Index i : lat_.up(j)) {
    const LaurentPoly weight = q_power(lat_.corank(i));
    const auto ups = lat_.up(i);
    const auto mu = lat_.mobius_row(i);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (mu[k] != 0) accumulate(out, ups[k], scaled(weight, mu[k]));
    }
  }
  return out;
}

AlgebraElement MobiusAlgebra::eps_product(const Flat& f, const Flat& g) const {
  return eps_product(lat_.index_of(f), lat_.index_of(g));
}

AlgebraElement MobiusAlgebra::unit() const {
  AlgebraElement out;
  for (Index f = 0; f < lat_.size(); ++f) {
    const LaurentPoly weight = q_power(-lat_.corank(f));
    const auto ups = lat_.up(f);
    const auto mu = lat_.mobius_row(f);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (mu[k] != 0) accumulate(out, ups[k], scaled(weight, mu[k]));
    }
  }
  return out;
}

AlgebraElement MobiusAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [f, af] : a) {
    for (const auto& [g, bg] : b) {
      const LaurentPoly c = af * bg;
      for (const auto& [h, v] : eps_product(f, g)) accumulate(out, h, c * v);
    }
  }
  return out;
}

// Diagonal basis: e_I = sum_{H >= I} mu(I,H) eps_H, so eps_A = sum_{I >= A} e_I
// and e_I e_J = [I = J] q^{crk I} e_I.

AlgebraElement MobiusAlgebra::to_diagonal(const AlgebraElement& a) const {
  AlgebraElement out;
  for (const auto& [f, c] : a) {
    for (Index i : lat_.up(f)) accumulate(out, i, c);
  }
  return out;
}

AlgebraElement MobiusAlgebra::from_diagonal(const AlgebraElement& a) const {
  AlgebraElement out;
  for (const auto& [i, c] : a) {
    const auto ups = lat_.up(i);
    const auto mu = lat_.mobius_row(i);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (mu[k] != 0) accumulate(out, ups[k], scaled(c, mu[k]));
    }
  }
  return out;
}

AlgebraElement MobiusAlgebra::multiply_fast(const AlgebraElement& a, const AlgebraElement& b) const {
  const AlgebraElement da = to_diagonal(a);
  const AlgebraElement db = to_diagonal(b);
  AlgebraElement prod;
  for (const auto& [i, c] : da) {
    auto it = db.find(i);
    if (it != db.end()) accumulate(prod, i, c * it->second * q_power(lat_.corank(i)));
  }
  return from_diagonal(prod);
}

AlgebraElement MobiusAlgebra::kl_basis_element(Index f) const {
  AlgebraElement out;
  for (Index g : lat_.up(f)) {
    const long gap = lat_.rank(g) - lat_.rank(f);
    LaurentPoly c = LaurentPoly::from_poly_inverse_square(interval_kl(f, g), gap);
    if (c.has_negative_exponent()) {
      throw Error(ErrorKind::InvariantViolated, "KL basis coefficient with a negative power of q");
    }
    accumulate(out, g, c);
  }
  return out;
}

AlgebraElement MobiusAlgebra::kl_basis_element(const Flat& f) const { return kl_basis_element(lat_.index_of(f)); }

const std::vector<LaurentPoly>& MobiusAlgebra::kl_diagonal(Index f) const {
  Tables& t = *tables_;
  std::call_once(t.diag_once[f], [&] {
    const AlgebraElement d = to_diagonal(kl_basis_element(f));
    const auto ups = lat_.up(f);
    std::vector<LaurentPoly> row(ups.size());
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (auto it = d.find(ups[k]); it != d.end()) row[k] = it->second;
    }
    t.diag[f] = std::move(row);
  });
  return t.diag[f];
}

AlgebraElement MobiusAlgebra::expand_diagonal(AlgebraElement residual) const {
  // x_H is e_H plus terms e_I with I > H, so the lowest index in the
  // residual is always the next KL coefficient.
  AlgebraElement out;
  while (!residual.empty()) {
    const auto [h, c] = *residual.begin();
    out.emplace(h, c);
    const auto ups = lat_.up(h);
    const auto& row = kl_diagonal(h);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (!row[k].is_zero()) accumulate(residual, ups[k], -(c * row[k]));
    }
    if (auto it = residual.find(h); it != residual.end()) {
      throw Error(ErrorKind::InvariantViolated, "KL basis expansion failed to eliminate a term");
    }
  }
  return out;
}

AlgebraElement MobiusAlgebra::expand_in_kl_basis(const AlgebraElement& a) const {
  return expand_diagonal(to_diagonal(a));
}

AlgebraElement MobiusAlgebra::kl_product(Index f, Index g) const {
  const auto up_f = lat_.up(f);
  const auto up_g = lat_.up(g);
  const auto& xf = kl_diagonal(f);
  const auto& xg = kl_diagonal(g);
  AlgebraElement prod;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < up_f.size() && b < up_g.size()) {
    if (up_f[a] < up_g[b]) {
      ++a;
    } else if (up_g[b] < up_f[a]) {
      ++b;
    } else {
      const Index i = up_f[a];
      if (!xf[a].is_zero() && !xg[b].is_zero()) accumulate(prod, i, xf[a] * xg[b] * q_power(lat_.corank(i)));
      ++a;
      ++b;
    }
  }
  return expand_diagonal(std::move(prod));
}

LaurentPoly MobiusAlgebra::structure_constant(Index f, Index g, Index h) const {
  const AlgebraElement p = kl_product(f, g);
  auto it = p.find(h);
  return it == p.end() ? LaurentPoly{} : it->second;
}

LaurentPoly MobiusAlgebra::structure_constant(const Flat& f, const Flat& g, const Flat& h) const {
  return structure_constant(lat_.index_of(f), lat_.index_of(g), lat_.index_of(h));
}

std::vector<PositivityFinding> MobiusAlgebra::positivity_scan() const {
  std::vector<PositivityFinding> out;
  for (Index f = 0; f < lat_.size(); ++f) {
    for (Index g = f; g < lat_.size(); ++g) {
      for (const auto& [h, c] : kl_product(f, g)) {
        if (c.has_negative_coefficient() || c.has_negative_exponent()) out.push_back({f, g, h, c});
      }
    }
  }
  return out;
}

std::map<Flat, LaurentPoly> boolean_product_closed(std::size_t n, const Flat& f, const Flat& g) {
  if (f.ground_size() != n || g.ground_size() != n) {
    throw Error(ErrorKind::IndexOutOfRange, "subsets must live on the ground set of size n");
  }
  const Flat base = f | g;
  const long meet_size = static_cast<long>((f & g).count());
  std::vector<std::size_t> free;
  for (std::size_t e = 0; e < n; ++e) {
    if (!base.contains(e)) free.push_back(e);
  }
  if (free.size() >= 63) throw Error(ErrorKind::TooLarge, "too many supersets to enumerate");
  const LaurentPoly one_plus_q(0, {BigInt(1), BigInt(1)});
  std::map<Flat, LaurentPoly> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    Flat k = base;
    for (std::size_t b = 0; b < free.size(); ++b) {
      if ((mask >> b) & 1U) k.insert(free[b]);
    }
    const long size = static_cast<long>(k.count());
    LaurentPoly c = q_power(static_cast<long>(n) - size);
    for (long e = 0; e < size - meet_size; ++e) c *= one_plus_q;
    out.emplace(std::move(k), std::move(c));
  }
  return out;
}

}  // namespace mkl
