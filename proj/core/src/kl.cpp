#include "mkl/kl.hpp"

#include <string>

#include "mkl/error.hpp"

namespace mkl {

using Index = FlatLattice::Index;

IntPoly kl_solve(const IntPoly& remainder, int rank) {
  if (rank == 0) {
    if (!remainder.is_zero()) throw Error(ErrorKind::AntisymmetryViolated, "nonzero remainder at rank 0");
    return IntPoly{1};
  }
  const auto r = static_cast<std::size_t>(rank);
  if (remainder.reversed(r) != -remainder) {
    throw Error(ErrorKind::AntisymmetryViolated,
                "t^" + std::to_string(rank) + " R(1/t) != -R(t) for R = " + remainder.to_string());
  }
  std::vector<BigInt> p;
  for (std::size_t i = 0; 2 * i < r; ++i) p.push_back(-remainder.coeff(i));
  return IntPoly(std::move(p));
}

IntervalKLTable kl_toward(const FlatLattice& lat, Index top) {
  IntervalKLTable table;
  table.top = top;
  table.poly.resize(lat.size());
  // s[E] = sum over G in [E, top] of t^(rk G - rk E) P_{[G, top]}
  std::vector<IntPoly> s(lat.size());
  const int top_rank = lat.rank(top);
  for (Index f = top + 1; f-- > 0;) {
    if (!lat.leq(f, top)) continue;
    if (f == top) {
      table.poly[f] = IntPoly{1};
      s[f] = IntPoly{1};
      continue;
    }
    const auto ups = lat.up(f);
    const auto mu = lat.mobius_row(f);
    IntPoly s_star;
    IntPoly remainder;
    for (std::size_t k = 1; k < ups.size(); ++k) {
      const Index g = ups[k];
      if (!lat.leq(g, top)) continue;
      s_star.add_scaled(*table.poly[g], BigInt(1), static_cast<std::size_t>(lat.rank(g) - lat.rank(f)));
      remainder.add_scaled(s[g], mu[k]);
      table.cache_hits += 2;
    }
    remainder += s_star;
    IntPoly p = kl_solve(remainder, top_rank - lat.rank(f));
    s_star += p;
    s[f] = std::move(s_star);
    table.poly[f] = std::move(p);
  }
  return table;
}

KLResult kl_poly(const FlatLattice& lat) {
  auto table = kl_toward(lat, lat.top());
  KLResult result{std::move(*table.poly[lat.bottom()]), lat.size(), table.cache_hits};
  const int rk = lat.rank();
  if (result.poly.coeff(0) != 1) {
    throw Error(ErrorKind::InvariantViolated, "constant term of P_M is not 1");
  }
  if (rk > 0 && 2 * result.poly.degree() >= rk) {
    throw Error(ErrorKind::InvariantViolated, "degree bound violated");
  }
  return result;
}

bool check_defining_identity(const FlatLattice& lat, const IntPoly& p) {
  const int rk = lat.rank();
  if (p.degree() > rk) return false;
  const IntPoly lhs = p.reversed(static_cast<std::size_t>(rk));
  const auto table = kl_toward(lat, lat.top());
  IntPoly rhs;
  for (Index f = 0; f < lat.size(); ++f) {
    const IntPoly& upper = f == lat.bottom() ? p : *table.poly[f];
    rhs += interval_char_poly(lat, lat.bottom(), f) * upper;
  }
  return lhs == rhs;
}

bool cancellation_check(const FlatLattice& lat) {
  if (lat.rank() == 0) throw Error(ErrorKind::RankZero, "cancellation identity needs positive rank");
  IntPoly sum;
  for (Index f = 0; f < lat.size(); ++f) {
    const IntPoly lower = interval_char_poly(lat, lat.bottom(), f).reversed(static_cast<std::size_t>(lat.rank(f)));
    sum += lower * interval_char_poly(lat, f, lat.top());
  }
  return sum.is_zero();
}

BigInt kl_coeff_closed(const FlatLattice& lat, int i) {
  if (i < 0 || i > 3) {
    throw Error(ErrorKind::UnsupportedIndex, "closed forms exist only for coefficients 0..3");
  }
  const int d = lat.rank();
  const Index bot = lat.bottom();
  const Index top = lat.top();
  auto W = [&](int a, int b) { return interval_whitney(lat, bot, top, WhitneyKind::Second, a, b); };
  auto w = [&](int a, int b) { return interval_whitney(lat, bot, top, WhitneyKind::First, a, b); };
  // Whitney numbers of the localization [bottom, F] and the restriction [F, top].
  auto W_loc = [&](Index f, int a, int b) { return interval_whitney(lat, bot, f, WhitneyKind::Second, a, b); };
  auto w_loc = [&](Index f, int a, int b) { return interval_whitney(lat, bot, f, WhitneyKind::First, a, b); };
  auto W_res = [&](Index f, int a, int b) { return interval_whitney(lat, f, top, WhitneyKind::Second, a, b); };
  auto w_res = [&](Index f, int a, int b) { return interval_whitney(lat, f, top, WhitneyKind::First, a, b); };

  switch (i) {
    case 0:
      return 1;
    case 1:
      return W(0, d - 1) - W(0, 1);
    case 2:
      return w(0, 2) - W(1, d - 1) + W(0, d - 2) - W(d - 3, d - 2) + W(d - 3, d - 1);
    default:
      break;
  }
  BigInt c = w(0, 3) - W(d - 4, d - 3) + W(d - 4, d - 1) - W(1, d - 2) + W(0, d - 3);
  {
    const auto [lo, hi] = lat.rank_range(d - 1);
    for (Index f = lo; f < hi; ++f) c += w_loc(f, 0, 2);
  }
  {
    const auto [lo, hi] = lat.rank_range(d - 3);
    for (Index f = lo; f < hi; ++f) c -= W_loc(f, 0, 1) * (W_res(f, 0, 2) - W_res(f, 0, 1));
  }
  {
    const auto [lo, hi] = lat.rank_range(d - 5);
    for (Index f = lo; f < hi; ++f) {
      c += w_res(f, 0, 2) - W_res(f, 1, 4) + W_res(f, 0, 3) + W_res(f, 2, 4) - W_res(f, 2, 3);
    }
  }
  return c;
}

ConjectureReport conjecture_report(const IntPoly& p) {
  ConjectureReport r;
  const auto& c = p.coeffs();
  for (const auto& x : c) {
    if (x < 0) r.non_negative = false;
  }
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i - 1] * c[i + 1] > c[i] * c[i]) r.log_concave = false;
  }
  bool seen_nonzero = false;
  bool gap_after_nonzero = false;
  for (const auto& x : c) {
    if (x != 0) {
      if (gap_after_nonzero) r.no_internal_zeros = false;
      seen_nonzero = true;
    } else if (seen_nonzero) {
      gap_after_nonzero = true;
    }
  }
  return r;
}

ConjectureReport conjecture_report(const FlatLattice& lat) { return conjecture_report(kl_poly(lat).poly); }

}  // namespace mkl
