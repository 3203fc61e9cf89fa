#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mkl/int_poly.hpp"
#include "mkl/lattice.hpp"

namespace mkl {

struct KLResult {
  IntPoly poly;
  std::size_t lattice_size = 0;
  std::size_t cache_hits = 0;
};

/// Kazhdan-Lusztig polynomial of the matroid whose lattice of flats is lat.
KLResult kl_poly(const FlatLattice& lat);

/// KL polynomials of every interval [F, top] sharing one upper flat.
struct IntervalKLTable {
  FlatLattice::Index top = 0;
  /// Indexed by flat; empty optional for flats not below top.
  std::vector<std::optional<IntPoly>> poly;
  std::size_t cache_hits = 0;
};

/// Runs the recursion once for the upper flat `top`, yielding P of [F, top]
/// for all F <= top. Results are memoized per lower flat within the call.
IntervalKLTable kl_toward(const FlatLattice& lat, FlatLattice::Index top);

/// Given R(t) with t^r R(1/t) = -R(t), returns the unique P of degree < r/2
/// with t^r P(1/t) - P(t) = R(t). For r = 0 returns 1 (and R must vanish).
/// Throws AntisymmetryViolated when R fails the symmetry.
IntPoly kl_solve(const IntPoly& remainder, int rank);

/// Whether t^rk p(1/t) equals sum_F chi_{M_F}(t) P_{M^F}(t), with p standing
/// in for P_M at the bottom flat.
bool check_defining_identity(const FlatLattice& lat, const IntPoly& p);

/// Whether sum_F t^{rk F} chi_{M_F}(1/t) chi_{M^F}(t) vanishes. Requires rk M >= 1.
bool cancellation_check(const FlatLattice& lat);

/// Coefficient i (0..3) of P_M from Whitney-number closed forms, without the
/// recursion. Out-of-range Whitney indices contribute 0.
BigInt kl_coeff_closed(const FlatLattice& lat, int i);

struct ConjectureReport {
  bool non_negative = true;
  bool log_concave = true;
  bool no_internal_zeros = true;

  bool all() const { return non_negative && log_concave && no_internal_zeros; }
};

ConjectureReport conjecture_report(const IntPoly& p);
ConjectureReport conjecture_report(const FlatLattice& lat);

}  // namespace mkl
