#pragma once

#include "mkl/combinatorics.hpp"
#include "mkl/int_poly.hpp"
#include "mkl/lattice.hpp"

namespace mkl {

/// KL polynomial of the uniform matroid of rank d on m + d elements, from
/// the coefficient recursion. Memoized on (m, d); safe to call concurrently.
IntPoly uniform_kl(long m, long d);

/// Coefficient i (0..3) of uniform_kl(m, d) from the multinomial closed
/// forms. Coefficients with 2i >= d > 0 are zero by the degree bound and are
/// returned as such without evaluating the formula.
BigInt uniform_coeff_closed(long m, long d, int i);

/// KL polynomial of the braid matroid M_n (complete graph on n vertices),
/// computed over integer partitions of n. Memoized on n.
IntPoly braid_kl(long n);

/// Number of flats of type lambda in the partition lattice of |lambda|.
BigInt m_count(const Partition& lambda);

/// W_{i,j} of Braid(n) as S(n, n-i) S(n-i, n-j). Requires 0 <= i <= j <= n-1.
BigInt braid_whitney(long n, long i, long j);

/// Coefficient of t^3 in braid_kl(n) from Stirling numbers and binomials:
///   s(n,n-3) + sum_{l(lam)=2} m(lam) w_{0,2}(M_{lam_1} + M_{lam_2})
///   - S(n,n-1) S(n-1,3) + S(n,4) - sum_{l(lam)=4} m(lam) sum_i C(lam_i, 2)
///   + 5 S(n,5) + 15 S(n,6)
/// with w_{0,2}(M_a + M_b) written as
///   S(a,a-1)S(a-1,a-2) + S(b,b-1)S(a,a-1) + S(b,b-1)S(b-1,b-2) - S(a,a-2) - S(b,b-2).
BigInt braid_cubic(long n);

/// Variant of the same formula in which the w_{0,2} sum
/// runs over four-part partitions and the binomial sum enters with a plus
/// sign. It disagrees with the recursion for n >= 4; kept so the discrepancy
/// can be reported.
BigInt braid_cubic_as_printed(long n);

IntPoly uniform_char_poly(long m, long d);
IntPoly braid_char_poly(long n);
IntPoly boolean_char_poly(long n);

/// Fast-path KL polynomial and characteristic polynomial for a family tag.
IntPoly family_kl(const FamilyTag& tag);
IntPoly family_char_poly(const FamilyTag& tag);

/// Checks the uniform generating-function identity through u^order.
bool gf_check_uniform(long m, long order = 6);
/// Checks the braid generating-function identity through u^order.
bool gf_check_braid(long order = 6);

}  // namespace mkl
