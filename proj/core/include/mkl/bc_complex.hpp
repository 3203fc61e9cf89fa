#pragma once

#include <vector>

#include "mkl/int_poly.hpp"
#include "mkl/lattice.hpp"

namespace mkl {

/// f-vector of the broken circuit complex: entry i counts faces with i
/// vertices (so entry 0 is the empty face). Read off the unsigned
/// coefficients of the characteristic polynomial, hence independent of any
/// ordering of the ground set.
std::vector<BigInt> bc_f_vector(const FlatLattice& lat);
/// Same, from a characteristic polynomial of degree rk M.
std::vector<BigInt> bc_f_vector(const IntPoly& chi);

/// h(t) = sum_i f_{i-1} t^i (1 - t)^{d-i}. Throws NegativeHCoefficient if a
/// coefficient comes out negative, which would mean an upstream bug.
IntPoly bc_h_poly(const FlatLattice& lat);
IntPoly bc_h_poly(const IntPoly& chi);

struct DominanceReport {
  IntPoly h;
  IntPoly kl;
  bool same_degree = false;
  bool coefficientwise = false;
  /// First index where h falls below kl, if any.
  long first_failure = -1;

  bool holds() const { return same_degree && coefficientwise; }
};

/// Compares h against the KL polynomial: equal degree, and h_i >= P_i for all i.
DominanceReport dominance_report(const FlatLattice& lat);
DominanceReport dominance_report(const IntPoly& h, const IntPoly& kl);

}  // namespace mkl
