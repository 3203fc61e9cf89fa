#include "mkl/bc_complex.hpp"

#include <algorithm>

#include "mkl/error.hpp"
#include "mkl/kl.hpp"

namespace mkl {

std::vector<BigInt> bc_f_vector(const FlatLattice& lat) { return bc_f_vector(char_poly(lat)); }

std::vector<BigInt> bc_f_vector(const IntPoly& chi) {
  const auto d = static_cast<int>(chi.degree());
  std::vector<BigInt> f(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) f[static_cast<std::size_t>(i)] = abs(chi.coeff(static_cast<std::size_t>(d - i)));
  return f;
}

IntPoly bc_h_poly(const FlatLattice& lat) { return bc_h_poly(char_poly(lat)); }

IntPoly bc_h_poly(const IntPoly& chi) {
  const auto f = bc_f_vector(chi);
  const auto d = static_cast<int>(chi.degree());
  const IntPoly one_minus_t{1, -1};
  IntPoly h;
  for (int i = 0; i <= d; ++i) {
    h += (one_minus_t.pow(static_cast<unsigned>(d - i)) * f[static_cast<std::size_t>(i)]).shifted(static_cast<std::size_t>(i));
  }
  for (const auto& c : h.coeffs()) {
    if (c < 0) throw Error(ErrorKind::NegativeHCoefficient, "negative coefficient in h-polynomial " + h.to_string());
  }
  return h;
}

DominanceReport dominance_report(const IntPoly& h, const IntPoly& kl) {
  DominanceReport r;
  r.h = h;
  r.kl = kl;
  r.same_degree = h.degree() == kl.degree();
  r.coefficientwise = true;
  const long top = std::max(h.degree(), kl.degree());
  for (long i = 0; i <= top; ++i) {
    if (h.coeff(static_cast<std::size_t>(i)) < kl.coeff(static_cast<std::size_t>(i))) {
      r.coefficientwise = false;
      r.first_failure = i;
      break;
    }
  }
  return r;
}

DominanceReport dominance_report(const FlatLattice& lat) { return dominance_report(bc_h_poly(lat), kl_poly(lat).poly); }

}  // namespace mkl
