#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "mkl/flat.hpp"
#include "mkl/int_poly.hpp"
#include "mkl/lattice.hpp"
#include "mkl/laurent_poly.hpp"

namespace mkl {

/// Element of E_q(M): flat index -> nonzero Laurent coefficient.
using AlgebraElement = std::map<FlatLattice::Index, LaurentPoly>;

/// a[idx] += c, dropping the entry if it cancels.
void accumulate(AlgebraElement& a, FlatLattice::Index idx, const LaurentPoly& c);

enum class IntervalRouting {
  /// Family-tagged lattices use closed family formulas; others the recursion.
  Auto,
  /// Always run the generic recursion on the interval.
  Generic,
};

struct PositivityFinding {
  FlatLattice::Index f = 0;
  FlatLattice::Index g = 0;
  FlatLattice::Index h = 0;
  LaurentPoly value;
};

/// The q-deformed Möbius algebra of a lattice of flats, in the standard basis
/// eps_F and in the KL basis x_F. All methods are const and thread-safe; the
/// interval KL polynomials and basis tables are filled lazily, once.
class MobiusAlgebra {
 public:
  using Index = FlatLattice::Index;

  explicit MobiusAlgebra(FlatLattice lat, IntervalRouting routing = IntervalRouting::Auto);

  const FlatLattice& lattice() const noexcept { return lat_; }

  /// KL polynomial of the interval [f, g]; f <= g required.
  IntPoly interval_kl(Index f, Index g) const;

  /// eps_f * eps_g straight from the defining sum.
  AlgebraElement eps_product(Index f, Index g) const;
  AlgebraElement eps_product(const Flat& f, const Flat& g) const;
  AlgebraElement unit() const;
  /// Bilinear extension of eps_product.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Same product through the basis in which multiplication is diagonal.
  AlgebraElement multiply_fast(const AlgebraElement& a, const AlgebraElement& b) const;

  /// x_f = sum_{g >= f} q^{rk g - rk f} P_{[f,g]}(q^-2) eps_g
  AlgebraElement kl_basis_element(Index f) const;
  AlgebraElement kl_basis_element(const Flat& f) const;
  /// Coefficients c with a = sum c_h x_h.
  AlgebraElement expand_in_kl_basis(const AlgebraElement& a) const;

  /// x_f * x_g expanded in the KL basis.
  AlgebraElement kl_product(Index f, Index g) const;
  LaurentPoly structure_constant(Index f, Index g, Index h) const;
  LaurentPoly structure_constant(const Flat& f, const Flat& g, const Flat& h) const;

  /// Every (f, g, h) with index f <= g whose structure constant has a
  /// negative coefficient or a negative power of q, in scan order.
  std::vector<PositivityFinding> positivity_scan() const;

 private:
  struct Tables;

  /// x_f in the diagonal basis, aligned with lat_.up(f).
  const std::vector<LaurentPoly>& kl_diagonal(Index f) const;
  AlgebraElement to_diagonal(const AlgebraElement& a) const;
  AlgebraElement from_diagonal(const AlgebraElement& a) const;
  AlgebraElement expand_diagonal(AlgebraElement residual) const;

  FlatLattice lat_;
  IntervalRouting routing_;
  std::shared_ptr<Tables> tables_;
};

/// KL-basis expansion of x_F x_G in the Boolean algebra on n elements:
///   sum_{K >= F u G} q^{n - |K|} (1 + q)^{|K| - |F n G|} x_K.
std::map<Flat, LaurentPoly> boolean_product_closed(std::size_t n, const Flat& f, const Flat& g);

}  // namespace mkl
