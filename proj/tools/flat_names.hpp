#pragma once

#include <string>

#include "mkl/lattice.hpp"
#include "mkl/matroid_spec.hpp"

namespace kl_cli {

/// Resolves a flat written on the command line. Accepted forms:
///   ""  or "0,3,5"   element list (0-based, must already be closed)
///   "bottom", "top"
///   "12|34", "1,10|2|3..."  braid partition, 1-based vertices (braid specs only);
///                           a single block is written with a trailing '|'
/// Throws mkl::Error(ParseError or FlatNotInLattice).
mkl::FlatLattice::Index parse_flat(const mkl::FlatLattice& lat, const mkl::MatroidSpec& spec, const std::string& text);

/// Element list such as "{0,3,5}", or the block form for braid lattices.
std::string flat_name(const mkl::FlatLattice& lat, mkl::FlatLattice::Index idx);

}  // namespace kl_cli
