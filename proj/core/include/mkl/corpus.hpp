#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mkl/matroid_spec.hpp"

namespace mkl {

struct CorpusEntry {
  std::string name;
  MatroidSpec spec;
};

/// Column matroid of a random matrix over GF(p) with no zero column.
MatrixSpec random_matrix(std::mt19937_64& rng, long p, std::size_t rows, std::size_t cols);

/// The seven nonzero vectors of GF(2)^3 as columns (the Fano plane).
MatrixSpec fano_matrix();

/// Named family cells: uniform with m + d <= max_uniform (rank >= 1, plus
/// Boolean-like m = 0), braid n <= max_braid, boolean n <= max_boolean.
std::vector<CorpusEntry> family_corpus(long max_uniform = 10, long max_braid = 8, long max_boolean = 6);

/// `count` random matrices over GF(2) and GF(3) (alternating) with at most
/// max_cols columns and 1..4 rows, from a fixed seed.
std::vector<CorpusEntry> random_matrix_corpus(std::size_t count, std::uint64_t seed, std::size_t max_cols = 8);

}  // namespace mkl
