#include "mkl/corpus.hpp"

#include <algorithm>

namespace mkl {

MatrixSpec random_matrix(std::mt19937_64& rng, long p, std::size_t rows, std::size_t cols) {
  MatrixSpec m;
  m.p = p;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(rows * cols, 0);
  std::uniform_int_distribution<long> entry(0, p - 1);
  for (std::size_t c = 0; c < cols; ++c) {
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t r = 0; r < rows; ++r) {
        m.entries[r * cols + c] = entry(rng);
        nonzero = nonzero || m.entries[r * cols + c] != 0;
      }
    }
  }
  return m;
}

MatrixSpec fano_matrix() {
  MatrixSpec m;
  m.p = 2;
  m.rows = 3;
  m.cols = 7;
  m.entries.resize(21);
  for (std::size_t c = 0; c < 7; ++c) {
    const std::size_t v = c + 1;
    for (std::size_t r = 0; r < 3; ++r) m.entries[r * 7 + c] = static_cast<long>((v >> r) & 1U);
  }
  return m;
}

std::vector<CorpusEntry> family_corpus(long max_uniform, long max_braid, long max_boolean) {
  std::vector<CorpusEntry> out;
  for (long total = 1; total <= max_uniform; ++total) {
    for (long d = 1; d <= total; ++d) {
      const UniformSpec s{total - d, d};
      out.push_back({describe(s), s});
    }
  }
  for (long n = 1; n <= max_braid; ++n) out.push_back({describe(BraidSpec{n}), BraidSpec{n}});
  for (long n = 0; n <= max_boolean; ++n) out.push_back({describe(BooleanSpec{n}), BooleanSpec{n}});
  return out;
}

std::vector<CorpusEntry> random_matrix_corpus(std::size_t count, std::uint64_t seed, std::size_t max_cols) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  std::uniform_int_distribution<std::size_t> rows_dist(1, 4);
  std::uniform_int_distribution<std::size_t> cols_dist(1, std::max<std::size_t>(max_cols, 1));
  for (std::size_t i = 0; i < count; ++i) {
    const long p = i % 2 == 0 ? 2 : 3;
    const MatrixSpec m = random_matrix(rng, p, rows_dist(rng), cols_dist(rng));
    out.push_back({"random#" + std::to_string(i) + " " + describe(m), m});
  }
  return out;
}

}  // namespace mkl
