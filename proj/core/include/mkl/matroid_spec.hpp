#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mkl/lattice.hpp"

namespace mkl {

/// Uniform matroid of rank d on m + d elements.
struct UniformSpec {
  long m = 0;
  long d = 0;
};
struct BooleanSpec {
  long n = 0;
};
/// Matroid of the complete graph on n vertices.
struct BraidSpec {
  long n = 0;
};
struct GraphSpec {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};
/// Column matroid of a matrix over GF(p); entries are row-major.
struct MatrixSpec {
  long p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long> entries;

  long at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};
struct ExplicitFlatsSpec {
  std::vector<std::pair<std::vector<std::size_t>, int>> flats;
};

using MatroidSpec = std::variant<UniformSpec, BooleanSpec, BraidSpec, GraphSpec, MatrixSpec, ExplicitFlatsSpec>;

/// Parses a matroid spec string:
///   uniform:m,d   boolean:n   braid:n
///   graph:@FILE   matrix:@FILE   flats:@FILE
/// File-backed forms read the named file. Throws ParseError.
MatroidSpec parse_spec(std::string_view text);

GraphSpec parse_graph_text(std::string_view text);
MatrixSpec parse_matrix_text(std::string_view text);
ExplicitFlatsSpec parse_flats_json(std::string_view text);

std::string describe(const MatroidSpec& spec);

FlatLattice build_lattice(const MatroidSpec& spec, std::size_t cap = kDefaultFlatCap);

/// Rank over GF(p) of the given columns of a matrix.
std::size_t matrix_rank(const MatrixSpec& m, std::span<const std::size_t> columns);

/// Index of edge {i, j} (i < j) in the braid ground set, lexicographic order.
std::size_t braid_edge_index(long n, long i, long j);
/// Block label of each vertex for a braid flat given as an edge set.
std::vector<int> braid_blocks(long n, const Flat& flat);
/// Flat of Braid(n) whose blocks are given as vertex lists (0-based).
Flat braid_flat(long n, const std::vector<std::vector<long>>& blocks);

}  // namespace mkl
