#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "mkl/flat.hpp"
#include "mkl/laurent_poly.hpp"
#include "mkl/lattice.hpp"
#include "oracles.hpp"

namespace testing_support {

inline mkl::Flat set_of(std::size_t n, std::vector<std::size_t> members) { return mkl::Flat(n, members); }

inline mkl::LaurentPoly lp(long lowest, std::initializer_list<long> coeffs) {
  std::vector<mkl::BigInt> c;
  for (long x : coeffs) c.emplace_back(x);
  return mkl::LaurentPoly(lowest, std::move(c));
}

inline oracle::Mask mask_of(const mkl::Flat& f) {
  oracle::Mask m = 0;
  for (auto e : f.members()) m |= oracle::Mask{1} << e;
  return m;
}

/// Random connected-or-not simple graph with at most `max_edges` edges.
inline mkl::GraphSpec random_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t max_edges) {
  mkl::GraphSpec g;
  g.vertices = vertices;
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = i + 1; j < vertices; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::min(max_edges, all.size()));
  all.resize(count(rng));
  g.edges = all;
  return g;
}

}  // namespace testing_support
