#pragma once

// Published KL-basis multiplication tables for small uniform matroids and the
// square of x_bottom in Braid(4), as explicit expected expansions.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mkl/algebra.hpp"
#include "mkl/matroid_spec.hpp"

namespace printed {

using Expansion = std::vector<std::pair<mkl::Flat, mkl::LaurentPoly>>;

struct Row {
  std::string label;
  mkl::Flat f;
  mkl::Flat g;
  Expansion product;
};

inline mkl::LaurentPoly poly(std::initializer_list<long> c) {
  std::vector<mkl::BigInt> v;
  for (long x : c) v.emplace_back(x);
  return mkl::LaurentPoly(0, std::move(v));
}
inline mkl::LaurentPoly q_pow(long k) { return mkl::LaurentPoly::monomial(1, k); }
/// q^a (1+q)^b
inline mkl::LaurentPoly q_one_plus_q(long a, long b) {
  mkl::LaurentPoly r = q_pow(a);
  for (long i = 0; i < b; ++i) r *= poly({1, 1});
  return r;
}

/// Uniform matroid of rank 2 on n elements.
inline std::vector<Row> rank_two_table(long n) {
  const auto N = static_cast<std::size_t>(n);
  const mkl::Flat top = mkl::Flat::full(N), empty(N);
  auto pt = [&](std::size_t i) { return mkl::Flat(N, std::vector<std::size_t>{i}); };
  std::vector<Row> rows{
      {"x_T x_T", top, top, {{top, poly({1})}}},
      {"x_T x_i", top, pt(0), {{top, poly({1, 1})}}},
      {"x_T x_0", top, empty, {{top, poly({1, n, 1})}}},
      {"x_i x_i", pt(0), pt(0), {{pt(0), q_pow(1)}, {top, poly({1, 1})}}},
      {"x_i x_j", pt(0), pt(1), {{top, q_one_plus_q(0, 2)}}},
      {"x_i x_0", pt(0), empty, {{pt(0), q_one_plus_q(1, 1)}, {top, poly({1, n, n - 1})}}},
  };
  Expansion sq{{empty, q_pow(2)}, {top, poly({1, n, (n - 1) * (n - 1)})}};
  for (std::size_t i = 0; i < N; ++i) sq.emplace_back(pt(i), q_one_plus_q(1, 1));
  rows.push_back({"x_0 x_0", empty, empty, sq});
  return rows;
}

/// Uniform matroid of rank 3 on n elements.
inline std::vector<Row> rank_three_table(long n) {
  const auto N = static_cast<std::size_t>(n);
  const mkl::Flat top = mkl::Flat::full(N), empty(N);
  auto pt = [&](std::size_t i) { return mkl::Flat(N, std::vector<std::size_t>{i}); };
  auto line = [&](std::size_t i, std::size_t j) { return mkl::Flat(N, std::vector<std::size_t>{i, j}); };
  const long c2 = n * (n - 1) / 2;
  std::vector<Row> rows{
      {"x_T x_T", top, top, {{top, poly({1})}}},
      {"x_T x_ij", top, line(0, 1), {{top, poly({1, 1})}}},
      {"x_T x_i", top, pt(0), {{top, poly({1, n - 1, 1})}}},
      {"x_T x_0", top, empty, {{top, poly({1, c2, c2, 1})}}},
      {"x_ij x_ij", line(0, 1), line(0, 1), {{line(0, 1), q_pow(1)}, {top, poly({1, 1})}}},
      {"x_ij x_ik", line(0, 1), line(0, 2), {{top, q_one_plus_q(0, 2)}}},
      {"x_ij x_i", line(0, 1), pt(0), {{line(0, 1), q_one_plus_q(1, 1)}, {top, poly({1, n - 1, n - 2})}}},
      {"x_ij x_k", line(0, 1), pt(2), {{top, poly({1, n, n, 1})}}},
      {"x_ij x_0", line(0, 1), empty, {{line(0, 1), q_one_plus_q(1, 2)}, {top, poly({1, c2, n * n - n - 3, c2 - 2})}}},
      {"x_i x_j", pt(0), pt(1), {{line(0, 1), q_one_plus_q(1, 2)}, {top, poly({1, 2 * n - 3, n * (n - 2), 2 * n - 5})}}},
  };
  if (n >= 4) rows.push_back({"x_ij x_kl", line(0, 1), line(2, 3), {{top, q_one_plus_q(0, 2)}}});

  Expansion xi2{{pt(0), q_pow(2)}, {top, poly({1, n - 1, (n - 2) * (n - 2)})}};
  for (std::size_t j = 1; j < N; ++j) xi2.emplace_back(line(0, j), q_one_plus_q(1, 1));
  rows.push_back({"x_i x_i", pt(0), pt(0), xi2});

  Expansion xi0{{pt(0), q_one_plus_q(2, 1)},
                {top, poly({1, c2, (n - 1) * (n * n - 6) / 2, (n - 1) * (n * n - 8) / 2, n * (n - 3) / 2})}};
  for (std::size_t j = 1; j < N; ++j) xi0.emplace_back(line(0, j), q_one_plus_q(1, 2));
  rows.push_back({"x_i x_0", pt(0), empty, xi0});

  Expansion sq{{empty, q_pow(3)},
               {top, poly({1, c2, n * (n * n * n - 2 * n * n - n - 2) / 4, (n - 1) * (n * n * n - n * n - 5 * n - 2) / 2,
                           n * n * (n + 1) * (n - 3) / 4, n * (n - 3) / 2})}};
  for (std::size_t i = 0; i < N; ++i) {
    sq.emplace_back(pt(i), q_one_plus_q(2, 1));
    for (std::size_t j = i + 1; j < N; ++j) sq.emplace_back(line(i, j), q_one_plus_q(1, 2));
  }
  rows.push_back({"x_0 x_0", empty, empty, sq});
  return rows;
}

/// x_bottom squared in Braid(4).
inline Row braid_four_square(const mkl::FlatLattice& lat) {
  Expansion want{{lat.flat(lat.bottom()), q_pow(3)}, {lat.flat(lat.top()), poly({1, 7, 32, 38, 13, 1})}};
  for (mkl::FlatLattice::Index f = 1; f < lat.top(); ++f) {
    const auto flat = lat.flat(f);
    if (lat.rank(f) == 1) {
      want.emplace_back(flat, q_one_plus_q(2, 1));
    } else if (flat.count() == 2) {  // two disjoint pairs
      want.emplace_back(flat, q_one_plus_q(1, 2));
    } else {  // one triangle
      want.emplace_back(flat, mkl::LaurentPoly(1, {1, 3, 4}));
    }
  }
  return {"x_0 x_0", lat.flat(lat.bottom()), lat.flat(lat.bottom()), want};
}

/// Empty when the algebra reproduces the row; otherwise a short description.
inline std::string check_row(const mkl::MobiusAlgebra& alg, const Row& row) {
  const auto& lat = alg.lattice();
  mkl::AlgebraElement expected;
  for (const auto& [h, c] : row.product) mkl::accumulate(expected, lat.index_of(h), c);
  const auto got = alg.kl_product(lat.index_of(row.f), lat.index_of(row.g));
  if (got == expected) return "";
  std::string msg = row.label + ":";
  for (const auto& [h, c] : expected) {
    auto it = got.find(h);
    const std::string have = it == got.end() ? "0" : it->second.to_string();
    if (have != c.to_string()) msg += " at flat #" + std::to_string(h) + " got " + have + " want " + c.to_string();
  }
  for (const auto& [h, c] : got) {
    if (!expected.count(h)) msg += " unexpected flat #" + std::to_string(h) + " " + c.to_string();
  }
  return msg;
}

}  // namespace printed
