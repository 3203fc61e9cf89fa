// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mkl/algebra.hpp"
#include "mkl/bc_complex.hpp"
#include "mkl/corpus.hpp"
#include "mkl/families.hpp"
#include "mkl/kl.hpp"
#include "mkl/matroid_spec.hpp"
#include "mkl/reference_tables.hpp"
#include "printed_tables.hpp"

using mkl::BigInt;
using mkl::FlatLattice;
using mkl::IntPoly;
using Index = FlatLattice::Index;
using Clock = std::chrono::steady_clock;

namespace {

/// Collects the first few problems found while checking one criterion.
struct Outcome {
  std::vector<std::string> problems;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
  bool ok() const { return problems.empty(); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const IntPoly& p) { return p.to_string(); }

// 1. Uniform tables
void uniform_tables(Outcome& out) {
  const auto start = Clock::now();
  for (long m = 1; m <= 3; ++m) {
    for (const auto& [d, col] : mkl::uniform_reference(m)) {
      const IntPoly p = mkl::uniform_kl(m, d);
      out.expect(p.coeff_strings() == col, "m=" + std::to_string(m) + " d=" + std::to_string(d) + ": " + str(p));
    }
  }
  const IntPoly p115 = mkl::uniform_kl(1, 15);
  out.expect(p115.coeff(static_cast<std::size_t>(p115.degree())) == 1430, "leading coefficient of M_{1,15}");
  out.expect(mkl::uniform_kl(3, 14) == IntPoly{1, 2363, 86768, 803760, 2384760, 2171988, 420784}, "M_{3,14} column");
  out.expect(seconds_since(start) < 10.0, "runtime over 10 s");
}

// 2. Braid tables
void braid_tables(Outcome& out) {
  const auto start = Clock::now();
  for (const auto& [n, col] : mkl::braid_reference()) {
    const IntPoly p = mkl::braid_kl(n);
    out.expect(p.coeff_strings() == col, "n=" + std::to_string(n) + ": " + str(p));
  }
  const IntPoly p20 = mkl::braid_kl(20);
  out.expect(p20.coeff(7) == BigInt("11522756204094885750"), "n=20 t^7");
  out.expect(p20.coeff(9) == BigInt("585243816844111425"), "n=20 t^9");
  out.expect(seconds_since(start) < 300.0, "runtime over 5 min");
}

// 3. Generic recursion against the family formulas
void cross_path(Outcome& out) {
  const auto start = Clock::now();
  for (long m = 0; m <= 10; ++m) {
    for (long d = m == 0 ? 0 : 1; m + d <= 10; ++d) {
      const IntPoly generic = mkl::kl_poly(mkl::build_lattice(mkl::UniformSpec{m, d})).poly;
      out.expect(generic == mkl::uniform_kl(m, d), "uniform " + std::to_string(m) + "," + std::to_string(d));
    }
  }
  for (long n = 1; n <= 8; ++n) {
    const IntPoly generic = mkl::kl_poly(mkl::build_lattice(mkl::BraidSpec{n})).poly;
    out.expect(generic == mkl::braid_kl(n), "braid " + std::to_string(n));
  }
  out.expect(seconds_since(start) < 120.0, "runtime over 2 min");
}

// 4. Closed-form coefficients on the corpus
void closed_forms(Outcome& out) {
  auto corpus = mkl::family_corpus(10, 8, 6);
  for (auto& e : mkl::random_matrix_corpus(50, 20160301, 8)) corpus.push_back(std::move(e));
  for (const auto& entry : corpus) {
    const auto lat = mkl::build_lattice(entry.spec);
    const IntPoly p = mkl::kl_poly(lat).poly;
    for (int i = 0; i <= 3; ++i) {
      out.expect(mkl::kl_coeff_closed(lat, i) == p.coeff(static_cast<std::size_t>(i)),
                 entry.name + " c" + std::to_string(i));
    }
    if (const auto* u = std::get_if<mkl::UniformSpec>(&entry.spec)) {
      for (int i = 0; i <= 3; ++i) {
        out.expect(mkl::uniform_coeff_closed(u->m, u->d, i) == p.coeff(static_cast<std::size_t>(i)),
                   entry.name + " uniform c" + std::to_string(i));
      }
    }
    if (const auto* b = std::get_if<mkl::BraidSpec>(&entry.spec)) {
      out.expect(mkl::braid_cubic(b->n) == p.coeff(3), entry.name + " braid cubic");
    }
  }
  for (long n = 9; n <= 20; ++n) out.expect(mkl::braid_cubic(n) == mkl::braid_kl(n).coeff(3), "braid cubic n=" + std::to_string(n));
}

// 5. Structural identities on random instances
void structural(Outcome& out) {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> rows(1, 3), cols(1, 5), field(0, 1);
  auto random_lattice = [&] {
    return mkl::build_lattice(mkl::random_matrix(rng, field(rng) == 0 ? 2 : 3, static_cast<std::size_t>(rows(rng)),
                                                 static_cast<std::size_t>(cols(rng))));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_lattice();
    const auto b = random_lattice();
    const auto sum = mkl::direct_sum(a, b);
    const std::string tag = "instance " + std::to_string(trial);
    for (const auto* lat : {&a, &b, &sum}) {
      const IntPoly p = mkl::kl_poly(*lat).poly;
      out.expect(p.coeff(0) == 1, tag + " constant term");
      out.expect(lat->rank() == 0 || 2 * p.degree() < lat->rank(), tag + " degree bound");
      out.expect(mkl::check_defining_identity(*lat, p), tag + " defining identity");
      if (lat->rank() > 0) out.expect(mkl::cancellation_check(*lat), tag + " cancellation");
    }
    out.expect(mkl::kl_poly(sum).poly == mkl::kl_poly(a).poly * mkl::kl_poly(b).poly, tag + " direct sum");
  }
}

// 6. Modular matroids
void modularity(Outcome& out) {
  for (long n = 0; n <= 6; ++n) {
    out.expect(mkl::kl_poly(mkl::build_lattice(mkl::BooleanSpec{n})).poly == IntPoly{1}, "boolean " + std::to_string(n));
  }
  auto corpus = mkl::family_corpus(10, 8, 6);
  for (auto& e : mkl::random_matrix_corpus(50, 20160301, 8)) corpus.push_back(std::move(e));
  std::size_t low_rank = 0;
  for (const auto& entry : corpus) {
    const auto lat = mkl::build_lattice(entry.spec);
    if (lat.rank() > 2) continue;
    ++low_rank;
    out.expect(mkl::kl_poly(lat).poly == IntPoly{1}, entry.name);
  }
  out.expect(low_rank > 0, "no rank <= 2 entries in the corpus");
  out.expect(mkl::kl_poly(mkl::build_lattice(mkl::fano_matrix())).poly == IntPoly{1}, "fano");
  out.expect(mkl::kl_poly(mkl::build_lattice(mkl::UniformSpec{1, 3})).poly != IntPoly{1}, "uniform 1,3");
}

// 7. Generating functions
void generating_functions(Outcome& out) {
  for (long m = 0; m <= 3; ++m) out.expect(mkl::gf_check_uniform(m, 6), "uniform m=" + std::to_string(m));
  out.expect(mkl::gf_check_braid(8), "braid order 8");
}

// 8. Algebra axioms
void check_triple(const mkl::MobiusAlgebra& alg, Index f, Index g, Index k, const std::string& tag, Outcome& out) {
  auto eps = [](Index i) { return mkl::AlgebraElement{{i, mkl::LaurentPoly::monomial(1, 0)}}; };
  const auto fg = alg.eps_product(f, g);
  const auto gk = alg.eps_product(g, k);
  out.expect(alg.multiply(fg, eps(k)) == alg.multiply(eps(f), gk), tag + " associativity");
  out.expect(fg == alg.eps_product(g, f), tag + " commutativity");
}

void algebra_axioms(Outcome& out) {
  auto corpus = mkl::family_corpus(10, 8, 6);
  for (auto& e : mkl::random_matrix_corpus(50, 20160301, 8)) corpus.push_back(std::move(e));
  std::size_t lattices = 0;
  for (const auto& entry : corpus) {
    const auto lat = mkl::build_lattice(entry.spec);
    if (lat.size() > 16) continue;
    ++lattices;
    const mkl::MobiusAlgebra alg(lat);
    const auto n = static_cast<Index>(lat.size());
    const auto one = alg.unit();
    for (Index f = 0; f < n; ++f) {
      const mkl::AlgebraElement ef{{f, mkl::LaurentPoly::monomial(1, 0)}};
      out.expect(alg.multiply(one, ef) == ef && alg.multiply(ef, one) == ef, entry.name + " unit");
      for (Index g = 0; g < n; ++g) {
        const auto fg = alg.eps_product(f, g);
        const Index j = lat.join(f, g);
        bool special = true;
        for (Index h = 0; h < n; ++h) {
          auto it = fg.find(h);
          const BigInt v = it == fg.end() ? BigInt(0) : it->second.at_one();
          special = special && v == (h == j ? 1 : 0);
        }
        out.expect(special, entry.name + " q=1 join product");
        for (Index k = 0; k < n; ++k) check_triple(alg, f, g, k, entry.name, out);
      }
    }
  }
  out.expect(lattices > 0, "no lattices with at most 16 flats");

  const auto braid5 = mkl::build_lattice(mkl::BraidSpec{5});
  const mkl::MobiusAlgebra alg(braid5);
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<Index> pick(0, braid5.top());
  const auto one = alg.unit();
  for (int t = 0; t < 500; ++t) {
    const Index f = pick(rng), g = pick(rng), k = pick(rng);
    check_triple(alg, f, g, k, "braid 5", out);
    const mkl::AlgebraElement ef{{f, mkl::LaurentPoly::monomial(1, 0)}};
    out.expect(alg.multiply(one, ef) == ef, "braid 5 unit");
    const auto fg = alg.eps_product(f, g);
    for (const auto& [h, c] : fg) out.expect(c.at_one() == (h == braid5.join(f, g) ? 1 : 0), "braid 5 q=1 join product");
  }
}

// 9. Printed multiplication tables
void printed_tables(Outcome& out) {
  for (long n = 3; n <= 6; ++n) {
    const mkl::MobiusAlgebra r2(mkl::build_lattice(mkl::UniformSpec{n - 2, 2}));
    for (const auto& row : printed::rank_two_table(n)) {
      const auto msg = printed::check_row(r2, row);
      out.expect(msg.empty(), "rank 2, n=" + std::to_string(n) + " " + msg);
    }
    const mkl::MobiusAlgebra r3(mkl::build_lattice(mkl::UniformSpec{n - 3, 3}));
    for (const auto& row : printed::rank_three_table(n)) {
      const auto msg = printed::check_row(r3, row);
      out.expect(msg.empty(), "rank 3, n=" + std::to_string(n) + " " + msg);
    }
  }
  for (long n = 0; n <= 5; ++n) {
    const mkl::MobiusAlgebra alg(mkl::build_lattice(mkl::BooleanSpec{n}));
    const auto& lat = alg.lattice();
    for (Index f = 0; f < lat.size(); ++f) {
      for (Index g = 0; g < lat.size(); ++g) {
        mkl::AlgebraElement want;
        for (const auto& [k, c] : mkl::boolean_product_closed(static_cast<std::size_t>(n), lat.flat(f), lat.flat(g))) {
          want.emplace(lat.index_of(k), c);
        }
        out.expect(alg.kl_product(f, g) == want, "boolean " + std::to_string(n));
      }
    }
  }
  const mkl::MobiusAlgebra b4(mkl::build_lattice(mkl::BraidSpec{4}));
  const auto msg = printed::check_row(b4, printed::braid_four_square(b4.lattice()));
  out.expect(msg.empty(), "braid 4 " + msg);
}

// 10. Counterexample search
void counterexamples(Outcome& out) {
  const auto u24 = mkl::MobiusAlgebra(mkl::build_lattice(mkl::UniformSpec{2, 4})).positivity_scan();
  out.expect(!u24.empty(), "uniform 2,4 has no negative structure constant");
  for (long n = 1; n <= 5; ++n) {
    out.expect(mkl::MobiusAlgebra(mkl::build_lattice(mkl::BooleanSpec{n})).positivity_scan().empty(), "boolean " + std::to_string(n));
    out.expect(mkl::MobiusAlgebra(mkl::build_lattice(mkl::BraidSpec{n})).positivity_scan().empty(), "braid " + std::to_string(n));
  }
  out.expect(mkl::MobiusAlgebra(mkl::build_lattice(mkl::BraidSpec{6})).positivity_scan().empty(), "braid 6");
}

// 11. Broken circuit complex
void broken_circuits(Outcome& out) {
  for (long d = 1; d <= 10; ++d) {
    std::vector<BigInt> ones(static_cast<std::size_t>(d), 1);
    out.expect(mkl::bc_h_poly(mkl::build_lattice(mkl::UniformSpec{1, d})) == IntPoly(ones), "h of uniform 1," + std::to_string(d));
  }
  const auto r = mkl::dominance_report(mkl::build_lattice(mkl::UniformSpec{1, 8}));
  out.expect(r.h.degree() == 7 && r.kl.degree() == 3 && !r.same_degree, "degree comparison");
  out.expect(!r.coefficientwise && r.first_failure == 1 && r.h.coeff(1) == 1 && r.kl.coeff(1) == 27,
             "coefficient comparison");
}

// 12. Leading-coefficient patterns
void leading_patterns(Outcome& out) {
  for (long k = 1; k <= 8; ++k) {
    const IntPoly p = mkl::uniform_kl(1, 2 * k - 1);
    out.expect(p.coeff(static_cast<std::size_t>(p.degree())) == mkl::catalan(k), "catalan k=" + std::to_string(k));
  }
  for (long k = 2; k <= 10; ++k) {
    const IntPoly p = mkl::braid_kl(2 * k);
    BigInt want = mkl::double_factorial_odd(k - 1);
    for (long j = 0; j < k - 2; ++j) want *= 2 * k - 1;
    out.expect(p.coeff(static_cast<std::size_t>(p.degree())) == want, "braid n=" + std::to_string(2 * k));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 uniform golden tables", uniform_tables},
      {"AC2 braid golden tables", braid_tables},
      {"AC3 generic recursion vs family formulas", cross_path},
      {"AC4 closed-form coefficients", closed_forms},
      {"AC5 structural identities", structural},
      {"AC6 modularity", modularity},
      {"AC7 generating functions", generating_functions},
      {"AC8 algebra axioms", algebra_axioms},
      {"AC9 multiplication tables", printed_tables},
      {"AC10 positivity counterexamples", counterexamples},
      {"AC11 broken circuit comparison", broken_circuits},
      {"AC12 leading-coefficient patterns", leading_patterns},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    const auto start = Clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (out.ok() ? "PASS " : "FAIL ") << name << " (" << out.checks << " checks, "
         << seconds_since(start) << " s)";
    for (const auto& p : out.problems) line << "\n    " << p;
    std::cout << line.str() << std::endl;
    if (!out.ok()) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
