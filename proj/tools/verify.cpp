#include <functional>
#include <iostream>
#include <random>

#include "commands.hpp"
#include "mkl/algebra.hpp"
#include "mkl/corpus.hpp"
#include "mkl/error.hpp"
#include "mkl/families.hpp"
#include "mkl/kl.hpp"
#include "mkl/reference_tables.hpp"

namespace kl_cli {

using mkl::BigInt;
using mkl::FlatLattice;
using mkl::IntPoly;
using mkl::LaurentPoly;

namespace {

class Reporter {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++total_;
    if (!ok) ++failed_;
    std::cerr << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cerr << ": " << detail;
    std::cerr << "\n";
  }
  /// Runs fn and records a failure if it throws.
  void guarded(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  }
  int finish(const std::string& suite) const {
    std::cout << suite << ": " << (total_ - failed_) << "/" << total_ << " checks passed\n";
    return failed_ == 0 ? kOk : kVerifyFailed;
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
};

std::vector<mkl::CorpusEntry> corpus(const VerifyOptions& opt, long max_uniform, long max_braid, long max_boolean) {
  auto out = mkl::family_corpus(max_uniform, max_braid, max_boolean);
  for (auto& e : mkl::random_matrix_corpus(opt.random_count, opt.seed)) out.push_back(std::move(e));
  out.push_back({"fano", mkl::fano_matrix()});
  return out;
}

std::string mismatch(const IntPoly& got, const IntPoly& want) {
  return "got " + got.to_string() + ", expected " + want.to_string();
}

void suite_identities(const VerifyOptions& opt, Reporter& rep) {
  std::vector<FlatLattice> small;
  for (const auto& entry : corpus(opt, 8, 6, 5)) {
    rep.guarded(entry.name, [&] {
      const auto lat = mkl::build_lattice(entry.spec, flat_cap());
      const IntPoly p = mkl::kl_poly(lat).poly;
      bool ok = p.coeff(0) == 1 && (lat.rank() == 0 || 2 * p.degree() < lat.rank());
      ok = ok && mkl::check_defining_identity(lat, p);
      if (lat.rank() > 0) ok = ok && mkl::cancellation_check(lat);
      ok = ok && ((p == IntPoly{1}) == mkl::is_modular(lat));
      rep.check(entry.name + " identities", ok, "P = " + p.to_string());
      if (lat.size() <= 40) small.push_back(lat);
    });
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  for (int trial = 0; trial < 30 && !small.empty(); ++trial) {
    const auto& a = small[pick(rng)];
    const auto& b = small[pick(rng)];
    const std::string name = "direct sum #" + std::to_string(trial);
    rep.guarded(name, [&] {
      const auto sum = mkl::direct_sum(a, b, flat_cap());
      const IntPoly want = mkl::kl_poly(a).poly * mkl::kl_poly(b).poly;
      const IntPoly got = mkl::kl_poly(sum).poly;
      const bool chi_ok = mkl::char_poly(sum) == mkl::char_poly(a) * mkl::char_poly(b);
      rep.check(name, got == want && chi_ok, mismatch(got, want));
    });
  }
}

void suite_gf(const VerifyOptions& opt, Reporter& rep) {
  for (long m = 0; m <= 3; ++m) {
    const std::string name = "uniform gf m=" + std::to_string(m) + " order " + std::to_string(opt.order);
    rep.guarded(name, [&] { rep.check(name, mkl::gf_check_uniform(m, opt.order)); });
  }
  const std::string name = "braid gf order " + std::to_string(opt.order);
  rep.guarded(name, [&] { rep.check(name, mkl::gf_check_braid(opt.order)); });
}

void suite_coefficients(const VerifyOptions& opt, Reporter& rep) {
  for (const auto& entry : corpus(opt, 10, 8, 6)) {
    rep.guarded(entry.name, [&] {
      const auto lat = mkl::build_lattice(entry.spec, flat_cap());
      const IntPoly p = mkl::kl_poly(lat).poly;
      std::string detail;
      for (int i = 0; i <= 3; ++i) {
        const BigInt c = mkl::kl_coeff_closed(lat, i);
        if (c != p.coeff(static_cast<std::size_t>(i))) {
          detail += "c" + std::to_string(i) + "=" + c.get_str() + " vs " + p.coeff(static_cast<std::size_t>(i)).get_str() + " ";
        }
      }
      rep.check(entry.name + " closed forms", detail.empty(), detail);
    });
  }
  for (long m = 0; m <= 3; ++m) {
    for (long d = 0; d <= 15; ++d) {
      const IntPoly p = mkl::uniform_kl(m, d);
      bool ok = true;
      for (int i = 0; i <= 3; ++i) ok = ok && mkl::uniform_coeff_closed(m, d, i) == p.coeff(static_cast<std::size_t>(i));
      rep.check("uniform closed forms m=" + std::to_string(m) + " d=" + std::to_string(d), ok);
    }
  }
  for (long n = 1; n <= 20; ++n) {
    const BigInt c = mkl::braid_cubic(n);
    const BigInt want = mkl::braid_kl(n).coeff(3);
    rep.check("braid cubic n=" + std::to_string(n), c == want, c.get_str() + " vs " + want.get_str());
  }
}

void suite_tables(Reporter& rep) {
  for (long m = 1; m <= 3; ++m) {
    for (const auto& [d, col] : mkl::uniform_reference(m)) {
      const IntPoly p = mkl::uniform_kl(m, d);
      rep.check("uniform m=" + std::to_string(m) + " d=" + std::to_string(d), p.coeff_strings() == col, p.to_string());
    }
  }
  for (const auto& [n, col] : mkl::braid_reference()) {
    const IntPoly p = mkl::braid_kl(n);
    rep.check("braid n=" + std::to_string(n), p.coeff_strings() == col, p.to_string());
  }
}

LaurentPoly at_one_eval(const mkl::AlgebraElement& a, FlatLattice::Index idx) {
  auto it = a.find(idx);
  return it == a.end() ? LaurentPoly{} : LaurentPoly::monomial(it->second.at_one(), 0);
}

void suite_algebra(const VerifyOptions& opt, Reporter& rep) {
  for (const auto& entry : corpus(opt, 5, 4, 4)) {
    rep.guarded(entry.name, [&] {
      const auto lat = mkl::build_lattice(entry.spec, flat_cap());
      if (lat.size() > 16) return;
      const mkl::MobiusAlgebra alg(lat);
      const auto n = static_cast<FlatLattice::Index>(lat.size());
      auto eps = [](FlatLattice::Index i) { return mkl::AlgebraElement{{i, LaurentPoly::monomial(1, 0)}}; };
      bool comm = true, assoc = true, unit = true, special = true, fast = true, round = true;
      const auto one = alg.unit();
      for (FlatLattice::Index f = 0; f < n; ++f) {
        unit = unit && alg.multiply(one, eps(f)) == eps(f);
        round = round && alg.expand_in_kl_basis(alg.kl_basis_element(f)) == eps(f);
        for (FlatLattice::Index g = 0; g < n; ++g) {
          const auto fg = alg.eps_product(f, g);
          comm = comm && fg == alg.eps_product(g, f);
          fast = fast && alg.multiply_fast(eps(f), eps(g)) == fg;
          // At q = 1 the product collapses onto the join.
          const auto j = lat.join(f, g);
          for (FlatLattice::Index h = 0; h < n; ++h) {
            const BigInt want = h == j ? 1 : 0;
            special = special && at_one_eval(fg, h) == LaurentPoly::monomial(want, 0);
          }
          for (FlatLattice::Index k = 0; k < n; ++k) {
            assoc = assoc && alg.multiply(fg, eps(k)) == alg.multiply(eps(f), alg.eps_product(g, k));
          }
        }
      }
      rep.check(entry.name + " commutative", comm);
      rep.check(entry.name + " associative", assoc);
      rep.check(entry.name + " unit", unit);
      rep.check(entry.name + " q=1 join product", special);
      rep.check(entry.name + " fast product", fast);
      rep.check(entry.name + " KL basis round trip", round);
    });
  }
  for (long n = 1; n <= 4; ++n) {
    const std::string name = "boolean closed form n=" + std::to_string(n);
    rep.guarded(name, [&] {
      const auto lat = mkl::build_lattice(mkl::BooleanSpec{n});
      const mkl::MobiusAlgebra alg(lat);
      bool ok = true;
      for (FlatLattice::Index f = 0; f < lat.size(); ++f) {
        for (FlatLattice::Index g = 0; g < lat.size(); ++g) {
          mkl::AlgebraElement want;
          for (const auto& [k, c] : mkl::boolean_product_closed(static_cast<std::size_t>(n), lat.flat(f), lat.flat(g))) {
            want.emplace(lat.index_of(k), c);
          }
          ok = ok && alg.kl_product(f, g) == want;
        }
      }
      rep.check(name, ok);
    });
  }
  for (long n = 3; n <= 6; ++n) {
    const std::string name = "rank 2 uniform n=" + std::to_string(n);
    rep.guarded(name, [&] {
      const auto lat = mkl::build_lattice(mkl::UniformSpec{n - 2, 2});
      const mkl::MobiusAlgebra alg(lat);
      const LaurentPoly want(0, {BigInt(1), BigInt(n), BigInt((n - 1) * (n - 1))});
      rep.check(name, alg.structure_constant(lat.bottom(), lat.bottom(), lat.top()) == want);
    });
  }
  rep.guarded("braid 4 x_0^2", [&] {
    const auto lat = mkl::build_lattice(mkl::BraidSpec{4});
    const mkl::MobiusAlgebra alg(lat);
    const LaurentPoly want(0, {1, 7, 32, 38, 13, 1});
    rep.check("braid 4 x_0^2", alg.structure_constant(lat.bottom(), lat.bottom(), lat.top()) == want);
  });
  rep.guarded("uniform 2,4 positivity counterexample", [&] {
    const mkl::MobiusAlgebra alg(mkl::build_lattice(mkl::UniformSpec{2, 4}));
    rep.check("uniform 2,4 positivity counterexample", !alg.positivity_scan().empty());
  });
}

}  // namespace

int cmd_verify(const VerifyOptions& opt) {
  if (opt.order < 1) throw mkl::Error(mkl::ErrorKind::ParseError, "--order must be positive");
  Reporter rep;
  if (opt.suite == "identities") {
    suite_identities(opt, rep);
  } else if (opt.suite == "gf") {
    suite_gf(opt, rep);
  } else if (opt.suite == "coefficients") {
    suite_coefficients(opt, rep);
  } else if (opt.suite == "tables") {
    suite_tables(rep);
  } else if (opt.suite == "algebra") {
    suite_algebra(opt, rep);
  } else {
    throw mkl::Error(mkl::ErrorKind::ParseError, "unknown suite '" + opt.suite + "'");
  }
  return rep.finish(opt.suite);
}

}  // namespace kl_cli
