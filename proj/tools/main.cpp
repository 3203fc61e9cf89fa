#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mkl/error.hpp"

namespace {

int exit_code_for(mkl::ErrorKind kind) {
  switch (kind) {
    case mkl::ErrorKind::ParseError:
    case mkl::ErrorKind::FlatNotInLattice:
      return kl_cli::kUsage;
    default:
      return kl_cli::kComputation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig polynomials of matroids"};
  app.require_subcommand(1);

  kl_cli::ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "KL and characteristic polynomial of a matroid");
  c->add_option("spec", compute.spec, "uniform:m,d | boolean:n | braid:n | graph:@F | matrix:@F | flats:@F")->required();
  c->add_option("--path", compute.path, "generic, fast, both (default: fast for families)")
      ->check(CLI::IsMember({"auto", "generic", "fast", "both"}));
  c->add_option("--format", compute.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  c->add_flag("--bc", compute.bc, "include the broken circuit h-polynomial comparison");

  kl_cli::TableOptions table;
  auto* t = app.add_subcommand("table", "tables of uniform or braid KL polynomials");
  t->add_option("family", table.family, "uniform or braid")->required()->check(CLI::IsMember({"uniform", "braid"}));
  t->add_option("--m", table.m, "uniform: corank parameter m");
  t->add_option("--dmin", table.dmin, "uniform: first rank (default 1 for m <= 1, else 3)");
  t->add_option("--dmax", table.dmax, "uniform: last rank");
  t->add_option("--nmin", table.nmin, "braid: first n");
  t->add_option("--nmax", table.nmax, "braid: last n");
  t->add_option("--format", table.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  kl_cli::AlgebraOptions algebra;
  auto* a = app.add_subcommand("algebra", "products in the KL basis of the deformed Mobius algebra");
  a->add_option("spec", algebra.spec, "matroid spec")->required();
  a->add_option("--product", algebra.product, "two flats F G")->expected(2)->allow_extra_args(false);
  a->add_flag("--scan", algebra.scan, "report all negative structure constants");
  a->add_option("--routing", algebra.routing, "interval KL polynomials: auto or generic")
      ->check(CLI::IsMember({"auto", "generic"}));
  a->add_option("--format", algebra.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  kl_cli::VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "run a named self-check suite");
  v->add_option("suite", verify.suite, "identities | gf | coefficients | tables | algebra")
      ->required()
      ->check(CLI::IsMember({"identities", "gf", "coefficients", "tables", "algebra"}));
  v->add_option("--order", verify.order, "series truncation order for gf");
  v->add_option("--random", verify.random_count, "number of random matrices in the corpus");
  v->add_option("--seed", verify.seed, "seed for the random corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kl_cli::kUsage;
  }

  try {
    if (*c) return kl_cli::cmd_compute(compute);
    if (*t) return kl_cli::cmd_table(table);
    if (*a) return kl_cli::cmd_algebra(algebra);
    if (*v) return kl_cli::cmd_verify(verify);
  } catch (const mkl::Error& e) {
    std::cerr << "kl: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "kl: " << e.what() << "\n";
    return kl_cli::kComputation;
  }
  return kl_cli::kUsage;
}
