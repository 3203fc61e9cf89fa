#include "commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flat_names.hpp"
#include "mkl/algebra.hpp"
#include "mkl/bc_complex.hpp"
#include "mkl/error.hpp"
#include "mkl/families.hpp"
#include "mkl/kl.hpp"
#include "mkl/matroid_spec.hpp"

namespace kl_cli {

using json = nlohmann::ordered_json;
using mkl::Error;
using mkl::ErrorKind;
using mkl::IntPoly;
using mkl::LaurentPoly;

namespace {

json poly_json(const IntPoly& p) { return p.coeff_strings(); }

json laurent_json(const LaurentPoly& p) {
  return json{{"lowest", p.lowest()}, {"coeffs", p.coeff_strings()}, {"text", p.to_string()}};
}

std::optional<mkl::FamilyTag> family_of(const mkl::MatroidSpec& spec) {
  if (const auto* u = std::get_if<mkl::UniformSpec>(&spec)) {
    if (u->d == 0 && u->m > 0) throw Error(ErrorKind::LoopsPresent, "uniform matroid of rank 0 on a non-empty set");
    return mkl::FamilyTag{mkl::FamilyKind::Uniform, u->m, u->d, 0};
  }
  if (const auto* b = std::get_if<mkl::BooleanSpec>(&spec)) return mkl::FamilyTag{mkl::FamilyKind::Boolean, 0, 0, b->n};
  if (const auto* b = std::get_if<mkl::BraidSpec>(&spec)) return mkl::FamilyTag{mkl::FamilyKind::Braid, 0, 0, b->n};
  return std::nullopt;
}

long family_rank(const mkl::FamilyTag& tag) {
  switch (tag.kind) {
    case mkl::FamilyKind::Uniform:
      return tag.d;
    case mkl::FamilyKind::Boolean:
      return tag.n;
    case mkl::FamilyKind::Braid:
      return tag.n - 1;
  }
  return 0;
}

struct PathResult {
  IntPoly kl;
  IntPoly chi;
  long rank = 0;
  std::optional<std::size_t> flats;
};

PathResult run_generic(const mkl::MatroidSpec& spec) {
  const auto lat = mkl::build_lattice(spec, flat_cap());
  PathResult r;
  r.kl = mkl::kl_poly(lat).poly;
  r.chi = mkl::char_poly(lat);
  r.rank = lat.rank();
  r.flats = lat.size();
  return r;
}

PathResult run_fast(const mkl::FamilyTag& tag) {
  PathResult r;
  r.kl = mkl::family_kl(tag);
  r.chi = mkl::family_char_poly(tag);
  r.rank = family_rank(tag);
  return r;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Error(ErrorKind::ParseError, "unsupported --format '" + format + "'");
}

std::string power_label(std::size_t i) {
  if (i == 0) return "1";
  if (i == 1) return "t";
  return "t^" + std::to_string(i);
}

}  // namespace

std::size_t flat_cap() {
  const char* env = std::getenv("KL_FLAT_CAP");
  if (env == nullptr || *env == '\0') return mkl::kDefaultFlatCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorKind::ParseError, std::string("invalid KL_FLAT_CAP '") + env + "'");
  return static_cast<std::size_t>(v);
}

int cmd_compute(const ComputeOptions& opt) {
  check_format(opt.format, {"json", "text"});
  const auto spec = mkl::parse_spec(opt.spec);
  const auto tag = family_of(spec);
  std::string path = opt.path;
  if (path == "auto") path = tag ? "fast" : "generic";
  if (path != "generic" && path != "fast" && path != "both") {
    throw Error(ErrorKind::ParseError, "--path must be generic, fast or both");
  }
  if (path != "generic" && !tag) throw Error(ErrorKind::ParseError, "no fast path for " + mkl::describe(spec));

  PathResult result;
  bool mismatch = false;
  if (path == "generic") {
    result = run_generic(spec);
  } else if (path == "fast") {
    result = run_fast(*tag);
  } else {
    const PathResult fast = run_fast(*tag);
    result = run_generic(spec);
    mismatch = !(fast.kl == result.kl) || !(fast.chi == result.chi) || fast.rank != result.rank;
    if (mismatch) {
      std::cerr << "kl: generic and fast paths disagree for " << opt.spec << "\n"
                << "  generic: P = " << result.kl.to_string() << ", chi = " << result.chi.to_string() << "\n"
                << "  fast:    P = " << fast.kl.to_string() << ", chi = " << fast.chi.to_string() << "\n";
    }
  }
  const auto report = mkl::conjecture_report(result.kl);

  if (opt.format == "json") {
    json out;
    out["matroid"] = opt.spec;
    out["rank"] = result.rank;
    out["path"] = path;
    if (result.flats) out["flats"] = *result.flats;
    out["kl"] = poly_json(result.kl);
    out["char"] = poly_json(result.chi);
    out["report"] = {{"non_negative", report.non_negative},
                     {"log_concave", report.log_concave},
                     {"no_internal_zeros", report.no_internal_zeros}};
    if (opt.bc) {
      const auto dom = mkl::dominance_report(mkl::bc_h_poly(result.chi), result.kl);
      out["bc"] = {{"h", poly_json(dom.h)},
                   {"same_degree", dom.same_degree},
                   {"coefficientwise", dom.coefficientwise},
                   {"dominates", dom.holds()}};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "matroid  " << opt.spec << "\n"
              << "rank     " << result.rank << "\n"
              << "path     " << path << "\n";
    if (result.flats) std::cout << "flats    " << *result.flats << "\n";
    std::cout << "P(t)     " << result.kl.to_string() << "\n"
              << "chi(t)   " << result.chi.to_string() << "\n"
              << "report   non-negative=" << report.non_negative << " log-concave=" << report.log_concave
              << " no-internal-zeros=" << report.no_internal_zeros << "\n";
    if (opt.bc) {
      const auto dom = mkl::dominance_report(mkl::bc_h_poly(result.chi), result.kl);
      std::cout << "h_bc(t)  " << dom.h.to_string() << "\n"
                << "dominant same-degree=" << dom.same_degree << " coefficientwise=" << dom.coefficientwise << "\n";
    }
  }
  return mismatch ? kMismatch : kOk;
}

int cmd_table(const TableOptions& opt) {
  check_format(opt.format, {"json", "text", "csv"});
  std::vector<std::pair<long, IntPoly>> columns;
  json meta;
  if (opt.family == "uniform") {
    if (opt.m < 0 || opt.dmax < 0) throw Error(ErrorKind::ParseError, "uniform tables need --m and --dmax");
    const long dmin = opt.dmin >= 0 ? opt.dmin : (opt.m <= 1 ? 1 : 3);
    if (opt.dmax > 400) throw Error(ErrorKind::TooLarge, "--dmax above 400");
    for (long d = dmin; d <= opt.dmax; ++d) columns.emplace_back(d, mkl::uniform_kl(opt.m, d));
    meta = {{"family", "uniform"}, {"m", opt.m}};
  } else if (opt.family == "braid") {
    if (opt.nmax < 0) throw Error(ErrorKind::ParseError, "braid tables need --nmax");
    if (opt.nmin < 1) throw Error(ErrorKind::ParseError, "--nmin must be at least 1");
    if (opt.nmax > 40) throw Error(ErrorKind::TooLarge, "--nmax above 40");
    for (long n = opt.nmin; n <= opt.nmax; ++n) columns.emplace_back(n, mkl::braid_kl(n));
    meta = {{"family", "braid"}};
  } else {
    throw Error(ErrorKind::ParseError, "table family must be uniform or braid");
  }
  const char* key = opt.family == "uniform" ? "d" : "n";

  if (opt.format == "json") {
    json out = meta;
    out["columns"] = json::array();
    for (const auto& [k, p] : columns) out["columns"].push_back({{key, k}, {"kl", poly_json(p)}});
    std::cout << out.dump(2) << "\n";
    return kOk;
  }

  std::size_t rows = 0;
  for (const auto& col : columns) rows = std::max(rows, col.second.coeffs().size());
  // Polynomials read down the columns, one row per power of t.
  std::vector<std::vector<std::string>> grid(rows + 1);
  grid[0].push_back(std::string(key) + "=");
  for (const auto& col : columns) grid[0].push_back(std::to_string(col.first));
  for (std::size_t i = 0; i < rows; ++i) {
    grid[i + 1].push_back(power_label(i));
    for (const auto& col : columns) {
      grid[i + 1].push_back(i < col.second.coeffs().size() ? col.second.coeffs()[i].get_str() : "");
    }
  }
  if (opt.format == "csv") {
    for (const auto& row : grid) {
      for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << row[c];
      std::cout << "\n";
    }
    return kOk;
  }
  std::vector<std::size_t> width(columns.size() + 1, 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : grid) {
    std::cout << std::left << std::setw(static_cast<int>(width[0])) << row[0];
    for (std::size_t c = 1; c < row.size(); ++c) {
      std::cout << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_algebra(const AlgebraOptions& opt) {
  check_format(opt.format, {"json", "text"});
  if (opt.scan == !opt.product.empty()) throw Error(ErrorKind::ParseError, "give exactly one of --product F G or --scan");
  if (!opt.scan && opt.product.size() != 2) throw Error(ErrorKind::ParseError, "--product takes two flats");
  mkl::IntervalRouting routing;
  if (opt.routing == "auto") {
    routing = mkl::IntervalRouting::Auto;
  } else if (opt.routing == "generic") {
    routing = mkl::IntervalRouting::Generic;
  } else {
    throw Error(ErrorKind::ParseError, "--routing must be auto or generic");
  }
  const auto spec = mkl::parse_spec(opt.spec);
  const mkl::MobiusAlgebra algebra(mkl::build_lattice(spec, flat_cap()), routing);
  const auto& lat = algebra.lattice();
  auto flat_json = [&](mkl::FlatLattice::Index i) {
    return json{{"flat", flat_name(lat, i)}, {"rank", lat.rank(i)}};
  };

  if (!opt.scan) {
    const auto f = parse_flat(lat, spec, opt.product[0]);
    const auto g = parse_flat(lat, spec, opt.product[1]);
    const auto product = algebra.kl_product(f, g);
    if (opt.format == "json") {
      json out;
      out["matroid"] = opt.spec;
      out["F"] = flat_json(f);
      out["G"] = flat_json(g);
      out["product"] = json::array();
      for (const auto& [h, c] : product) {
        json term = flat_json(h);
        term["coeff"] = laurent_json(c);
        out["product"].push_back(std::move(term));
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "x_" << flat_name(lat, f) << " * x_" << flat_name(lat, g) << " =\n";
      for (const auto& [h, c] : product) std::cout << "  (" << c.to_string() << ") x_" << flat_name(lat, h) << "\n";
    }
    return kOk;
  }

  const auto findings = algebra.positivity_scan();
  if (opt.format == "json") {
    json out;
    out["matroid"] = opt.spec;
    out["flats"] = lat.size();
    out["holds"] = findings.empty();
    out["findings"] = json::array();
    for (const auto& fnd : findings) {
      out["findings"].push_back(
          {{"F", flat_json(fnd.f)}, {"G", flat_json(fnd.g)}, {"H", flat_json(fnd.h)}, {"coeff", laurent_json(fnd.value)}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << opt.spec << ": " << lat.size() << " flats, " << findings.size() << " negative structure constants\n";
    for (const auto& fnd : findings) {
      std::cout << "  C[" << flat_name(lat, fnd.f) << ", " << flat_name(lat, fnd.g) << "; " << flat_name(lat, fnd.h)
                << "] = " << fnd.value.to_string() << "\n";
    }
  }
  return kOk;
}

}  // namespace kl_cli
