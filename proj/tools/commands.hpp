#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kl_cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kComputation = 3,
  kMismatch = 4,
};

struct ComputeOptions {
  std::string spec;
  std::string path = "auto";  // auto | generic | fast | both
  std::string format = "json";
  bool bc = false;
};

struct TableOptions {
  std::string family;
  long m = -1;
  long dmin = -1;
  long dmax = -1;
  long nmin = 1;
  long nmax = -1;
  std::string format = "text";
};

struct AlgebraOptions {
  std::string spec;
  std::vector<std::string> product;
  bool scan = false;
  std::string routing = "auto";
  std::string format = "json";
};

struct VerifyOptions {
  std::string suite;
  long order = 6;
  std::size_t random_count = 50;
  unsigned long seed = 20160301;
};

/// Flat-count cap, from KL_FLAT_CAP when set.
std::size_t flat_cap();

int cmd_compute(const ComputeOptions& opt);
int cmd_table(const TableOptions& opt);
int cmd_algebra(const AlgebraOptions& opt);
int cmd_verify(const VerifyOptions& opt);

}  // namespace kl_cli
