#pragma once

#include <map>
#include <string>
#include <vector>

namespace mkl {

// Published KL polynomial tables, stored as decimal coefficient strings
// (constant term first). Used by `kl verify tables` and the test suites.

/// Uniform matroids of rank d on m + d elements, keyed by d; m in {1, 2, 3}.
/// Empty for any other m.
const std::map<long, std::vector<std::string>>& uniform_reference(long m);
/// Braid matroids for n = 1..20, keyed by n.
const std::map<long, std::vector<std::string>>& braid_reference();

}  // namespace mkl
