#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bnf {

/// Outcome of one randomized identity check.
struct IdentityCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double max_error = 0.0;  ///< largest deviation (or bound violation) seen

  bool passed() const { return instances > 0 && failures == 0; }
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t instances = 500;
  unsigned max_arity = 8;
};

/// Checks the spectral identities against direct computations from truth
/// tables on random functions, distributions and variable sets.
std::vector<IdentityCheck> run_selftest(const SelftestOptions& options = {});

}  // namespace bnf
