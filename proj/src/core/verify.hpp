#ifndef PMH_VERIFY_HPP
#define PMH_VERIFY_HPP

#include <string>

#include "hopf.hpp"

namespace pmh {

/// Options for the named verification suites driven by the CLI and C API.
struct SuiteOptions {
  int k = 1;
  int max_size = 4;
  unsigned seed = 1;
  /// Negative-control fault: "", "drop-shuffle-term", "broken-congruence",
  /// "non-closed-image".
  std::string inject_fault;
};

/// Suites: "hopf", "congruences", "asm-closure", "asm-morphisms",
/// "embeddings", "all".  Deterministic for fixed options.
/// Throws std::invalid_argument for unknown suite or fault names.
VerifyReport run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace pmh

#endif
