#ifndef PMH_OEIS_HPP
#define PMH_OEIS_HPP

#include <string>
#include <vector>

#include "numeric.hpp"

namespace pmh {

struct OeisEntry {
  std::string id;
  std::string what;
  std::vector<BigInt> expected;  // stored prefix
  std::vector<BigInt> computed;  // recomputed here, possibly shorter
  bool match = false;
};

struct OeisReport {
  std::vector<OeisEntry> entries;
  // The enumerated io-quotient dimensions against the two candidate closed
  // forms; exactly one of them should track the enumeration.
  bool io_matches_shifted_form = false;    // floor((n-1)^2/4) + 1
  bool io_matches_unshifted_form = false;  // floor(n^2/4) + 1
  bool all_ok() const;
  std::string to_text() const;
};

/// Compares computed sequences against the stored prefixes; no network.
OeisReport oeis_check();

}  // namespace pmh

#endif
