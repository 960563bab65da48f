#ifndef PMH_TABLES_HPP
#define PMH_TABLES_HPP

#include <string>

#include "series.hpp"

namespace pmh {

/// CSV dimension tables (header row included, byte-stable output).
///
/// Selectors:
///   "all"                 degree, dimension, generators, totally_primitive
///   "generators"          degree, generators
///   "primitives"          degree, totally_primitive
///   "congruence:<name>"   degree, dimension (class counts)
///   "asm"                 degree, dimension (enumerated, size grading only)
///   "quotient:<s1,s2...>" degree, dimension (statistic tuples, size grading)
/// Throws std::invalid_argument for unknown selectors.
std::string dims_csv(const std::string& what, int k, Grading grading, int max_degree);

/// Per-size histograms of all six vertex statistics over ASMs:
/// columns n, stat, value, count.
std::string asm_stats_csv(int n);

}  // namespace pmh

#endif
