#ifndef PMH_CONGRUENCE_HPP
#define PMH_CONGRUENCE_HPP

#include <string>
#include <vector>

#include "column_word.hpp"
#include "hopf.hpp"
#include "series.hpp"

namespace pmh {

/// The named congruences on column words.  BrokenLast is a deliberately bad
/// relation (words identified by their final letter) used as the negative
/// control for the validator and the class-sum closure checks.
enum class CongruenceKind { Sylvester, Plactic, Hypoplactic, Total, BrokenLast };

const char* congruence_name(CongruenceKind kind);
/// Accepts "sylvester", "plactic", "hypoplactic", "total", "broken".
CongruenceKind congruence_from_name(const std::string& name);

/// Canonical class key.  For the good congruences the key is the pair
/// (evaluation, structural key of the compressed word), which makes
/// compatibility with decompression hold by construction:
///   - sylvester:   binary search tree from right-to-left insertion,
///   - plactic:     row-insertion tableau,
///   - hypoplactic: recoil set of the standardized word,
///   - total:       nothing beyond the evaluation.
std::string class_key(CongruenceKind kind, const ColumnWord& w);

/// Number of distinct class keys among the packed matrices of one stratum.
long class_count(CongruenceKind kind, int k, Grading grading, int degree);

/// Per-degree class counts, degree 0..max_degree.
std::vector<long> class_dims(CongruenceKind kind, int k, Grading grading, int max_degree);

/// Desk-scale validation of the three good-congruence conditions on words
/// over the k = 1 column alphabet (heights and lengths up to the budgets):
///   (1) two-sided stability under concatenation,
///   (2) stability under restriction to alphabet intervals,
///   (3) the decompression biconditional.
VerifyReport validate_good_congruence(CongruenceKind kind, int max_height = 3,
                                      int max_length = 3, unsigned seed = 1);

/// Checks that products of class sums expand to unions of whole classes with
/// multiplicity one, and that class-sum coproduct coefficients are constant
/// on class pairs, over the k = 1 strata of sizes n1, n2 (and n1 + n2 for
/// the coproduct side).
VerifyReport p_basis_product_check(CongruenceKind kind, int n1, int n2);

}  // namespace pmh

#endif
