#ifndef PMH_EMBEDDINGS_HPP
#define PMH_EMBEDDINGS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopf.hpp"
#include "matrix.hpp"

namespace pmh {

/// Permutation in one-line notation with a color in {1..k} per position.
struct ColoredPermutation {
  std::vector<int> perm;    // values 1..n, a bijection
  std::vector<int> colors;  // same length, entries 1..k
};

bool operator==(const ColoredPermutation& a, const ColoredPermutation& b);

/// Parses "312:121" (word:colors); a bare "312" gets all colors 1.
ColoredPermutation parse_colored_permutation(const std::string& text);

/// Generalized permutation matrix of (perm, colors): entry (i, j) holds
/// color j exactly when perm[j] = i.
PackedMatrix alpha_k(const ColoredPermutation& p, int k);

std::vector<ColoredPermutation> enumerate_colored_permutations(int n, int k);

/// Shifted shuffle product on colored permutations: values of the right
/// operand shift by the left size, colors travel with their letters; one
/// term per interleaving.
std::vector<ColoredPermutation> colored_shuffle(const ColoredPermutation& a,
                                                const ColoredPermutation& b);

/// Both sides of the embedding identity: the matrix product of the images
/// equals the image of the shifted shuffle, termwise.
bool colored_shuffle_correspondence(const ColoredPermutation& a, const ColoredPermutation& b,
                                    int k);

// ---------------------------------------------------------------------------
// Uniform block permutations

/// Bijection between two set partitions of [n] matching block sizes.
struct UniformBlockPermutation {
  int size = 0;
  // Blocks as (domain, image) pairs of ascending element lists, ordered by
  // the least domain element.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
};

bool operator==(const UniformBlockPermutation& a, const UniformBlockPermutation& b);

/// Parses the block text form "{1,4,5}->{2,5,6}; {2}->{1}; {3,6}->{3,4}".
/// Validates that both sides partition [n] and block sizes match.
UniformBlockPermutation parse_ubp(const std::string& text);
std::string format_ubp(const UniformBlockPermutation& u);

UniformBlockPermutation ubp_inverse(const UniformBlockPermutation& u);

/// 0/1 matrix with support the union of image x domain rectangles.
PackedMatrix beta(const UniformBlockPermutation& u);

/// True iff every connected component of the support bipartite graph is a
/// complete rectangle with equally many rows and columns.
bool is_ubp_support(const PackedMatrix& m);

/// Recovers the block bijection from a support matrix when possible.
std::optional<UniformBlockPermutation> ubp_from_support(const PackedMatrix& m);

/// All UBPs of one size, by filtering the size stratum for valid supports.
std::vector<UniformBlockPermutation> enumerate_ubp(int n);

// ---------------------------------------------------------------------------
// Image-closure verification

using MatrixPredicate = std::function<bool(const PackedMatrix&)>;

/// Span closure of an image predicate: products of image pairs stay in the
/// image, and both factors of every coproduct term of an image element are
/// in the image.  Pairs and elements run over k = 1 strata within budget.
VerifyReport image_closure_check(const MatrixPredicate& in_image, int size_budget,
                                 const std::string& label);

VerifyReport embeddings_check(int size_budget, bool inject_nonclosed_fault = false);

}  // namespace pmh

#endif
