#ifndef PMH_HOPF_HPP
#define PMH_HOPF_HPP

#include <string>
#include <vector>

#include "lincomb.hpp"
#include "matrix.hpp"

namespace pmh {

/// Fault injection for negative-control tests: the faulty paths are only
/// reachable through the verification drivers, never through the plain ops.
enum class HopfFault { None, DropShuffleTerm };

// ---------------------------------------------------------------------------
// Fundamental-basis operations

/// Column shifted shuffle: pad m1 below and m2 above with zero rows, then sum
/// over all interleavings of their column sequences.  C(n1+n2, n1) terms, all
/// with coefficient 1.
Element product_F(const PackedMatrix& m1, const PackedMatrix& m2,
                  HopfFault fault = HopfFault::None);

/// One tensor term per vertical cut with square compressed factors, both
/// factors compressed; includes the two trivial cuts.
Tensor coproduct_F(const PackedMatrix& m);

/// Antipode by the explicit signed factorization formula: over all ordered
/// column factorizations into r >= 1 nonempty blocks with square
/// compressions, add (-1)^r times the product of the compressed blocks.
Element antipode_F(const PackedMatrix& m);

/// Antipode of a combination, termwise.
Element antipode_F(const Element& e);

/// Row shifted shuffle: m1 padded right, m2 padded left, rows interleaved.
Element dual_product_F(const PackedMatrix& m1, const PackedMatrix& m2,
                       HopfFault fault = HopfFault::None);

/// One tensor term per horizontal cut with square compressed factors; the
/// first factor is the compressed top block.
Tensor dual_coproduct_F(const PackedMatrix& m);

/// Self-duality: relabels every term by its transpose (F <-> F*).
Element duality_transpose(const Element& e);
Tensor duality_transpose(const Tensor& t);

// ---------------------------------------------------------------------------
// Dendriform / codendriform splittings (on nonempty arguments)

/// Shuffle terms whose last column comes from m1.
Element dendriform_left(const PackedMatrix& m1, const PackedMatrix& m2);
/// Shuffle terms whose last column comes from m2.
Element dendriform_right(const PackedMatrix& m1, const PackedMatrix& m2);

/// Nontrivial coproduct terms whose left factor keeps the bottom row of m.
Tensor codendriform_left(const PackedMatrix& m);
/// Nontrivial coproduct terms whose right factor keeps the bottom row of m.
Tensor codendriform_right(const PackedMatrix& m);

// ---------------------------------------------------------------------------
// Bilinear extensions used by the axiom checks

Element product_F(const Element& a, const Element& b, HopfFault fault = HopfFault::None);
Element dual_product_F(const Element& a, const Element& b,
                       HopfFault fault = HopfFault::None);
Tensor coproduct_F(const Element& e);
Element dendriform_left(const Element& a, const Element& b);
Element dendriform_right(const Element& a, const Element& b);
Tensor codendriform_left(const Element& e);
Tensor codendriform_right(const Element& e);

/// Componentwise product of tensors: (a (x) b)(c (x) d) = ac (x) bd.
Tensor product_F(const Tensor& a, const Tensor& b, HopfFault fault = HopfFault::None);

/// Coproduct applied to the left/right slot of a rank-2 tensor, producing a
/// rank-3 combination with explicit reassociation.
Tensor3 coproduct_left_slot(const Tensor& t);
Tensor3 coproduct_right_slot(const Tensor& t);
enum class SlotOp { Full, Left, Right };  // which reduced coproduct to apply
Tensor3 apply_slot(const Tensor& t, int slot, SlotOp op);

// ---------------------------------------------------------------------------
// Axiom verification

struct CheckResult {
  std::string name;
  long instances = 0;
  bool ok = true;
  std::string counterexample;  // matrix text of the first violating instance
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_ok() const;
  std::string to_text() const;  // one line per check plus a verdict line
};

/// Exhaustively checks, over all k-packed matrices within the size budget:
/// associativity and coassociativity, compatibility of the coproduct with
/// the product, the antipode convolution identity, and the three dendriform
/// plus three codendriform axioms.  Triple checks run over size sums within
/// the budget.  The convolution identity is by far the costliest sweep; it
/// runs up to `antipode_budget` (default: min(size_budget, 3)).
VerifyReport verify_axioms(int k, int size_budget, HopfFault fault = HopfFault::None,
                           int antipode_budget = -1);

}  // namespace pmh

#endif
