#ifndef PMH_ORDER_HPP
#define PMH_ORDER_HPP

#include <set>
#include <vector>

#include "lincomb.hpp"
#include "matrix.hpp"

namespace pmh {

/// Comparison container for BFS frontiers over the cover graph.
using MatrixSet = std::set<PackedMatrix, detail::CanonicalKeyLess>;

/// One-step successors: exchanging columns i, i+1 is allowed when the count
/// of zeros ending column i plus the count of zeros starting column i+1 is
/// at least the matrix size.
std::vector<PackedMatrix> covers(const PackedMatrix& m);

/// One-step predecessors (matrices with m among their covers).
std::vector<PackedMatrix> covers_inverse(const PackedMatrix& m);

/// Reflexive-transitive closure of the cover relation; same size required.
bool leq_M(const PackedMatrix& lo, const PackedMatrix& hi);

/// {x : lo <= x <= hi}, computed as forward closure from lo intersected with
/// backward closure from hi.
MatrixSet interval(const PackedMatrix& lo, const PackedMatrix& hi);

/// Upward closure {m' : m <= m'} and downward closure {m' : m' <= m}.
MatrixSet upward_closure(const PackedMatrix& m);
MatrixSet downward_closure(const PackedMatrix& m);

/// Elementary element: sum of F over the upward closure of m.
Element E_expand(const PackedMatrix& m);
/// Homogeneous element: sum of F over the downward closure of m.
Element H_expand(const PackedMatrix& m);

/// Multiplicative rules: E.E concentrates on the block-diagonal key and
/// H.H on the block-antidiagonal key.
PackedMatrix product_E(const PackedMatrix& m1, const PackedMatrix& m2);
PackedMatrix product_H(const PackedMatrix& m1, const PackedMatrix& m2);

/// Maximal factorization into connected blocks along the diagonal.
std::vector<PackedMatrix> connected_factors(const PackedMatrix& m);

/// W basis of the graded dual: the row-shuffle product of the duals of the
/// connected factors of m, expanded over F*.
Element W_expand(const PackedMatrix& m);

/// Change-of-basis matrix of the V basis (adjoint of W) over F on one
/// stratum: rows follow `component` sorted so that transposes ascend in the
/// canonical order; entry (i, j) is the F-coefficient of key j in V of key i.
/// Also returns that sorted key order through `ordered_out`.
std::vector<std::vector<Rational>> V_basis(std::vector<PackedMatrix> component,
                                           std::vector<PackedMatrix>* ordered_out = nullptr);

/// V element of one key, expanded over F within its stratum.
Element V_expand(const PackedMatrix& m);

}  // namespace pmh

#endif
