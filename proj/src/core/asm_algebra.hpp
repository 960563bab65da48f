#ifndef PMH_ASM_ALGEBRA_HPP
#define PMH_ASM_ALGEBRA_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopf.hpp"
#include "matrix.hpp"
#include "qpoly.hpp"

namespace pmh {

/// Alternating sign matrix: entries in {0, +1, -1}; in every row and every
/// column the nonzero entries alternate in sign and both start and end
/// with +1.
class Asm {
 public:
  Asm(int size, std::vector<std::int8_t> cells);  // validates; throws

  int size() const { return size_; }
  std::int8_t at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * size_ + c]; }
  const std::vector<std::int8_t>& cells() const { return cells_; }

  /// 0/1 indicator of the nonzero entries, as a 1-packed matrix.
  PackedMatrix support() const;

  Asm transpose() const;
  Asm reverse_rows() const;
  Asm reverse_columns() const;

 private:
  int size_;
  std::vector<std::int8_t> cells_;
};

bool operator==(const Asm& a, const Asm& b);

/// Text form: rows of space-separated entries from {0, +, -}; "empty" for
/// size 0.
std::string format_asm(const Asm& a);

/// Signs the nonzero cells of a 1-packed matrix alternately along each row
/// starting with +, then accepts iff the column conditions hold; a packed
/// matrix supports at most one ASM.
std::optional<Asm> asm_from_packed(const PackedMatrix& m);

bool is_asm_support(const PackedMatrix& m);

/// All ASMs of one size, in row-major lexicographic order with entries
/// ordered -1 < 0 < +1.
std::vector<Asm> enumerate_asm(int n);

// ---------------------------------------------------------------------------
// Six-vertex statistics

enum class Stat { Ne, Sw, Se, Nw, Oi, Io };
const char* stat_name(Stat s);
Stat stat_from_name(const std::string& name);

struct VertexStats {
  long ne = 0, sw = 0, se = 0, nw = 0, oi = 0, io = 0;
  long get(Stat s) const;
};

/// Tallies the vertex type of every cell of the six-vertex configuration in
/// bijection with the ASM.  Edge orientations come from the 0/1 partial sums
/// of the entries (domain-wall boundary); a zero cell with column partial
/// sum v and row partial sum r is ne, sw, se, nw for (v,r) = (0,0), (1,1),
/// (1,0), (0,1); entries +1 and -1 are oi and io.
VertexStats six_vertex_stats(const Asm& a);

/// Number of distinct tuples of the selected statistics over ASMs of size n.
long quotient_dim(const std::set<Stat>& stats, int n);

// ---------------------------------------------------------------------------
// Algebraic checks

/// Products and coproducts of ASM-supported basis elements stay
/// ASM-supported (pairs with n1 + n2 within the budget), and transposition
/// preserves ASM supports.
VerifyReport asm_closure_check(int size_budget);

/// The statistic morphism identities on one pair, for the column-shuffle
/// product (dual = false) or the row-shuffle product (dual = true):
///   - io/oi: every product term carries stat(d1) + stat(d2), with
///     C(n, n1) terms in total;
///   - ne/sw/se/nw: sum of q^stat over the terms equals
///     q^(stat(d1) + stat(d2)) times the q-multinomial [n; n1, n2]_q.
bool morphism_identity_check(Stat stat, const Asm& d1, const Asm& d2, bool dual = false);

/// Runs morphism_identity_check for every statistic, both shuffle sides,
/// over all ASM pairs with n1 + n2 within the budget.
VerifyReport asm_morphism_check(int size_budget);

}  // namespace pmh

#endif
