#ifndef PMH_LINCOMB_HPP
#define PMH_LINCOMB_HPP

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "numeric.hpp"

namespace pmh {

enum class Basis { F, FDual, E, H, W, V, P };

const char* basis_name(Basis b);

namespace detail {
struct CanonicalKeyLess {
  bool operator()(const PackedMatrix& a, const PackedMatrix& b) const {
    return canonical_less(a, b);
  }
  bool operator()(const std::pair<PackedMatrix, PackedMatrix>& a,
                  const std::pair<PackedMatrix, PackedMatrix>& b) const {
    if (canonical_less(a.first, b.first)) return true;
    if (canonical_less(b.first, a.first)) return false;
    return canonical_less(a.second, b.second);
  }
  bool operator()(const std::array<PackedMatrix, 3>& a,
                  const std::array<PackedMatrix, 3>& b) const {
    for (int i = 0; i < 3; ++i) {
      if (canonical_less(a[i], b[i])) return true;
      if (canonical_less(b[i], a[i])) return false;
    }
    return false;
  }
};
}  // namespace detail

/// Finite formal linear combination of basis keys with exact rational
/// coefficients.  Zero coefficients are never stored; terms are kept in the
/// canonical key order, so iteration and serialization are deterministic.
template <typename Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational, detail::CanonicalKeyLess>;

  LinearCombination() = default;
  explicit LinearCombination(Basis basis) : basis_(basis) {}

  Basis basis() const { return basis_; }
  // Ref-qualified so that iterating the terms of a temporary keeps them
  // alive for the whole range-for.
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis tag mismatch in add");
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }

  LinearCombination& operator-=(const LinearCombination& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis tag mismatch in sub");
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }

  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    a += b;
    return a;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    a -= b;
    return a;
  }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) {
    a *= s;
    return a;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  Basis basis_ = Basis::F;
  Terms terms_;
};

using Element = LinearCombination<PackedMatrix>;
using Tensor = LinearCombination<std::pair<PackedMatrix, PackedMatrix>>;
using Tensor3 = LinearCombination<std::array<PackedMatrix, 3>>;

Element unit_element(Basis basis, const PackedMatrix& key);

/// Rank-2 tensor of two rank-1 combinations (pairwise key products).
Tensor tensor(const Element& a, const Element& b);

/// JSON-lines serialization: one object per element,
/// {"basis": tag, "terms":[{"matrix": text, "coeff": "p/q"}, ...]} with terms
/// in canonical order.  Tensor keys serialize as "left"/"right" fields.
std::string serialize(const Element& e);
std::string serialize(const Tensor& t);

// ---------------------------------------------------------------------------
// Unitriangular basis inversion

/// Exact inverse of a unitriangular change of basis on one graded component.
///
/// `expand` maps a basis key to its expansion; `component` lists the keys of
/// the component; `before` orders them so that every expansion of a key is
/// supported on that key (coefficient 1) and keys strictly earlier in the
/// order.  Throws std::invalid_argument when the input is not unitriangular.
///
/// Returns the inverse matrix in the order induced by `before` on
/// `component`: entry (i, j) is the coefficient of expansion j in the
/// inverted expression of key i.
std::vector<std::vector<Rational>> triangular_invert(
    const std::function<Element(const PackedMatrix&)>& expand,
    std::vector<PackedMatrix> component,
    const std::function<bool(const PackedMatrix&, const PackedMatrix&)>& before);

}  // namespace pmh

#endif
