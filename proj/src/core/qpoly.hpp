#ifndef PMH_QPOLY_HPP
#define PMH_QPOLY_HPP

#include <string>
#include <vector>

#include "numeric.hpp"

namespace pmh {

/// Integer-coefficient polynomial in one variable q.  Coefficients are
/// arbitrary-precision; no trailing zero is stored, so the zero polynomial
/// has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(BigInt constant);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly monomial(int degree, BigInt coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int power) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt eval(const BigInt& q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
  friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division; throws std::domain_error when the remainder is nonzero
  /// (a non-exact division here always signals a bug in the caller).
  QPoly divide_exact(const QPoly& divisor) const;

  std::string str() const;  // e.g. "1 + q + 2*q^2"

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

QPoly q_int(int n);        // 1 + q + ... + q^(n-1)
QPoly q_factorial(int n);  // [1]_q [2]_q ... [n]_q
/// [n]_q! / ([n1]_q! [n2]_q!) with n = n1 + n2; always a polynomial.
QPoly q_multinomial(int n, int n1, int n2);

}  // namespace pmh

#endif
