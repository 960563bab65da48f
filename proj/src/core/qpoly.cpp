#include "qpoly.hpp"

#include <stdexcept>

namespace pmh {

QPoly::QPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int degree, BigInt coeff) {
  if (coeff == 0) return QPoly();
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = std::move(coeff);
  return QPoly(std::move(c));
}

BigInt QPoly::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i];
  return acc;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPoly(std::move(c));
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<BigInt> rem = coeffs_;
  int dd = divisor.degree();
  const BigInt& lead = divisor.coeffs_.back();
  if (static_cast<int>(rem.size()) - 1 < dd) {
    if (is_zero()) return QPoly();
    throw std::domain_error("non-exact polynomial division");
  }
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) throw std::domain_error("non-exact polynomial division");
    BigInt f = rem[i] / lead;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("non-exact polynomial division");
  return QPoly(std::move(quot));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) out += "-";
    BigInt mag = abs(coeffs_[i]);
    bool need_coeff = mag != 1 || i == 0;
    if (need_coeff) out += mag.str();
    if (i >= 1) {
      if (need_coeff) out += "*";
      out += "q";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int of negative argument");
  return QPoly(std::vector<BigInt>(n, BigInt(1)));
}

QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial of negative argument");
  QPoly acc(BigInt(1));
  for (int i = 1; i <= n; ++i) acc = acc * q_int(i);
  return acc;
}

QPoly q_multinomial(int n, int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n != n1 + n2)
    throw std::invalid_argument("q_multinomial requires n = n1 + n2, all nonnegative");
  return q_factorial(n).divide_exact(q_factorial(n1) * q_factorial(n2));
}

}  // namespace pmh
