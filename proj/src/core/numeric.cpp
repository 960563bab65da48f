#include "numeric.hpp"

#include <stdexcept>

namespace pmh {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt int_pow(const BigInt& base, long exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace pmh
