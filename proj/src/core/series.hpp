#ifndef PMH_SERIES_HPP
#define PMH_SERIES_HPP

#include <string>
#include <vector>

#include "numeric.hpp"

namespace pmh {

enum class Grading { Size, Weight };

/// Truncated integer power series a_0 + a_1 t + ... + a_N t^N used for
/// Hilbert-series bookkeeping.  All arithmetic is exact and truncates at the
/// common order.
class DimSeries {
 public:
  DimSeries() = default;
  explicit DimSeries(std::vector<BigInt> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& at(int i) const { return coeffs_[i]; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  friend DimSeries operator+(const DimSeries& a, const DimSeries& b);
  friend DimSeries operator-(const DimSeries& a, const DimSeries& b);
  friend DimSeries operator*(const DimSeries& a, const DimSeries& b);
  friend bool operator==(const DimSeries& a, const DimSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; requires a_0 = 1 (connected graded algebra),
  /// which keeps all coefficients integral.
  DimSeries reciprocal() const;

 private:
  std::vector<BigInt> coeffs_{BigInt(0)};
};

/// Hilbert series of the k-packed-matrix algebra under the chosen grading,
/// truncated at order N; coefficients come from the exact counting formulas.
DimSeries hilbert_series(int k, Grading grading, int truncation);

/// Dimensions of the free algebraic generators: G = 1 - 1/H.
DimSeries series_generators(const DimSeries& h);

/// Dimensions of the totally primitive elements: T = (H - 1) / H^2.
DimSeries series_totally_primitive(const DimSeries& h);

}  // namespace pmh

#endif
