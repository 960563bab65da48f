#include "series.hpp"

#include <algorithm>
#include <stdexcept>

#include "matrix.hpp"

namespace pmh {

DimSeries::DimSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

namespace {
int common_order(const DimSeries& a, const DimSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

DimSeries operator+(const DimSeries& a, const DimSeries& b) {
  int n = common_order(a, b);
  std::vector<BigInt> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = a.at(i) + b.at(i);
  return DimSeries(std::move(c));
}

DimSeries operator-(const DimSeries& a, const DimSeries& b) {
  int n = common_order(a, b);
  std::vector<BigInt> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = a.at(i) - b.at(i);
  return DimSeries(std::move(c));
}

DimSeries operator*(const DimSeries& a, const DimSeries& b) {
  int n = common_order(a, b);
  std::vector<BigInt> c(n + 1, BigInt(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[i + j] += a.at(i) * b.at(j);
  return DimSeries(std::move(c));
}

DimSeries DimSeries::reciprocal() const {
  if (coeffs_[0] != 1)
    throw std::invalid_argument("series reciprocal requires constant term 1");
  int n = order();
  std::vector<BigInt> inv(n + 1, BigInt(0));
  inv[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int i = 1; i <= m; ++i) s += coeffs_[i] * inv[m - i];
    inv[m] = -s;
  }
  return DimSeries(std::move(inv));
}

DimSeries hilbert_series(int k, Grading grading, int truncation) {
  std::vector<BigInt> c(truncation + 1);
  for (int d = 0; d <= truncation; ++d)
    c[d] = grading == Grading::Size ? count_packed_by_size(k, d)
                                    : count_packed_by_weight(k, d);
  return DimSeries(std::move(c));
}

DimSeries series_generators(const DimSeries& h) {
  if (h.at(0) != 1) throw std::invalid_argument("Hilbert series must start with 1");
  std::vector<BigInt> o(h.order() + 1, BigInt(0));
  o[0] = 1;
  return DimSeries(std::move(o)) - h.reciprocal();
}

DimSeries series_totally_primitive(const DimSeries& h) {
  if (h.at(0) != 1) throw std::invalid_argument("Hilbert series must start with 1");
  std::vector<BigInt> o(h.order() + 1, BigInt(0));
  o[0] = 1;
  DimSeries one(std::move(o));
  DimSeries hinv = h.reciprocal();
  return (h - one) * hinv * hinv;
}

}  // namespace pmh
