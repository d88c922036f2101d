#pragma once

#include <vector>

#include "wittlab/bigint.hpp"

namespace wittlab {

/// Formal power series over Q truncated (inclusively) at a fixed order N.
/// Exactly N+1 coefficients; binary operations require equal orders. All
/// arithmetic is exact; no floating point anywhere in this module.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<mpq_class> coeffs, int order);

  static TruncatedSeries zero(int order);
  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  /// Same series re-truncated at a (usually smaller) order.
  TruncatedSeries truncated(int order) const;

  bool operator==(const TruncatedSeries& o) const = default;

 private:
  std::vector<mpq_class> coeffs_;
};

/// Truncated Cauchy product. Parallelizes across output coefficients; exact,
/// so results are identical to the serial reference for any thread count.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Serial reference for series_mul, kept for tests and the benchmark.
TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse up to the truncation order; requires a[0] = 1.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// prod_{k>=1} (1-y^k)^{-dims[k-1]} truncated at `order`: the Hilbert series
/// of the enveloping algebra of a graded Lie algebra with the given
/// homogeneous dimensions. Entries beyond the vector are treated as zero;
/// factors with k > order cannot contribute and are skipped.
TruncatedSeries pbw_series(const std::vector<mpz_class>& dims, int order);

/// Formal logarithm; requires a[0] = 1. Coefficients are rational in general.
TruncatedSeries series_log(const TruncatedSeries& a);

}  // namespace wittlab
