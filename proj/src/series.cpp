#include "wittlab/series.hpp"

#include <stdexcept>

namespace wittlab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series: order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}

void require_unit_constant(const TruncatedSeries& a, const char* op) {
  if (a[0] != 1)
    throw std::invalid_argument(std::string(op) + ": constant coefficient must be 1");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coeffs, int order)
    : coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  if (coeffs_.size() != static_cast<size_t>(order) + 1)
    throw std::invalid_argument("TruncatedSeries: coefficient count must be order+1");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries(std::vector<mpq_class>(static_cast<size_t>(order) + 1, 0), order);
}

TruncatedSeries TruncatedSeries::one(int order) {
  auto s = zero(order);
  std::vector<mpq_class> c = s.coeffs_;
  c[0] = 1;
  return TruncatedSeries(std::move(c), order);
}

bool TruncatedSeries::is_integral() const {
  for (const auto& q : coeffs_)
    if (q.get_den() != 1) return false;
  return true;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw std::invalid_argument("truncated: order out of range");
  return TruncatedSeries(
      std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const int n = a.order();
  std::vector<mpq_class> c(static_cast<size_t>(n) + 1);
#pragma omp parallel for schedule(static)
  for (int k = 0; k <= n; ++k) {
    mpq_class s = 0;
    for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
    c[static_cast<size_t>(k)] = std::move(s);
  }
  return TruncatedSeries(std::move(c), n);
}

TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const int n = a.order();
  std::vector<mpq_class> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    mpq_class s = 0;
    for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
    c[static_cast<size_t>(k)] = std::move(s);
  }
  return TruncatedSeries(std::move(c), n);
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  require_unit_constant(a, "series_inverse");
  const int n = a.order();
  std::vector<mpq_class> b(static_cast<size_t>(n) + 1);
  b[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpq_class s = 0;
    for (int i = 1; i <= k; ++i) s += a[i] * b[static_cast<size_t>(k - i)];
    b[static_cast<size_t>(k)] = -s;
  }
  return TruncatedSeries(std::move(b), n);
}

TruncatedSeries pbw_series(const std::vector<mpz_class>& dims, int order) {
  if (order < 0) throw std::invalid_argument("pbw_series: negative order");
  for (const auto& d : dims)
    if (d < 0) throw std::invalid_argument("pbw_series: negative dimension");

  std::vector<mpq_class> c(static_cast<size_t>(order) + 1, 0);
  c[0] = 1;
  // Multiply by (1-y^k)^{-l} one k at a time. The coefficient of y^{kj} in
  // that factor is binom(l+j-1, j), so each step is a strided convolution.
  for (int k = 1; k <= order && k <= static_cast<int>(dims.size()); ++k) {
    const mpz_class& l = dims[static_cast<size_t>(k - 1)];
    if (l == 0) continue;
    std::vector<mpq_class> next(static_cast<size_t>(order) + 1, 0);
    for (int j = 0; k * j <= order; ++j) {
      const mpz_class w = binomial(l + j - 1, static_cast<unsigned long>(j));
      for (int i = k * j; i <= order; ++i)
        next[static_cast<size_t>(i)] += w * c[static_cast<size_t>(i - k * j)];
    }
    c = std::move(next);
  }
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  require_unit_constant(a, "series_log");
  const int n = a.order();
  // b' = a'/a with a0 = 1:
  //   m b_m = m a_m - sum_{i=1}^{m-1} (m-i) a_i b_{m-i}
  std::vector<mpq_class> b(static_cast<size_t>(n) + 1, 0);
  for (int m = 1; m <= n; ++m) {
    mpq_class s = mpq_class(m) * a[m];
    for (int i = 1; i < m; ++i) s -= mpq_class(m - i) * a[i] * b[static_cast<size_t>(m - i)];
    b[static_cast<size_t>(m)] = s / m;
  }
  return TruncatedSeries(std::move(b), n);
}

}  // namespace wittlab
