#include "wittlab/presets.hpp"

#include <stdexcept>

#include "wittlab/numtheory.hpp"

namespace wittlab::presets {

CharPolynomial free(long r) {
  if (r < 1) throw std::invalid_argument("free: r must be positive");
  return CharPolynomial({1, -r});
}

CharPolynomial free_sum(long r, long s) {
  if (r < 1 || s < 1) throw std::invalid_argument("free_sum: r, s must be positive");
  return CharPolynomial({1, -(r + s), mpz_class(r) * s});
}

CharPolynomial one_relator(long m) {
  if (m < 2) throw std::invalid_argument("one_relator: m must be at least 2");
  return CharPolynomial({1, -m, 1});
}

std::vector<mpz_class> one_relator_power_sums(long m, long K) {
  if (m < 2) throw std::invalid_argument("one_relator_power_sums: m must be at least 2");
  std::vector<mpz_class> p;
  p.reserve(static_cast<size_t>(K));
  for (long k = 1; k <= K; ++k) {
    // Individual terms need a rational k/(k-i) factor; the sum is integral.
    mpq_class s = 0;
    for (long i = 0; 2 * i <= k; ++i) {
      mpq_class term(k, k - i);
      term.canonicalize();
      term *= binomial(mpz_class(k - i), static_cast<unsigned long>(i));
      term *= pow_ui(mpz_class(m), static_cast<unsigned long>(k - 2 * i));
      s += (i % 2 == 0) ? term : mpq_class(-term);
    }
    if (!is_integral(s)) throw std::logic_error("one_relator_power_sums: non-integral sum");
    p.push_back(s.get_num());
  }
  return p;
}

std::vector<mpz_class> labute_dims(long m, long K) {
  if (K < 1) throw std::invalid_argument("labute_dims: K must be positive");
  const auto p = one_relator_power_sums(m, K);
  std::vector<mpz_class> dims;
  dims.reserve(static_cast<size_t>(K));
  for (long k = 1; k <= K; ++k) {
    mpz_class s = 0;
    for (long j : divisors(k)) s += mpz_class(moebius(k / j)) * p[static_cast<size_t>(j - 1)];
    if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(k)))
      throw std::logic_error("labute_dims: non-integral dimension");
    dims.push_back(s / k);
  }
  return dims;
}

TruncatedSeries filiform_series(int order) {
  if (order < 1) throw std::invalid_argument("filiform_series: order must be positive");
  std::vector<mpq_class> c(static_cast<size_t>(order) + 1, 0);
  c[0] = 1;
  // (1-y) and then each (1-y^k) factor in place; factors beyond the order
  // cannot contribute.
  auto times_one_minus = [&](int k) {
    for (int i = order; i >= k; --i) c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - k)];
  };
  times_one_minus(1);
  for (int k = 1; k <= order; ++k) times_one_minus(k);
  return TruncatedSeries(std::move(c), order);
}

CharPolynomial braid_arrangement(long n) {
  if (n < 1) throw std::invalid_argument("braid_arrangement: n must be positive");
  IntPolynomial chi = IntPolynomial::one();
  for (long i = 1; i <= n; ++i) chi = chi * IntPolynomial({1, -i});
  return CharPolynomial(chi);
}

Graph spiga() { return cayley_graph(11, {2, 3, 5, 6, 8, 9}); }

}  // namespace wittlab::presets
