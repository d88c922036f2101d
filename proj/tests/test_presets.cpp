#include <cmath>

#include "doctest.h"
#include "wittlab/presets.hpp"

using namespace wittlab;

TEST_CASE("free preset") {
  CHECK(presets::free(2) == CharPolynomial(std::vector<mpz_class>{1, -2}));
  const auto t = witt_dims(presets::free(2), 5);
  CHECK(t.dims == std::vector<mpz_class>{2, 1, 2, 3, 6});
  CHECK(witt_dims(presets::free(1), 4).dims == std::vector<mpz_class>{1, 0, 0, 0});
  for (long r = 1; r <= 5; ++r)
    CHECK(entropy(presets::free(r)).value == doctest::Approx(double(r)).epsilon(1e-9));
  CHECK_THROWS_AS(presets::free(0), std::invalid_argument);
}

TEST_CASE("free_sum preset") {
  CHECK(presets::free_sum(1, 1) == CharPolynomial(std::vector<mpz_class>{1, -2, 1}));
  CHECK(witt_dims(presets::free_sum(1, 1), 4).dims == std::vector<mpz_class>{2, 0, 0, 0});
  CHECK(presets::free_sum(2, 3) == CharPolynomial(std::vector<mpz_class>{1, -5, 6}));
  const auto p = power_sums(presets::free_sum(2, 3), 6);
  for (long m = 1; m <= 6; ++m)
    CHECK(p[static_cast<size_t>(m - 1)] ==
          pow_ui(mpz_class(2), static_cast<unsigned long>(m)) +
              pow_ui(mpz_class(3), static_cast<unsigned long>(m)));
  CHECK(entropy(presets::free_sum(2, 3)).value == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("one_relator preset") {
  CHECK(presets::one_relator(2) == CharPolynomial(std::vector<mpz_class>{1, -2, 1}));
  CHECK(witt_dims(presets::one_relator(2), 4).dims == std::vector<mpz_class>{2, 0, 0, 0});
  CHECK(entropy(presets::one_relator(3)).value ==
        doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
  for (long m = 2; m <= 7; ++m)
    CHECK(euler_poincare(presets::one_relator(m)) == 2 - m);
  CHECK_THROWS_AS(presets::one_relator(1), std::invalid_argument);
}

TEST_CASE("labute dims") {
  CHECK(presets::labute_dims(3, 3) == std::vector<mpz_class>{3, 2, 5});
  CHECK(presets::labute_dims(2, 4) == std::vector<mpz_class>{2, 0, 0, 0});
  SUBCASE("dual-path identity with witt_dims") {
    for (long m = 2; m <= 6; ++m) {
      const auto direct = presets::labute_dims(m, 20);
      const auto viaWitt = witt_dims(presets::one_relator(m), 20);
      REQUIRE(viaWitt.realizable());
      REQUIRE(direct == viaWitt.dims);
    }
  }
  SUBCASE("closed-form power sums match Newton's identities") {
    for (long m = 2; m <= 6; ++m)
      REQUIRE(presets::one_relator_power_sums(m, 20) ==
              power_sums(presets::one_relator(m), 20));
  }
}

TEST_CASE("filiform series") {
  // Pentagonal-number oracle: (1-y) * euler(y) where euler has coefficients
  // +-1 exactly at the generalized pentagonal numbers.
  const int N = 30;
  const auto f = presets::filiform_series(N);
  std::vector<long> euler(N + 1, 0);
  for (long j = -20; j <= 20; ++j) {
    const long idx = j * (3 * j - 1) / 2;
    if (idx >= 0 && idx <= N) euler[static_cast<size_t>(idx)] = (j % 2 == 0) ? 1 : -1;
  }
  for (int i = 0; i <= N; ++i) {
    const long expect = euler[static_cast<size_t>(i)] - (i >= 1 ? euler[static_cast<size_t>(i - 1)] : 0);
    REQUIRE(f[i] == expect);
  }
  SUBCASE("truncation at 4 has a vanishing y^4 coefficient") {
    const auto s = presets::filiform_series(4);
    CHECK(s.coeffs() == std::vector<mpq_class>{1, -2, 0, 1, 0});
  }
  SUBCASE("inverse is the PBW series of dims (2,1,1,1,...)") {
    std::vector<mpz_class> dims(static_cast<size_t>(N), 1);
    dims[0] = 2;
    CHECK(series_inverse(f) == pbw_series(dims, N));
  }
}

TEST_CASE("braid arrangement") {
  CHECK(presets::braid_arrangement(2) == CharPolynomial(std::vector<mpz_class>{1, -3, 2}));
  CHECK(presets::braid_arrangement(3) ==
        CharPolynomial(std::vector<mpz_class>{1, -6, 11, -6}));
  for (long n = 1; n <= 6; ++n) {
    CHECK(euler_poincare(presets::braid_arrangement(n)) == 0);
    CHECK(entropy(presets::braid_arrangement(n)).value ==
          doctest::Approx(double(n)).epsilon(1e-7));
  }
}

TEST_CASE("spiga preset") {
  const Graph g = presets::spiga();
  const auto chi = clique_polynomial(g);
  CHECK(chi == CharPolynomial(std::vector<mpz_class>{1, -11, 33, -33, 11}));
  CHECK(chi.degree() == 4);  // clique number
  const auto e = entropy(chi);
  CHECK(e.value == doctest::Approx(6.85317).epsilon(2e-5));
}
