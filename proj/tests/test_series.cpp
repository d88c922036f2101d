#include <random>

#include "doctest.h"
#include "wittlab/series.hpp"

using namespace wittlab;

namespace {

TruncatedSeries from_ints(std::vector<long> v) {
  std::vector<mpq_class> c(v.begin(), v.end());
  const int order = static_cast<int>(c.size()) - 1;
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries random_unit_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<long> coeff(-6, 6);
  std::vector<mpq_class> c(static_cast<size_t>(order) + 1);
  c[0] = 1;
  for (int i = 1; i <= order; ++i) c[static_cast<size_t>(i)] = coeff(rng);
  return TruncatedSeries(std::move(c), order);
}

}  // namespace

TEST_CASE("series_mul basics") {
  CHECK(series_mul(from_ints({1, 1, 0}), from_ints({1, -1, 0})) == from_ints({1, 0, -1}));
  const auto s = from_ints({1, 5, -3, 7});
  CHECK(series_mul(TruncatedSeries::one(3), s) == s);
  const auto geo = from_ints({1, 2, 4, 8, 16});
  CHECK(series_mul(geo, from_ints({1, -2, 0, 0, 0})) == TruncatedSeries::one(4));
  CHECK_THROWS_AS(series_mul(from_ints({1, 1}), from_ints({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("series_inverse basics") {
  CHECK(series_inverse(from_ints({1, -2, 0, 0, 0})) == from_ints({1, 2, 4, 8, 16}));
  CHECK(series_inverse(TruncatedSeries::one(3)) == TruncatedSeries::one(3));
  // Spiga polynomial truncated at 3; value verified against the PBW product
  // with dims (11, 22, 110): 286 + 242 + 110 = 638.
  CHECK(series_inverse(from_ints({1, -11, 33, -33})) == from_ints({1, 11, 88, 638}));
  CHECK_THROWS_AS(series_inverse(from_ints({2, 1})), std::invalid_argument);
}

TEST_CASE("inverse round-trips under multiplication") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_unit_series(rng, 24);
    CHECK(series_mul(a, series_inverse(a)) == TruncatedSeries::one(24));
  }
}

TEST_CASE("parallel multiply matches the serial reference") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_unit_series(rng, 80);
    const auto b = random_unit_series(rng, 80);
    REQUIRE(series_mul(a, b) == series_mul_serial(a, b));
  }
}

TEST_CASE("pbw_series examples") {
  CHECK(pbw_series({2, 1}, 4) == from_ints({1, 2, 4, 6, 9}));
  CHECK(pbw_series({1}, 3) == from_ints({1, 1, 1, 1}));
  SUBCASE("filiform dims match the inverse of (1-y) * euler product") {
    const int N = 5;
    std::vector<mpz_class> dims{2, 1, 1, 1, 1};
    const auto h = pbw_series(dims, N);
    // (1-y) * prod_k (1-y^k), truncated
    std::vector<mpq_class> c(N + 1, 0);
    c[0] = 1;
    auto times = [&](int k) {
      for (int i = N; i >= k; --i) c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - k)];
    };
    times(1);
    for (int k = 1; k <= N; ++k) times(k);
    CHECK(series_inverse(h) == TruncatedSeries(std::move(c), N));
  }
  CHECK_THROWS_AS(pbw_series({mpz_class(-1)}, 3), std::invalid_argument);
}

TEST_CASE("series_log examples") {
  CHECK(series_log(from_ints({1, -2, 0, 0})) ==
        TruncatedSeries({0, -2, -2, mpq_class(-8, 3)}, 3));
  CHECK(series_log(TruncatedSeries::one(3)) == TruncatedSeries::zero(3));
  CHECK(series_log(pbw_series({2, 1}, 2)) == from_ints({0, 2, 2}));
  CHECK_THROWS_AS(series_log(from_ints({0, 1})), std::invalid_argument);
}

TEST_CASE("pbw/log consistency: m [y^m] log h = sum of k l_k over k | m") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> dim(0, 4);
  const int N = 16;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<mpz_class> dims(6);
    for (auto& d : dims) d = dim(rng);
    const auto lg = series_log(pbw_series(dims, N));
    for (int m = 1; m <= N; ++m) {
      mpz_class expect = 0;
      for (int k = 1; k <= static_cast<int>(dims.size()); ++k)
        if (m % k == 0) expect += k * dims[static_cast<size_t>(k - 1)];
      REQUIRE(mpq_class(m) * lg[m] == expect);
    }
  }
}

TEST_CASE("integrality flag") {
  CHECK(pbw_series({3, 2, 1}, 10).is_integral());
  CHECK(!series_log(from_ints({1, -2, 0, 0})).is_integral());
}
