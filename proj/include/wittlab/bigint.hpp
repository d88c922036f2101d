#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittlab {

/// Exceeding a configured resource bound (graph size, iteration budget on
/// exact paths). Distinct from malformed input so the CLI can map it to its
/// own exit code.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline mpz_class binomial(const mpz_class& n, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

inline bool fits_int64(const mpz_class& z) {
  static const mpz_class lo(INT64_MIN), hi(INT64_MAX);
  return z >= lo && z <= hi;
}

/// Strict decimal integer parse ("-12", "0"); rejects everything else.
std::optional<mpz_class> parse_bigint(const std::string& s);

/// Parses "p" or "p/q" as an exact rational; rejects q = 0.
std::optional<mpq_class> parse_bigrat(const std::string& s);

/// Comma-separated integer list ("1,-11,33"); whitespace around commas ok.
std::optional<std::vector<mpz_class>> parse_bigint_list(const std::string& s);

}  // namespace wittlab
