#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wittlab/bigint.hpp"

namespace wittlab {

// ---------------------------------------------------------------------------
// Elementary arithmetic functions. Inputs are desk scale; factorization is
// plain trial division.
// ---------------------------------------------------------------------------

/// Prime factorization n = prod p_i^{e_i} as (p_i, e_i) pairs, p ascending.
std::vector<std::pair<long, int>> factorize(long n);

/// All positive divisors of n, ascending.
std::vector<long> divisors(long n);

/// Moebius function. n >= 1.
int moebius(long n);

/// Euler totient. n >= 1.
long euler_phi(long n);

// ---------------------------------------------------------------------------
// Integer polynomials
// ---------------------------------------------------------------------------

/// Dense integer polynomial, coefficients indexed by degree. The zero
/// polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }
  /// y^n - 1
  static IntPolynomial power_minus_one(unsigned long n);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return is_zero() ? -1 : static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(long k) const;

  /// Coefficients in reverse order: y^deg * p(1/y).
  IntPolynomial reversed() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

  bool operator==(const IntPolynomial& o) const = default;

 private:
  std::vector<mpz_class> coeffs_;
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

/// Exact division in Z[y]. Returns the quotient iff den divides num with an
/// integer quotient and zero remainder, nullopt otherwise. den must have
/// constant term +/-1 (all divisors used here do).
std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& num,
                                              const IntPolynomial& den);

/// n-th cyclotomic polynomial, degree phi(n). Memoized; safe to call from
/// multiple threads.
IntPolynomial cyclotomic(long n);

// ---------------------------------------------------------------------------
// Necklace machinery
// ---------------------------------------------------------------------------

/// Necklace polynomial value M_k(x) = (1/k) sum_{j|k} mu(k/j) x^j, exact.
mpq_class necklace_eval(long k, const mpq_class& x);

/// P_k(m) = sum of k-th powers of the primitive m-th roots of unity,
/// computed as sum_{d | m, d | k} d * mu(m/d).
mpz_class ramanujan_P(long k, long m);

/// C_k(m) = sum of M_k over the primitive m-th roots of unity, computed as
/// (1/k) sum_{j|k} mu(k/j) P_j(m). Exact rational; callers decide how to
/// treat a non-integral value (none observed; never rounded here).
mpq_class necklace_root_sum_C(long k, long m);

}  // namespace wittlab
