#pragma once

#include <complex>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "wittlab/bigint.hpp"
#include "wittlab/numtheory.hpp"
#include "wittlab/roots.hpp"
#include "wittlab/series.hpp"

namespace wittlab {

/// Integer polynomial chi(y) = 1 + a_1 y + ... + a_n y^n with a_0 = 1 and
/// a_n != 0 (n the true degree; trailing zeros are trimmed on construction).
/// Encodes eigenvalues lambda_i through chi = prod (1 - lambda_i y).
class CharPolynomial {
 public:
  explicit CharPolynomial(std::vector<mpz_class> coeffs);
  explicit CharPolynomial(const IntPolynomial& p) : CharPolynomial(p.coeffs()) {}

  long degree() const { return static_cast<long>(a_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return a_; }
  mpz_class coeff(long i) const;

  /// (-1)^n a_n = product of the eigenvalues.
  mpz_class conductor() const;

  IntPolynomial as_polynomial() const { return IntPolynomial(a_); }
  /// y^n chi(1/y): the monic polynomial whose roots are the eigenvalues.
  IntPolynomial reciprocal() const { return as_polynomial().reversed(); }

  bool operator==(const CharPolynomial& o) const = default;

 private:
  std::vector<mpz_class> a_;
};

CharPolynomial operator*(const CharPolynomial& a, const CharPolynomial& b);

// ---------------------------------------------------------------------------
// Exact invariants
// ---------------------------------------------------------------------------

/// Power sums p_m = sum_i lambda_i^m for m = 1..M via Newton's identities on
/// the coefficients (a_i = (-1)^i e_i). Exact; no root extraction.
std::vector<mpz_class> power_sums(const CharPolynomial& chi, long M);

/// chi(1); vanishes exactly when 1 is an eigenvalue.
mpz_class euler_poincare(const CharPolynomial& chi);

/// True iff coefficients strictly alternate in sign with no interior zeros,
/// the sign pattern forced on finite-cohomological-dimension Koszul inputs.
/// A report-only screen.
bool descartes_check(const CharPolynomial& chi);

/// Dimension table from Moebius inversion of the power sums:
/// l_k = (1/k) sum_{j|k} mu(k/j) p_j. A non-integral or negative value stops
/// the table; that k and the offending exact value are recorded (the input is
/// then not the characteristic polynomial of any graded Lie algebra of the
/// kind modeled here; a verdict, not an error).
struct DimsTable {
  std::vector<mpz_class> dims;  // dims[i] = l_{i+1}, valid prefix only
  std::optional<long> failed_k;
  std::optional<mpq_class> failed_value;
  bool realizable() const { return !failed_k.has_value(); }
};

DimsTable witt_dims(const CharPolynomial& chi, long K);

/// l_k for a single k without tabulating 1..k. Used for vanishing-bound
/// checks where k may be far beyond any sensible table.
mpq_class witt_dim_at(const CharPolynomial& chi, unsigned long long k);

// ---------------------------------------------------------------------------
// Cyclotomic factorization
// ---------------------------------------------------------------------------

/// chi = remainder * prod_m Phi*_m(y)^{mult[m]} where Phi*_m is the m-th
/// cyclotomic polynomial in reversed normalization (constant term 1; equal to
/// Phi_m for m >= 2, and 1 - y for m = 1). remainder == 1 exactly when every
/// eigenvalue is a root of unity.
struct CycloFactorization {
  std::map<long, long> multiplicities;
  CharPolynomial remainder;
  bool complete() const { return remainder.degree() == 0; }
};

CycloFactorization cyclotomic_factorize(const CharPolynomial& chi);

/// Reversed-normalized cyclotomic factor Phi*_m.
IntPolynomial cyclotomic_reversed(long m);

/// Inverts mult[m] = sum_j dim(L_{mj}) to per-degree dimensions:
/// dim(L_k) = sum_j mu(j) mult[kj]. Negative outputs mark the multiplicity
/// data as inconsistent (no graded Lie algebra produces them).
struct DimsFromMultiplicities {
  std::map<long, long> dims;  // zero entries omitted
  bool consistent = true;
};

DimsFromMultiplicities dims_from_multiplicities(const std::map<long, long>& mult);

// ---------------------------------------------------------------------------
// Numeric spectrum
// ---------------------------------------------------------------------------

/// Roots of the reciprocal polynomial (the eigenvalues), numerically.
/// Conjugate symmetry is enforced and the list is canonically ordered
/// (Re descending, then Im ascending). Never used for exact decisions.
RootSolveResult eigenvalues_numeric(const CharPolynomial& chi, double tol,
                                    bool parallel = true);

enum class EntropyExactness { ExactOne, Numeric };

struct EntropyResult {
  double value = 0.0;
  EntropyExactness exactness = EntropyExactness::Numeric;
  double residual = 0.0;
  /// Whether the modulus maximum is attained (within tolerance) by a positive
  /// real eigenvalue, as it must be for genuine Hilbert-series data.
  bool max_is_positive_real = false;
};

/// max_i |lambda_i|. Exactly 1 (flag ExactOne) when the cyclotomic
/// factorization is complete; otherwise numeric with the reported residual.
/// Requires degree >= 1.
EntropyResult entropy(const CharPolynomial& chi, double tol = 1e-10);

struct SpectralReport {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<double> residuals;
  bool converged = true;
  EntropyResult entropy;
  mpz_class conductor;
  mpz_class euler_poincare;
  bool all_roots_of_unity = false;  // exact, from the factorization
};

SpectralReport spectral_report(const CharPolynomial& chi, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Finiteness verdict
// ---------------------------------------------------------------------------

struct FiniteDimensional {
  std::map<long, long> dims_by_degree;
  mpz_class total_dim;
  /// sum_k k*dim(L_k), which must equal deg(chi).
  mpz_class degree_sum;
  bool degree_check = false;
  /// Certified vanishing bound k* = 1 + prod of distinct cyclotomic orders.
  mpz_class vanishing_bound;
  /// l_k = 0 verified at k* and on [k*, K_max]; false only when k* was too
  /// large to evaluate (> 10^12).
  bool vanishing_verified = false;
  bool vanishing_checked = true;
};

struct InfiniteDimensional {
  double entropy = 0.0;
  double residual = 0.0;
  std::complex<double> witness_root;  // largest root of the non-cyclotomic part
  /// True when |conductor(remainder)| >= 2 certifies entropy > 1 exactly;
  /// otherwise the claim rests on the numeric witness (Kronecker case).
  bool entropy_exceeds_one_exact = false;
};

struct NotRealizable {
  long first_bad_k = 0;
  mpq_class value;
};

using Verdict = std::variant<FiniteDimensional, InfiniteDimensional, NotRealizable>;

/// Full dimension/power-sum record plus the trichotomy verdict.
struct WittReport {
  DimsTable dims;
  std::vector<mpz_class> power_sums;
  CycloFactorization factorization;
  Verdict verdict;
};

/// Decides, from chi alone: finite-dimensional (complete cyclotomic
/// factorization, with certified vanishing bound), infinite-dimensional
/// (entropy > 1 witness from the non-cyclotomic remainder), or not the
/// characteristic polynomial of any graded Lie algebra (dims table breaks).
/// All branches of the decision are exact; numerics only annotate.
WittReport finiteness_verdict(const CharPolynomial& chi, long K_max = 64);

// ---------------------------------------------------------------------------
// Hilbert-series route
// ---------------------------------------------------------------------------

struct CharFromDims {
  std::optional<CharPolynomial> poly;
  // On rejection: first index beyond assumed_degree with nonzero coefficient.
  long excess_index = -1;
  mpq_class excess_value;
  bool accepted() const { return poly.has_value(); }
};

/// Inverts the PBW product of a dimension vector and accepts iff the result
/// is a polynomial of degree <= assumed_degree at truncation order N
/// (requires N >= max(assumed_degree, dims length); slack of at least the
/// degree is recommended).
CharFromDims char_from_dims(const std::vector<mpz_class>& dims, long assumed_degree,
                            int order);

}  // namespace wittlab
