#include "wittlab/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace wittlab {

namespace {

// Divisor j of k together with mu(k/j), for k beyond the small-factorization
// helpers. Trial division caps at 10^6, so k <= 10^12 always factors.
struct DivisorMu {
  unsigned long long j;
  int mu_cofactor;
};

std::vector<std::pair<unsigned long long, int>> factorize_ull(unsigned long long n) {
  std::vector<std::pair<unsigned long long, int>> f;
  for (unsigned long long p = 2; p * p <= n && p <= 1000000ULL; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) {
    if (n > 1000000000000ULL)
      throw SizeLimitError("factorization: cofactor too large for trial division");
    f.emplace_back(n, 1);
  }
  return f;
}

std::vector<DivisorMu> divisors_with_mu(unsigned long long k) {
  auto f = factorize_ull(k);
  std::vector<DivisorMu> out{{1, 1}};
  for (auto [p, e] : f) {
    const size_t base = out.size();
    unsigned long long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t t = 0; t < base; ++t) {
        // mu of the cofactor k/j: exponent of p in it is e - i.
        int mu = out[t].mu_cofactor;
        if (e - i >= 2)
          mu = 0;
        else if (e - i == 1)
          mu = -mu;
        out.push_back({out[t].j * pk, mu});
      }
    }
    // Entries that kept exponent 0 for p have cofactor exponent e.
    for (size_t t = 0; t < base; ++t) {
      if (e >= 2)
        out[t].mu_cofactor = 0;
      else
        out[t].mu_cofactor = -out[t].mu_cofactor;
    }
  }
  return out;
}

}  // namespace

CharPolynomial::CharPolynomial(std::vector<mpz_class> coeffs) : a_(std::move(coeffs)) {
  while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
  if (a_.empty() || a_[0] != 1)
    throw std::invalid_argument("CharPolynomial: constant term must be 1");
}

mpz_class CharPolynomial::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return a_[static_cast<size_t>(i)];
}

mpz_class CharPolynomial::conductor() const {
  return degree() % 2 == 0 ? a_.back() : mpz_class(-a_.back());
}

CharPolynomial operator*(const CharPolynomial& a, const CharPolynomial& b) {
  return CharPolynomial(a.as_polynomial() * b.as_polynomial());
}

std::vector<mpz_class> power_sums(const CharPolynomial& chi, long M) {
  if (M < 1) throw std::invalid_argument("power_sums: M must be positive");
  const long n = chi.degree();
  std::vector<mpz_class> p(static_cast<size_t>(M));
  for (long m = 1; m <= M; ++m) {
    mpz_class s = (m <= n) ? mpz_class(-m * chi.coeff(m)) : mpz_class(0);
    for (long i = 1; i < m && i <= n; ++i) s -= chi.coeff(i) * p[static_cast<size_t>(m - i - 1)];
    p[static_cast<size_t>(m - 1)] = std::move(s);
  }
  return p;
}

mpz_class euler_poincare(const CharPolynomial& chi) {
  mpz_class s = 0;
  for (const auto& a : chi.coeffs()) s += a;
  return s;
}

bool descartes_check(const CharPolynomial& chi) {
  for (long i = 0; i <= chi.degree(); ++i) {
    const mpz_class c = chi.coeff(i);
    if (c == 0) return false;
    if ((i % 2 == 0) != (c > 0)) return false;
  }
  return true;
}

DimsTable witt_dims(const CharPolynomial& chi, long K) {
  if (K < 1) throw std::invalid_argument("witt_dims: K must be positive");
  DimsTable t;
  const auto p = power_sums(chi, K);
  for (long k = 1; k <= K; ++k) {
    mpz_class s = 0;
    for (long j : divisors(k)) s += mpz_class(moebius(k / j)) * p[static_cast<size_t>(j - 1)];
    if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(k)) || s < 0) {
      t.failed_k = k;
      mpq_class v(s, mpz_class(k));
      v.canonicalize();
      t.failed_value = std::move(v);
      return t;
    }
    t.dims.push_back(s / k);
  }
  return t;
}

mpq_class witt_dim_at(const CharPolynomial& chi, unsigned long long k) {
  if (k == 0) throw std::invalid_argument("witt_dim_at: k must be positive");
  const auto divs = divisors_with_mu(k);
  mpz_class s = 0;

  const auto fact = cyclotomic_factorize(chi);
  if (fact.complete()) {
    // All eigenvalues are roots of unity: p_j is a finite sum of primitive
    // root-power sums, independent of the size of j.
    for (const auto& d : divs) {
      if (d.mu_cofactor == 0) continue;
      mpz_class pj = 0;
      for (const auto& [m, mult] : fact.multiplicities)
        pj += mult * ramanujan_P(static_cast<long>(d.j), m);
      s += d.mu_cofactor * pj;
    }
  } else {
    if (k > 2000000ULL)
      throw SizeLimitError("witt_dim_at: k too large for a power-sum scan on a non-cyclotomic input");
    const long n = chi.degree();
    std::vector<mpz_class> window(static_cast<size_t>(std::max<long>(n, 1)), 0);
    size_t next_div = 0;
    std::vector<mpz_class> p_at_div(divs.size());
    std::vector<unsigned long long> div_js(divs.size());
    for (size_t i = 0; i < divs.size(); ++i) div_js[i] = divs[i].j;
    std::sort(div_js.begin(), div_js.end());
    for (unsigned long long m = 1; m <= k; ++m) {
      mpz_class pm = (m <= static_cast<unsigned long long>(n))
                         ? mpz_class(mpz_class(-static_cast<long>(m)) * chi.coeff(static_cast<long>(m)))
                         : mpz_class(0);
      for (long i = 1; i <= n && static_cast<unsigned long long>(i) < m; ++i)
        pm -= chi.coeff(i) * window[static_cast<size_t>((m - i - 1) % window.size())];
      window[static_cast<size_t>((m - 1) % window.size())] = pm;
      if (next_div < div_js.size() && div_js[next_div] == m) p_at_div[next_div++] = pm;
    }
    for (const auto& d : divs) {
      if (d.mu_cofactor == 0) continue;
      const size_t idx = static_cast<size_t>(
          std::lower_bound(div_js.begin(), div_js.end(), d.j) - div_js.begin());
      s += d.mu_cofactor * p_at_div[idx];
    }
  }
  mpq_class v(s, mpz_class(static_cast<unsigned long>(k)));
  v.canonicalize();
  return v;
}

IntPolynomial cyclotomic_reversed(long m) { return cyclotomic(m).reversed(); }

CycloFactorization cyclotomic_factorize(const CharPolynomial& chi) {
  const long n = chi.degree();
  IntPolynomial rem = chi.as_polynomial();
  std::map<long, long> mult;
  const long bound = 2 * n * n + 1;
  for (long m = 1; m <= bound && rem.degree() > 0; ++m) {
    if (euler_phi(m) > rem.degree()) continue;
    const IntPolynomial phi_star = cyclotomic_reversed(m);
    while (true) {
      auto q = try_divide_exact(rem, phi_star);
      if (!q) break;
      rem = std::move(*q);
      ++mult[m];
      if (rem.degree() < phi_star.degree()) break;
    }
  }
  return CycloFactorization{std::move(mult), CharPolynomial(rem)};
}

DimsFromMultiplicities dims_from_multiplicities(const std::map<long, long>& mult) {
  DimsFromMultiplicities out;
  // dim(L_k) can be nonzero (or negative) at any divisor of a present order,
  // not only at the orders themselves.
  std::set<long> candidates;
  for (const auto& [m, mk] : mult) {
    (void)mk;
    for (long d : divisors(m)) candidates.insert(d);
  }
  for (long k : candidates) {
    long dim = 0;
    for (const auto& [kj, mkj] : mult) {
      if (kj % k) continue;
      dim += moebius(kj / k) * mkj;
    }
    if (dim < 0) out.consistent = false;
    if (dim != 0) out.dims[k] = dim;
  }
  return out;
}

RootSolveResult eigenvalues_numeric(const CharPolynomial& chi, double tol, bool parallel) {
  const auto rev = chi.reciprocal().coeffs();
  std::vector<std::complex<double>> c(rev.size());
  for (size_t i = 0; i < rev.size(); ++i) {
    const double d = rev[i].get_d();
    if (std::isinf(d)) throw SizeLimitError("eigenvalues_numeric: coefficient exceeds double range");
    c[i] = d;
  }
  RootSolveOptions opts;
  opts.tol = tol;
  opts.parallel = parallel;
  return aberth_roots(c, opts);
}

namespace {

EntropyResult entropy_from(const RootSolveResult& eig, bool complete_cyclotomic,
                           bool has_order_one) {
  EntropyResult e;
  if (complete_cyclotomic) {
    e.value = 1.0;
    e.exactness = EntropyExactness::ExactOne;
    e.residual = 0.0;
    e.max_is_positive_real = has_order_one;
    return e;
  }
  e.exactness = EntropyExactness::Numeric;
  double best = 0.0, best_res = 0.0;
  for (size_t i = 0; i < eig.roots.size(); ++i) {
    const double m = std::abs(eig.roots[i]);
    if (m > best) {
      best = m;
      best_res = eig.residuals[i];
    }
  }
  e.value = best;
  e.residual = best_res;
  double best_pos_real = 0.0;
  for (const auto& z : eig.roots)
    if (z.imag() == 0.0 && z.real() > 0.0) best_pos_real = std::max(best_pos_real, z.real());
  e.max_is_positive_real = std::abs(best_pos_real - best) <= 1e-6 * (1.0 + best);
  return e;
}

}  // namespace

EntropyResult entropy(const CharPolynomial& chi, double tol) {
  if (chi.degree() == 0) throw std::invalid_argument("entropy: degree-0 input");
  const auto fact = cyclotomic_factorize(chi);
  if (fact.complete()) return entropy_from({}, true, fact.multiplicities.count(1) > 0);
  return entropy_from(eigenvalues_numeric(chi, tol), false, false);
}

SpectralReport spectral_report(const CharPolynomial& chi, double tol) {
  SpectralReport r;
  r.conductor = chi.conductor();
  r.euler_poincare = euler_poincare(chi);
  const auto fact = cyclotomic_factorize(chi);
  r.all_roots_of_unity = fact.complete();
  if (chi.degree() > 0) {
    auto eig = eigenvalues_numeric(chi, tol);
    r.converged = eig.converged;
    r.entropy = entropy_from(eig, fact.complete(), fact.multiplicities.count(1) > 0);
    r.eigenvalues = std::move(eig.roots);
    r.residuals = std::move(eig.residuals);
  } else {
    r.entropy.value = 0.0;
    r.entropy.exactness = EntropyExactness::ExactOne;
  }
  return r;
}

WittReport finiteness_verdict(const CharPolynomial& chi, long K_max) {
  if (K_max < 1) throw std::invalid_argument("finiteness_verdict: K_max must be positive");
  WittReport report{witt_dims(chi, K_max), power_sums(chi, K_max), cyclotomic_factorize(chi),
                    Verdict{}};

  if (!report.dims.realizable()) {
    report.verdict = NotRealizable{*report.dims.failed_k, *report.dims.failed_value};
    return report;
  }

  if (report.factorization.complete()) {
    const auto dfm = dims_from_multiplicities(report.factorization.multiplicities);
    if (!dfm.consistent) {
      // Negative inverted dimension beyond the scanned table.
      for (const auto& [k, d] : dfm.dims) {
        if (d < 0) {
          report.verdict = NotRealizable{k, mpq_class(d)};
          return report;
        }
      }
    }
    FiniteDimensional fin;
    fin.dims_by_degree = dfm.dims;
    fin.total_dim = 0;
    fin.degree_sum = 0;
    for (const auto& [k, d] : dfm.dims) {
      fin.total_dim += d;
      fin.degree_sum += mpz_class(k) * d;
    }
    fin.degree_check = (fin.degree_sum == chi.degree());

    fin.vanishing_bound = 1;
    for (const auto& [m, mk] : report.factorization.multiplicities) {
      (void)mk;
      fin.vanishing_bound *= m;
    }
    fin.vanishing_bound += 1;

    fin.vanishing_checked = true;
    fin.vanishing_verified = true;
    if (fin.vanishing_bound <= K_max) {
      for (long k = static_cast<long>(fin.vanishing_bound.get_ui()); k <= K_max; ++k)
        if (report.dims.dims[static_cast<size_t>(k - 1)] != 0) fin.vanishing_verified = false;
    } else if (fin.vanishing_bound <= mpz_class("1000000000000")) {
      const unsigned long long kstar = fin.vanishing_bound.get_ui();
      fin.vanishing_verified = (witt_dim_at(chi, kstar) == 0);
    } else {
      fin.vanishing_checked = false;
      fin.vanishing_verified = false;
    }
    report.verdict = std::move(fin);
    return report;
  }

  // Non-cyclotomic remainder: some eigenvalue is off the unit circle, so the
  // growth is exponential. The witness comes from the remainder's spectrum.
  const CharPolynomial& rem = report.factorization.remainder;
  InfiniteDimensional inf;
  mpz_class cond = rem.conductor();
  inf.entropy_exceeds_one_exact = (cond >= 2 || cond <= -2);
  auto eig = eigenvalues_numeric(rem, 1e-10);
  double best = 0.0;
  size_t best_i = 0;
  for (size_t i = 0; i < eig.roots.size(); ++i) {
    if (std::abs(eig.roots[i]) > best) {
      best = std::abs(eig.roots[i]);
      best_i = i;
    }
  }
  inf.entropy = best;
  inf.residual = eig.residuals.empty() ? 0.0 : eig.residuals[best_i];
  inf.witness_root = eig.roots.empty() ? std::complex<double>(0.0) : eig.roots[best_i];
  report.verdict = std::move(inf);
  return report;
}

CharFromDims char_from_dims(const std::vector<mpz_class>& dims, long assumed_degree,
                            int order) {
  if (assumed_degree < 0) throw std::invalid_argument("char_from_dims: negative degree");
  if (order < assumed_degree || order < static_cast<long>(dims.size()))
    throw std::invalid_argument("char_from_dims: order must cover the degree and the dims");
  const TruncatedSeries h = pbw_series(dims, order);
  const TruncatedSeries chi = series_inverse(h);
  CharFromDims out;
  for (int i = static_cast<int>(assumed_degree) + 1; i <= order; ++i) {
    if (chi[i] != 0) {
      out.excess_index = i;
      out.excess_value = chi[i];
      return out;
    }
  }
  std::vector<mpz_class> coeffs(static_cast<size_t>(assumed_degree) + 1);
  for (long i = 0; i <= assumed_degree; ++i) coeffs[static_cast<size_t>(i)] = chi[static_cast<int>(i)].get_num();
  out.poly = CharPolynomial(std::move(coeffs));
  return out;
}

}  // namespace wittlab
