#include "wittlab/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace wittlab {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds{1};
  for (auto [p, e] : factorize(n)) {
    const size_t base = ds.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int moebius(long n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be positive");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::power_minus_one(unsigned long n) {
  std::vector<mpz_class> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<mpz_class> c(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<mpz_class> c(ac.size() + bc.size() - 1, 0);
  for (size_t i = 0; i < ac.size(); ++i)
    for (size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<long>(i)) - b.coeff(static_cast<long>(i));
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& num,
                                              const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("try_divide_exact: division by zero");
  if (num.is_zero()) return IntPolynomial();
  const mpz_class d0 = den.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw std::invalid_argument("try_divide_exact: divisor constant term must be +/-1");
  const long qdeg = num.degree() - den.degree();
  if (qdeg < 0) return std::nullopt;

  // Low-end (power series) quotient; valid because d0 is a unit.
  std::vector<mpz_class> q(static_cast<size_t>(qdeg) + 1, 0);
  for (long k = 0; k <= qdeg; ++k) {
    mpz_class s = num.coeff(k);
    for (long i = 1; i <= std::min<long>(k, den.degree()); ++i)
      s -= den.coeff(i) * q[static_cast<size_t>(k - i)];
    q[static_cast<size_t>(k)] = (d0 == 1) ? s : mpz_class(-s);
  }
  IntPolynomial quot{std::move(q)};
  if (quot * den == num) return quot;
  return std::nullopt;
}

IntPolynomial cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::map<long, IntPolynomial> memo;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPolynomial phi = IntPolynomial::power_minus_one(static_cast<unsigned long>(n));
  for (long d : divisors(n)) {
    if (d == n) continue;
    auto q = try_divide_exact(phi, cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic: exact division failed");
    phi = std::move(*q);
  }
  std::lock_guard lock(mu);
  return memo.emplace(n, std::move(phi)).first->second;
}

mpq_class necklace_eval(long k, const mpq_class& x) {
  if (k < 1) throw std::invalid_argument("necklace_eval: k must be positive");
  mpq_class sum = 0;
  mpq_class xj;
  for (long j : divisors(k)) {
    const int mu = moebius(k / j);
    if (mu == 0) continue;
    mpz_pow_ui(mpq_numref(xj.get_mpq_t()), x.get_num().get_mpz_t(), static_cast<unsigned long>(j));
    mpz_pow_ui(mpq_denref(xj.get_mpq_t()), x.get_den().get_mpz_t(), static_cast<unsigned long>(j));
    sum += mu > 0 ? xj : mpq_class(-xj);
  }
  return sum / k;
}

mpz_class ramanujan_P(long k, long m) {
  if (k < 1 || m < 1) throw std::invalid_argument("ramanujan_P: arguments must be positive");
  mpz_class s = 0;
  for (long d : divisors(m))
    if (k % d == 0) s += mpz_class(d) * moebius(m / d);
  return s;
}

mpq_class necklace_root_sum_C(long k, long m) {
  if (k < 1 || m < 1)
    throw std::invalid_argument("necklace_root_sum_C: arguments must be positive");
  mpz_class s = 0;
  for (long j : divisors(k)) s += mpz_class(moebius(k / j)) * ramanujan_P(j, m);
  return mpq_class(s) / k;
}

}  // namespace wittlab
