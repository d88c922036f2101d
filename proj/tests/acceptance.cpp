// Acceptance suite: end-to-end checks of the library against its contract,
// one printed line per criterion. Returns nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "wittlab/charpoly.hpp"
#include "wittlab/graphs.hpp"
#include "wittlab/numtheory.hpp"
#include "wittlab/presets.hpp"
#include "wittlab/series.hpp"

using namespace wittlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Polynomials produced along the way, shared by the Euler-Poincare criterion.
std::vector<CharPolynomial> g_collected;

bool criterion_spiga(std::string& detail) {
  const auto t0 = Clock::now();
  const Graph g = cayley_graph(11, {2, 3, 5, 6, 8, 9});
  const auto chi = clique_polynomial(g);
  const CharPolynomial expected(std::vector<mpz_class>{1, -11, 33, -33, 11});
  if (chi != expected) {
    detail = "clique polynomial mismatch";
    return false;
  }
  const auto eig = eigenvalues_numeric(chi, 1e-10);
  const std::vector<std::complex<double>> reference{
      {6.85317, 0.0}, {2.64361, 0.0}, {0.751697, -0.205541}, {0.751697, 0.205541}};
  if (eig.roots.size() != 4) {
    detail = "expected 4 eigenvalues";
    return false;
  }
  for (size_t i = 0; i < 4; ++i) {
    if (std::abs(eig.roots[i] - reference[i]) > 1e-4) {
      std::ostringstream o;
      o << "eigenvalue " << i << " off by " << std::abs(eig.roots[i] - reference[i]);
      detail = o.str();
      return false;
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) {
    detail = "too slow: " + std::to_string(dt) + "s";
    return false;
  }
  std::ostringstream o;
  o << "polynomial and all 4 eigenvalues within 1e-4 in " << int(dt * 1000) << " ms";
  detail = o.str();
  return true;
}

bool criterion_witt_classical(std::string& detail) {
  const auto t0 = Clock::now();
  for (long r = 1; r <= 5; ++r) {
    const CharPolynomial chi(std::vector<mpz_class>{1, -r});
    const auto table = witt_dims(chi, 12);
    if (!table.realizable()) {
      detail = "free algebra table not realizable";
      return false;
    }
    for (long k = 1; k <= 12; ++k) {
      if (necklace_eval(k, r) != table.dims[static_cast<size_t>(k - 1)]) {
        detail = "mismatch at r=" + std::to_string(r) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) {
    detail = "too slow";
    return false;
  }
  detail = "dimension tables equal M_k(r) for r=1..5, k<=12, exactly";
  return true;
}

bool criterion_cyclotomic_vanishing(std::string& detail) {
  std::mt19937 rng(20250810);
  mpz_class max_kstar = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // Random genuine dims vector over degrees <= 12 with total weighted
    // degree <= 20; its cyclotomic product is then a Lie-realizable input.
    std::vector<long> dims(12, 0);
    long budget = 20;
    std::vector<int> ks(12);
    std::iota(ks.begin(), ks.end(), 1);
    std::shuffle(ks.begin(), ks.end(), rng);
    long degree = 0;
    for (int k : ks) {
      const long cap = std::min<long>(4, budget / k);
      if (cap == 0) continue;
      const long l = static_cast<long>(rng() % static_cast<unsigned>(cap + 1));
      dims[static_cast<size_t>(k - 1)] = l;
      budget -= k * l;
      degree += k * l;
    }
    if (degree == 0) {
      --trial;
      continue;
    }
    std::map<long, long> mult;
    for (long j = 1; j <= 12; ++j)
      for (long t = j; t <= 12; t += j) mult[j] += dims[static_cast<size_t>(t - 1)];
    IntPolynomial prod = IntPolynomial::one();
    for (const auto& [m, mk] : mult)
      for (long i = 0; i < mk; ++i) prod = prod * cyclotomic_reversed(m);
    const CharPolynomial chi(prod);
    if (chi.degree() > 20) {
      detail = "generator exceeded the degree budget";
      return false;
    }
    g_collected.push_back(chi);

    const auto report = finiteness_verdict(chi, 64);
    const auto* fin = std::get_if<FiniteDimensional>(&report.verdict);
    if (!fin) {
      detail = "trial " + std::to_string(trial) + ": verdict is not FiniteDimensional";
      return false;
    }
    if (!fin->degree_check) {
      detail = "degree identity failed";
      return false;
    }
    if (!fin->vanishing_checked || !fin->vanishing_verified) {
      detail = "vanishing at k* not verified (k* = " + fin->vanishing_bound.get_str() + ")";
      return false;
    }
    // Explicit re-check of the table segment [k*, 64].
    if (fin->vanishing_bound <= 64) {
      for (long k = static_cast<long>(fin->vanishing_bound.get_ui()); k <= 64; ++k)
        if (report.dims.dims[static_cast<size_t>(k - 1)] != 0) {
          detail = "nonzero dimension in [k*, 64]";
          return false;
        }
    }
    if (witt_dim_at(chi, fin->vanishing_bound.get_ui()) != 0) {
      detail = "l_{k*} != 0";
      return false;
    }
    max_kstar = std::max(max_kstar, fin->vanishing_bound);
    // Recovered dims must equal the generating dims.
    for (long k = 1; k <= 12; ++k) {
      const auto it = fin->dims_by_degree.find(k);
      const long got = (it == fin->dims_by_degree.end()) ? 0 : it->second;
      if (got != dims[static_cast<size_t>(k - 1)]) {
        detail = "recovered dims differ from the generating dims";
        return false;
      }
    }
  }
  detail = "50 cyclotomic products: FiniteDimensional, vanishing verified (max k* = " +
           max_kstar.get_str() + "), degree identity exact";
  return true;
}

bool criterion_prop34(std::string& detail) {
  const auto t0 = Clock::now();
  for (long k = 1; k <= 24; ++k)
    for (long m1 = 1; m1 <= 60; ++m1)
      for (long m2 = m1; m2 <= 60; ++m2) {
        if (std::gcd(m1, m2) != 1) continue;
        if (ramanujan_P(k, m1 * m2) != ramanujan_P(k, m1) * ramanujan_P(k, m2)) {
          detail = "multiplicativity failed";
          return false;
        }
      }
  for (long m = 1; m <= 200; ++m) {
    if (ramanujan_P(1, m) != moebius(m) || necklace_root_sum_C(1, m) != moebius(m)) {
      detail = "P_1 = C_1 = mu failed at m=" + std::to_string(m);
      return false;
    }
  }
  for (long k = 2; k <= 24; ++k)
    for (long m = 1; m <= 60; ++m) {
      if (std::gcd(k, m) != 1) continue;
      if (necklace_root_sum_C(k, m) != 0) {
        detail = "C_k(m) != 0 for coprime k, m";
        return false;
      }
    }
  for (long k = 1; k <= 24; ++k)
    for (long m = 1; m <= 30; ++m) {
      std::complex<double> ps = 0.0, cs = 0.0;
      for (long a = 1; a <= m; ++a) {
        if (std::gcd(a, m) != 1 && m > 1) continue;
        const auto xi_pow = [&](long e) {
          return std::exp(std::complex<double>(
              0.0, 2.0 * std::numbers::pi * double(a) * double(e) / double(m)));
        };
        ps += xi_pow(k);
        std::complex<double> mk = 0.0;
        for (long j : divisors(k)) mk += double(moebius(k / j)) * xi_pow(j);
        cs += mk / double(k);
        if (m == 1) break;
      }
      if (std::abs(ps.real() - ramanujan_P(k, m).get_d()) > 1e-6 ||
          std::abs(cs.real() - necklace_root_sum_C(k, m).get_d()) > 1e-6) {
        detail = "complex oracle disagreement";
        return false;
      }
    }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) {
    detail = "too slow: " + std::to_string(dt) + "s";
    return false;
  }
  std::ostringstream o;
  o << "multiplicativity, mu identities, coprime vanishing, complex oracle; " << int(dt * 1000)
    << " ms";
  detail = o.str();
  return true;
}

bool criterion_one_relator(std::string& detail) {
  for (long m = 2; m <= 6; ++m) {
    const auto chi = presets::one_relator(m);
    const auto direct = presets::labute_dims(m, 20);
    const auto table = witt_dims(chi, 20);
    if (!table.realizable() || direct != table.dims) {
      detail = "labute/witt mismatch at m=" + std::to_string(m);
      return false;
    }
    if (presets::one_relator_power_sums(m, 20) != power_sums(chi, 20)) {
      detail = "closed-form power sums mismatch at m=" + std::to_string(m);
      return false;
    }
  }
  const auto abelian = witt_dims(presets::one_relator(2), 20);
  for (size_t i = 0; i < 20; ++i) {
    const mpz_class want = (i == 0) ? 2 : 0;
    if (abelian.dims[i] != want) {
      detail = "m=2 is not abelian";
      return false;
    }
  }
  detail = "labute_dims = witt_dims and closed-form power sums, m=2..6, K=20, exact";
  return true;
}

bool criterion_pbw_roundtrip(std::string& detail) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    // Support <= 6, entries <= 4, weighted degree <= 20 so the inverse is a
    // polynomial well inside the order-40 window.
    std::vector<mpz_class> dims(6, 0);
    long budget = 20;
    long degree = 0;
    for (int k = 1; k <= 6; ++k) {
      const long cap = std::min<long>(4, budget / k);
      if (cap == 0) continue;
      const long l = static_cast<long>(rng() % static_cast<unsigned>(cap + 1));
      dims[static_cast<size_t>(k - 1)] = l;
      budget -= k * l;
      degree += k * l;
    }
    if (degree == 0) {
      --trial;
      continue;
    }
    const auto h = pbw_series(dims, 40);
    const auto chi_series = series_inverse(h);
    if (series_inverse(chi_series) != h) {
      detail = "inverse round-trip failed";
      return false;
    }
    const auto r = char_from_dims(dims, degree, 40);
    if (!r.accepted()) {
      detail = "char_from_dims rejected a genuine dims vector";
      return false;
    }
    const auto table = witt_dims(*r.poly, 6);
    if (!table.realizable() || table.dims != dims) {
      detail = "witt_dims did not reproduce the dims";
      return false;
    }
  }
  // Filiform: the truncated product (1-y) prod (1-y^k) at N = 30.
  const auto fili = presets::filiform_series(30);
  std::vector<mpq_class> expect(31, 0);
  expect[0] = 1;
  auto times = [&](int k) {
    for (int i = 30; i >= k; --i) expect[static_cast<size_t>(i)] -= expect[static_cast<size_t>(i - k)];
  };
  times(1);
  for (int k = 1; k <= 30; ++k) times(k);
  if (fili != TruncatedSeries(expect, 30)) {
    detail = "filiform series mismatch at N=30";
    return false;
  }
  detail = "100 random dims vectors round-trip exactly; filiform series matches at N=30";
  return true;
}

bool criterion_clique_oracle(std::string& detail) {
  std::mt19937 rng(1234321);
  auto brute = [](const Graph& g) {
    const int v = g.vertex_count();
    std::vector<mpz_class> counts(static_cast<size_t>(v) + 1, 0);
    for (unsigned mask = 1; mask < (1u << v); ++mask) {
      std::vector<int> verts;
      for (int i = 0; i < v; ++i)
        if (mask & (1u << i)) verts.push_back(i);
      bool clique = true;
      for (size_t a = 0; a < verts.size() && clique; ++a)
        for (size_t b = a + 1; b < verts.size() && clique; ++b)
          if (!g.has_edge(verts[a], verts[b])) clique = false;
      if (clique) ++counts[verts.size()];
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    if (!counts.empty()) counts.erase(counts.begin());
    return counts;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 8);
    std::bernoulli_distribution edge(0.1 + 0.1 * static_cast<double>(rng() % 9));
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        if (edge(rng)) e.emplace_back(a, b);
    const Graph g(v, e);
    if (clique_counts(g) != brute(g)) {
      detail = "fast counter disagrees with subset enumeration";
      return false;
    }
    g_collected.push_back(clique_polynomial(g));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const int v = 2 + static_cast<int>(rng() % 11);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < v; ++i)
      e.emplace_back(i, static_cast<int>(rng() % static_cast<unsigned>(i)));
    const Graph tree(v, e);
    const long ec = tree.edge_count();
    const CharPolynomial want(std::vector<mpz_class>{1, -(ec + 1), ec});
    const auto got = clique_polynomial(tree);
    if (got != want) {
      detail = "tree polynomial differs from (1-ey)(1-y)";
      return false;
    }
    g_collected.push_back(got);
  }
  for (int v = 1; v <= 9; ++v) {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) e.emplace_back(a, b);
    IntPolynomial want = IntPolynomial::one();
    for (int i = 0; i < v; ++i) want = want * IntPolynomial({1, -1});
    const auto got = clique_polynomial(Graph(v, e));
    if (got != CharPolynomial(want)) {
      detail = "complete graph polynomial differs from (1-y)^v";
      return false;
    }
    g_collected.push_back(got);
  }
  detail = "200 random graphs vs subset oracle, 20 trees, K_v for v<=9: all exact";
  return true;
}

bool criterion_euler_poincare(std::string& detail) {
  if (g_collected.empty()) {
    detail = "no polynomials collected";
    return false;
  }
  for (const auto& chi : g_collected) {
    const bool ep_zero = (euler_poincare(chi) == 0);
    const auto fact = cyclotomic_factorize(chi);
    const bool has_order_one = fact.multiplicities.count(1) > 0;
    if (ep_zero != has_order_one) {
      detail = "chi(1) = 0 iff Phi_1 | chi failed";
      return false;
    }
  }
  detail = "chi(1) = 0 iff order-1 multiplicity >= 1, across " +
           std::to_string(g_collected.size()) + " polynomials";
  return true;
}

bool extra_turan_extremal(std::string& detail) {
  const Graph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto m = turan_check(k22);
  if (!(m.mantel_applicable && m.mantel_holds && 4 * m.c2 == m.c1 * m.c1)) {
    detail = "K_{2,2} is not Mantel-extremal";
    return false;
  }
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto t = turan_check(k3);
  if (!(t.turan_question_holds && 2 * t.clique_number * t.c2 ==
                                      (t.clique_number - 1) * t.c1 * t.c1)) {
    detail = "K_3 is not Turan-extremal";
    return false;
  }
  detail = "K_{2,2} and K_3 meet their bounds with exact equality";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1 spiga reproduction", criterion_spiga},
      {"2 classical Witt formula", criterion_witt_classical},
      {"3 cyclotomic vanishing bound", criterion_cyclotomic_vanishing},
      {"4 root-of-unity sum suite", criterion_prop34},
      {"5 one-relator dual path", criterion_one_relator},
      {"6 PBW round-trip", criterion_pbw_roundtrip},
      {"7 clique-count oracle", criterion_clique_oracle},
      {"8 euler-poincare criterion", criterion_euler_poincare},
      {"extra: turan extremal screens", extra_turan_extremal},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.label << " -- " << detail << "\n";
    if (!ok) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
