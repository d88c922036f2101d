// Benchmark comparing the OpenMP kernels against their serial references:
// truncated-series convolution, pivoted clique counting, and the simultaneous
// root iteration. Results are checked for equality while timing.

#include <chrono>
#include <complex>
#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "wittlab/graphs.hpp"
#include "wittlab/roots.hpp"
#include "wittlab/series.hpp"

using namespace wittlab;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f, int repeats = 3) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::cout << std::left << std::setw(26) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
            << parallel_ms << " ms" << std::setprecision(2) << std::setw(9)
            << serial_ms / parallel_ms << "x   " << (equal ? "results equal" : "MISMATCH")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  int vertices = 80;
  double density = 0.7;
  int order = 1200;
  int degree = 350;
  app.add_option("--vertices", vertices, "clique benchmark graph size")->capture_default_str();
  app.add_option("--density", density, "clique benchmark edge density")->capture_default_str();
  app.add_option("--order", order, "series convolution truncation order")->capture_default_str();
  app.add_option("--degree", degree, "root solve polynomial degree")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n\n";
#endif
  std::cout << std::left << std::setw(26) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "parallel" << std::setw(10) << "speedup" << "\n";

  std::mt19937 rng(7);

  {
    std::bernoulli_distribution edge(density);
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < vertices; ++a)
      for (int b = a + 1; b < vertices; ++b)
        if (edge(rng)) e.emplace_back(a, b);
    const Graph g(vertices, e);
    std::vector<mpz_class> serial_counts, parallel_counts;
    const double ts = time_ms([&] { serial_counts = clique_counts_serial(g, vertices); });
    const double tp = time_ms([&] { parallel_counts = clique_counts(g, vertices); });
    report("clique counting", ts, tp, serial_counts == parallel_counts);
  }

  {
    std::uniform_int_distribution<long> coeff(-99, 99);
    std::vector<mpq_class> ca(static_cast<size_t>(order) + 1), cb(ca);
    for (auto& c : ca) c = coeff(rng);
    for (auto& c : cb) c = coeff(rng);
    ca[0] = 1;
    cb[0] = 1;
    const TruncatedSeries a(ca, order), b(cb, order);
    TruncatedSeries rs = TruncatedSeries::one(order), rp = rs;
    const double ts = time_ms([&] { rs = series_mul_serial(a, b); });
    const double tp = time_ms([&] { rp = series_mul(a, b); });
    report("series convolution", ts, tp, rs == rp);
  }

  {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<std::complex<double>> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = coeff(rng);
    c.back() = 1.0;
    RootSolveOptions serial_opts, parallel_opts;
    serial_opts.parallel = false;
    parallel_opts.parallel = true;
    RootSolveResult rs, rp;
    const double ts = time_ms([&] { rs = aberth_roots(c, serial_opts); });
    const double tp = time_ms([&] { rp = aberth_roots(c, parallel_opts); });
    bool equal = rs.roots.size() == rp.roots.size();
    for (size_t i = 0; equal && i < rs.roots.size(); ++i)
      if (rs.roots[i] != rp.roots[i]) equal = false;
    report("aberth root iteration", ts, tp, equal);
  }

  return 0;
}
