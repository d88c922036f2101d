#include "wittlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wittlab {

namespace {

using cd = std::complex<double>;

struct HornerEval {
  cd value;
  cd derivative;
};

HornerEval eval_with_derivative(const std::vector<cd>& c, cd z) {
  cd p = c.back(), dp = 0.0;
  for (size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

// Relative backward error |p(z)| / sum |c_i||z|^i.
double backward_error(const std::vector<cd>& c, cd z) {
  const double az = std::abs(z);
  double s = std::abs(c.back());
  for (size_t i = c.size() - 1; i-- > 0;) s = s * az + std::abs(c[i]);
  const cd v = eval_with_derivative(c, z).value;
  return std::abs(v) / std::max(s, std::numeric_limits<double>::min());
}

std::vector<cd> initial_guesses(const std::vector<cd>& c) {
  const size_t n = c.size() - 1;
  // Cauchy-style radius, spread points with an irrational angular offset so
  // no guess sits on a symmetry axis of the root set.
  double radius = 0.0;
  const double lead = std::abs(c[n]);
  for (size_t i = 0; i < n; ++i)
    radius = std::max(radius, std::pow(std::abs(c[i]) / lead, 1.0 / double(n - i)));
  radius = std::max(radius * 1.2, 0.5);
  std::vector<cd> z(n);
  const double offset = 0.43882;
  for (size_t i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * (double(i) / double(n)) + offset;
    z[i] = std::polar(radius, theta);
  }
  return z;
}

}  // namespace

RootSolveResult aberth_roots(const std::vector<cd>& coeffs, const RootSolveOptions& opts) {
  if (coeffs.empty() || coeffs.back() == cd(0.0))
    throw std::invalid_argument("aberth_roots: leading coefficient must be nonzero");
  if (opts.tol <= 0) throw std::invalid_argument("aberth_roots: tol must be positive");

  RootSolveResult res;
  const long n = static_cast<long>(coeffs.size()) - 1;
  if (n == 0) {
    res.converged = true;
    return res;
  }

  std::vector<cd> z = initial_guesses(coeffs);
  std::vector<cd> znew(z.size());
  std::vector<char> done(z.size(), 0);

  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
#pragma omp parallel for schedule(static) if (opts.parallel)
    for (long i = 0; i < n; ++i) {
      if (done[i]) {
        znew[i] = z[i];
        continue;
      }
      const auto [p, dp] = eval_with_derivative(coeffs, z[i]);
      if (backward_error(coeffs, z[i]) <= opts.tol) {
        done[i] = 1;
        znew[i] = z[i];
        continue;
      }
      cd newton = (dp != cd(0.0)) ? p / dp : cd(0.0);
      cd repulsion = 0.0;
      for (long j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const cd denom = 1.0 - newton * repulsion;
      cd step = (denom != cd(0.0)) ? newton / denom : newton;
      if (dp == cd(0.0) && p != cd(0.0)) {
        // Stationary point that is not a root: nudge off it.
        step = cd(0.05, 0.05) * (std::abs(z[i]) + 1.0);
      }
      znew[i] = z[i] - step;
    }
    for (long i = 0; i < n; ++i)
      if (!done[i]) all_done = false;
    z.swap(znew);
    if (all_done) break;
  }

  // Conjugate cleanup for real-coefficient inputs, then canonical ordering.
  bool real_input = true;
  for (const auto& c : coeffs)
    if (c.imag() != 0.0) real_input = false;
  if (real_input) {
    std::vector<char> used(z.size(), 0);
    for (size_t i = 0; i < z.size(); ++i) {
      if (used[i]) continue;
      // Multiple real roots split into conjugate pairs whose spurious
      // imaginary parts scale like sqrt of the backward error.
      const double snap =
          std::max(1e-9, 4.0 * std::sqrt(backward_error(coeffs, z[i])));
      if (std::abs(z[i].imag()) <= snap * (1.0 + std::abs(z[i]))) {
        z[i] = cd(z[i].real(), 0.0);
        used[i] = 1;
        continue;
      }
      size_t best = i;
      double bestd = std::numeric_limits<double>::infinity();
      for (size_t j = i + 1; j < z.size(); ++j) {
        if (used[j]) continue;
        const double d = std::abs(z[j] - std::conj(z[i]));
        if (d < bestd) {
          bestd = d;
          best = j;
        }
      }
      if (best != i && bestd <= 1e-4 * (1.0 + std::abs(z[i]))) {
        const cd avg = 0.5 * (z[i] + std::conj(z[best]));
        z[i] = avg;
        z[best] = std::conj(avg);
        used[i] = used[best] = 1;
      }
    }
  }
  std::sort(z.begin(), z.end(), [](cd a, cd b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() < b.imag();
  });

  res.roots = std::move(z);
  res.iterations = iter;
  res.residuals.resize(res.roots.size());
  res.converged = true;
  for (size_t i = 0; i < res.roots.size(); ++i) {
    res.residuals[i] = backward_error(coeffs, res.roots[i]);
    if (res.residuals[i] > opts.tol) res.converged = false;
  }
  return res;
}

}  // namespace wittlab
