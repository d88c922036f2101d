#pragma once

#include <complex>
#include <vector>

namespace wittlab {

struct RootSolveOptions {
  double tol = 1e-10;       // target relative backward error per root
  int max_iterations = 400;
  bool parallel = true;     // Jacobi sweep across roots via OpenMP
};

struct RootSolveResult {
  std::vector<std::complex<double>> roots;  // canonical order: Re desc, Im asc
  std::vector<double> residuals;            // relative backward error per root
  bool converged = false;
  int iterations = 0;
};

/// Simultaneous (Aberth-Ehrlich) root iteration for a complex-coefficient
/// polynomial c[0] + c[1] y + ... + c[n] y^n, c[n] != 0. The Jacobi form of
/// the update is used so the sweep can be parallelized across roots while
/// staying deterministic for any thread count. On hitting the iteration cap
/// the partial result is returned with converged = false.
RootSolveResult aberth_roots(const std::vector<std::complex<double>>& coeffs,
                             const RootSolveOptions& opts = {});

}  // namespace wittlab
