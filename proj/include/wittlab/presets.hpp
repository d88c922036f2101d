#pragma once

#include "wittlab/charpoly.hpp"
#include "wittlab/graphs.hpp"
#include "wittlab/series.hpp"

namespace wittlab::presets {

/// Free Lie algebra on r generators: chi = 1 - r y.
CharPolynomial free(long r);

/// Free sum of free Lie algebras on r and s generators: chi = (1-ry)(1-sy).
CharPolynomial free_sum(long r, long s);

/// Quadratic one-relator Lie algebra on m >= 2 generators: chi = 1 - my + y^2.
CharPolynomial one_relator(long m);

/// Dimension table of the one-relator algebra by the explicit
/// Moebius/binomial double sum; must agree with witt_dims(one_relator(m), K).
std::vector<mpz_class> labute_dims(long m, long K);

/// Closed-form power sums of the one-relator eigenvalue pair:
/// p_k = sum_i (-1)^i k/(k-i) binom(k-i, i) m^{k-2i}.
std::vector<mpz_class> one_relator_power_sums(long m, long K);

/// Filiform algebra: chi = (1-y) * prod_{k>=1} (1-y^k), truncated. Kept as a
/// series; it is not a polynomial and never returns one.
TruncatedSeries filiform_series(int order);

/// Holonomy Lie algebra of the type-A hyperplane arrangement:
/// chi = prod_{i=1..n} (1 - i y).
CharPolynomial braid_arrangement(long n);

/// Cayley graph of Z/11 with connection set {±2, ±3, ±5}.
Graph spiga();

}  // namespace wittlab::presets
