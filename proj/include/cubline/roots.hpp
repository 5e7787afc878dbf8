#pragma once

#include <complex>
#include <vector>

namespace cubline::numeric {

using C = std::complex<double>;

// p(x) = c[0] + c[1] x + ... + c[n] x^n evaluated with Horner's scheme.
C eval_poly(const std::vector<C>& c, C x);
C eval_deriv(const std::vector<C>& c, C x);

// All n roots (with repetition) of a degree-n polynomial by Durand-Kerner
// iteration. Requires |c.back()| > 0. Multiple roots come back as loose
// clusters of radius about eps^(1/m); see clustered_roots.
std::vector<C> durand_kerner(const std::vector<C>& c);

struct RootCluster {
  C value;
  int multiplicity;
};

// Roots grouped by multiplicity. Raw Durand-Kerner output is clustered at
// a fixed relative detection radius (1e-4, far above the eps^(1/m) scatter
// of a double-precision multiple root, far below any honest root gap the
// pipeline accepts), then each cluster is polished by multiplicity-aware
// Newton (z -= m p / p'), which restores quadratic convergence at an
// m-fold root. merge_tol only merges the polished roots, so the result is
// stable across merge_tol spanning several orders of magnitude.
std::vector<RootCluster> clustered_roots(const std::vector<C>& c, double merge_tol);

}  // namespace cubline::numeric
