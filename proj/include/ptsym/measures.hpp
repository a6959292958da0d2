#ifndef PTSYM_MEASURES_HPP
#define PTSYM_MEASURES_HPP

#include "ptsym/pt_system.hpp"

#include <vector>

namespace ptsym {

/// Trace distance adapted to the eta-pseudo inner product:
/// D = 1/2 sum singular_values(G (r1 - r2) G^{-1}). The metric must be
/// lifted to the states' dimension. Values beyond 1 + 1e-9 are logged to
/// stderr, never clipped.
double pseudo_trace_distance(const GeneralizedDensityMatrix& r1,
                             const GeneralizedDensityMatrix& r2,
                             const Metric& m);

/// Discrete BLP accumulation sum_k max(0, D_{k+1} - D_k) over a trace
/// distance series on ascending times; > 0 iff any revival exists.
double blp_functional(const std::vector<double>& d_series);

/// Uhlmann fidelity of the frame-rotated pair, evaluated as
/// (sum singular_values(sqrt(rho') sqrt(rho0')))^2.
double pseudo_fidelity(const GeneralizedDensityMatrix& rt,
                       const GeneralizedDensityMatrix& r0, const Metric& m);

/// Concurrence of a two-system generalized state:
/// C = max(0, l1 - l2 - l3 - l4), l_i the decreasingly ordered square roots
/// of the eigenvalues of R = rho_G rho~_G with
/// rho~_G = (sigma_G^y (x) sigma_G^y) conj(rho_G) (sigma_G^y (x) sigma_G^y),
/// sigma_G^y = sigma^y eta. The conjugation is taken in the metric
/// eigenframe (the frame where the state is an ordinary density matrix);
/// this keeps the spectrum of R real non-negative for every valid state and
/// reduces to the entrywise conjugate when eta = I. Pass the single-site
/// metric. For eta != I the value can exceed 1 by O(tan alpha).
double pseudo_concurrence(const GeneralizedDensityMatrix& rho2,
                          const Metric& site_metric);

}  // namespace ptsym

#endif
