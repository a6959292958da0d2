#include "ptsym/measures.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace ptsym {

double pseudo_trace_distance(const GeneralizedDensityMatrix& r1,
                             const GeneralizedDensityMatrix& r2,
                             const Metric& m) {
  if (r1.dim() != r2.dim() || r1.dim() != m.g_mat.rows())
    throw std::invalid_argument("pseudo_trace_distance: dimension mismatch");
  // Delta^ddag Delta is similar to the PSD (G Delta G^{-1})^dag (G Delta G^{-1}),
  // so Tr sqrt reduces to a singular value sum of the rotated difference.
  const Matrix rotated_diff = m.g_mat * (r1.mat - r2.mat) * m.g_inv;
  const double d = 0.5 * singular_values(rotated_diff).sum();
  if (d > 1.0 + 1e-9)
    std::cerr << "pseudo_trace_distance: value " << d
              << " exceeds 1 for generalized states\n";
  return d;
}

double blp_functional(const std::vector<double>& d_series) {
  if (d_series.size() < 2)
    throw std::invalid_argument("blp_functional: need at least 2 points");
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < d_series.size(); ++k)
    acc += std::max(0.0, d_series[k + 1] - d_series[k]);
  return acc;
}

double pseudo_fidelity(const GeneralizedDensityMatrix& rt,
                       const GeneralizedDensityMatrix& r0, const Metric& m) {
  if (rt.dim() != r0.dim() || rt.dim() != m.g_mat.rows())
    throw std::invalid_argument("pseudo_fidelity: dimension mismatch");
  const Matrix rot_t = m.g_mat * rt.mat * m.g_inv;
  const Matrix rot_0 = m.g_mat * r0.mat * m.g_inv;
  // (Tr sqrt(sqrt(a) b sqrt(a)))^2 = (sum sv(sqrt(a) sqrt(b)))^2; the singular
  // value form does not amplify eigenvalue dust of rank-deficient states.
  const Matrix sqrt_t = matrix_sqrt_psd(rot_t);
  const Matrix sqrt_0 = matrix_sqrt_psd(rot_0);
  const double root_sum = singular_values(sqrt_t * sqrt_0).sum();
  return root_sum * root_sum;
}

double pseudo_concurrence(const GeneralizedDensityMatrix& rho2,
                          const Metric& site_metric) {
  if (rho2.dim() != 4)
    throw std::invalid_argument(
        "pseudo_concurrence: expected a 4x4 two-system state");
  if (site_metric.eta.rows() != 2)
    throw std::invalid_argument(
        "pseudo_concurrence: pass the single-site 2x2 metric");

  const Matrix spin_flip = [&] {
    const Matrix y_gen = sigma_y() * site_metric.eta;  // sigma_G^y
    return kron(y_gen, y_gen);
  }();
  const Matrix g2 = kron(site_metric.g_mat, site_metric.g_mat);
  const Matrix g2_inv = kron(site_metric.g_inv, site_metric.g_inv);

  // conj(rho_G) in the metric eigenframe; entrywise when eta = I.
  const Matrix conj_state =
      g2_inv * (g2 * rho2.mat * g2_inv).conjugate() * g2;
  const Matrix r_mat = rho2.mat * spin_flip * conj_state * spin_flip;

  const ComplexVector ev = general_eigenvalues(r_mat);
  std::array<double, 4> lambda{};
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (std::abs(ev(i).imag()) > 1e-8)
      throw std::runtime_error(
          "pseudo_concurrence: eigenvalue imaginary part " +
          std::to_string(ev(i).imag()) +
          " beyond tolerance (invalid state or broken metric lift)");
    if (ev(i).real() < -1e-8)
      throw std::runtime_error("pseudo_concurrence: eigenvalue " +
                               std::to_string(ev(i).real()) +
                               " beyond negative tolerance");
    lambda[static_cast<std::size_t>(i)] =
        std::sqrt(std::max(ev(i).real(), 0.0));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace ptsym
