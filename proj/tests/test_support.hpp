#ifndef PTSYM_TEST_SUPPORT_HPP
#define PTSYM_TEST_SUPPORT_HPP

#include "ptsym/pt_system.hpp"

#include <random>

namespace ptsym::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Matrix random_complex(std::mt19937& rng, Eigen::Index rows,
                             Eigen::Index cols, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline Matrix random_hermitian(std::mt19937& rng, Eigen::Index n,
                               double scale = 1.0) {
  const Matrix a = random_complex(rng, n, n, scale);
  return 0.5 * (a + a.adjoint());
}

inline Matrix random_psd(std::mt19937& rng, Eigen::Index n) {
  const Matrix a = random_complex(rng, n, n);
  return a * a.adjoint();
}

inline Matrix random_density(std::mt19937& rng, Eigen::Index n) {
  Matrix rho = random_psd(rng, n);
  rho /= rho.trace().real();
  return rho;
}

// Unbroken-PT parameter triples sampled away from the exceptional point
// (|r sin psi| <= 0.95 s) so metric entries stay O(1).
inline PTParams random_unbroken(std::mt19937& rng) {
  std::uniform_real_distribution<double> r_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> s_dist(0.05, 2.0);
  std::uniform_real_distribution<double> psi_dist(-3.1, 3.1);
  for (;;) {
    PTParams p{r_dist(rng), s_dist(rng), psi_dist(rng), 0.0};
    if (std::abs(p.r * std::sin(p.psi)) <= 0.95 * p.s) return p;
  }
}

// Valid generalized state: a proper density matrix pulled back from the
// rotated frame.
inline GeneralizedDensityMatrix random_generalized_state(std::mt19937& rng,
                                                         const Metric& m) {
  const Matrix rho_rot = random_density(rng, m.g_mat.rows());
  return {m.g_inv * rho_rot * m.g_mat};
}

}  // namespace ptsym::testing

#endif
