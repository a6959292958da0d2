#include "ptsym/pt_system.hpp"

#include <cmath>
#include <stdexcept>

namespace ptsym {

namespace {
constexpr Complex kI{0.0, 1.0};
// Margin away from the exceptional point |r sin(psi)| = |s|, where sec(alpha)
// and with it every metric entry diverges.
constexpr double kExceptionalMargin = 1e-9;
}  // namespace

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

bool unbroken(const PTParams& p) {
  if (!std::isfinite(p.r) || !std::isfinite(p.s) || !std::isfinite(p.psi) ||
      !std::isfinite(p.phi))
    return false;
  if (p.s == 0.0) return false;
  return std::abs(p.r * std::sin(p.psi)) <=
         std::abs(p.s) * (1.0 - kExceptionalMargin);
}

void require_unbroken(const PTParams& p) {
  if (!unbroken(p))
    throw std::invalid_argument(
        "PT parameters are broken or at the exceptional point: need "
        "s^2 > r^2 sin^2(psi) strictly");
}

Matrix build_pt_hamiltonian(const PTParams& p) {
  require_unbroken(p);
  Matrix h(2, 2);
  h << p.r * std::exp(kI * p.psi), p.s * std::exp(kI * p.phi),
      p.s * std::exp(-kI * p.phi), p.r * std::exp(-kI * p.psi);
  return h;
}

PTEigensystem pt_eigensystem(const PTParams& p) {
  require_unbroken(p);
  if (std::abs(p.phi) > tol::construction)
    throw std::invalid_argument(
        "pt_eigensystem: the eigenvector/metric construction requires phi = 0");

  PTEigensystem out;
  // Principal branch keeps |alpha| < pi/2, so sec(alpha) > 0 and the metric
  // stays positive definite.
  out.alpha = std::asin(p.r * std::sin(p.psi) / p.s);
  const double root =
      std::sqrt(p.s * p.s - p.r * p.r * std::sin(p.psi) * std::sin(p.psi));
  out.energies = {p.r * std::cos(p.psi) - root, p.r * std::cos(p.psi) + root};

  const double norm = 1.0 / std::sqrt(2.0 * std::cos(out.alpha));
  const Complex lo = std::exp(-kI * (out.alpha / 2.0));
  const Complex hi = std::exp(kI * (out.alpha / 2.0));

  // v_minus belongs to r cos(psi) - s cos(alpha); for s > 0 that is E1.
  ComplexVector v_minus(2), v_plus(2);
  v_minus << -norm * lo, norm * hi;
  v_plus << norm * hi, norm * lo;

  out.right_vectors.resize(2, 2);
  if (p.s > 0) {
    out.right_vectors.col(0) = v_minus;
    out.right_vectors.col(1) = v_plus;
  } else {
    out.right_vectors.col(0) = v_plus;
    out.right_vectors.col(1) = v_minus;
  }
  // H is complex symmetric at phi = 0, so the normalized left covectors are
  // the transposed right eigenvectors.
  out.left_covectors = out.right_vectors.transpose();
  return out;
}

Metric build_metric(const PTParams& p) {
  const PTEigensystem eig = pt_eigensystem(p);
  const double sec = 1.0 / std::cos(eig.alpha);
  const double tan = std::tan(eig.alpha);
  const double half_c = std::cos(eig.alpha / 2.0);
  const double half_s = std::sin(eig.alpha / 2.0);
  const double scale = 1.0 / std::sqrt(std::cos(eig.alpha));

  Metric m;
  m.eta.resize(2, 2);
  m.eta << sec, -kI * tan, kI * tan, sec;
  m.eta_inv.resize(2, 2);  // det(eta) = 1
  m.eta_inv << sec, kI * tan, -kI * tan, sec;
  m.g_mat.resize(2, 2);
  m.g_mat << scale * half_c, -kI * scale * half_s, kI * scale * half_s,
      scale * half_c;
  m.g_inv.resize(2, 2);  // det(G) = 1
  m.g_inv << scale * half_c, kI * scale * half_s, -kI * scale * half_s,
      scale * half_c;

  // Consistency with the spectral definition eta = sum |E_n>><<E_n|.
  Matrix from_vectors = Matrix::Zero(2, 2);
  for (int n = 0; n < 2; ++n)
    from_vectors +=
        eig.left_covectors.row(n).adjoint() * eig.left_covectors.row(n);
  if ((m.eta - from_vectors).cwiseAbs().maxCoeff() > tol::identity)
    throw std::runtime_error(
        "build_metric: closed-form eta disagrees with the eigenvector sum");
  if ((m.g_mat * m.g_mat - m.eta).cwiseAbs().maxCoeff() > tol::construction ||
      (m.g_mat * m.g_inv - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() >
          tol::construction)
    throw std::runtime_error("build_metric: G^2 = eta check failed");
  return m;
}

Metric identity_metric(Eigen::Index dim) {
  Metric m;
  m.eta = Matrix::Identity(dim, dim);
  m.eta_inv = m.eta;
  m.g_mat = m.eta;
  m.g_inv = m.eta;
  return m;
}

Metric lift_metric(const Metric& site, int n_systems) {
  if (n_systems < 1) throw std::invalid_argument("lift_metric: n_systems < 1");
  Metric out = site;
  for (int k = 1; k < n_systems; ++k) {
    out.eta = kron(out.eta, site.eta);
    out.eta_inv = kron(out.eta_inv, site.eta_inv);
    out.g_mat = kron(out.g_mat, site.g_mat);
    out.g_inv = kron(out.g_inv, site.g_inv);
  }
  return out;
}

Metric lift_metric_with_bath(const Metric& system, Eigen::Index dim_bath) {
  const Matrix ident = Matrix::Identity(dim_bath, dim_bath);
  Metric out;
  out.eta = kron(system.eta, ident);
  out.eta_inv = kron(system.eta_inv, ident);
  out.g_mat = kron(system.g_mat, ident);
  out.g_inv = kron(system.g_inv, ident);
  return out;
}

Matrix pseudo_adjoint(const Matrix& a, const Metric& m) {
  if (a.rows() != a.cols() || a.rows() != m.eta.rows())
    throw std::invalid_argument("pseudo_adjoint: dimension mismatch");
  return m.eta_inv * a.adjoint() * m.eta;
}

Matrix hermitian_equivalent(const PTParams& p) {
  const PTEigensystem eig = pt_eigensystem(p);
  const double diag = p.r * std::cos(p.psi);
  const double off = p.s * std::cos(eig.alpha);
  Matrix h(2, 2);
  h << diag, off, off, diag;
  return h;
}

void validate_generalized_state(const GeneralizedDensityMatrix& state,
                                const Metric& lifted, double trace_tol,
                                double psd_floor) {
  if (state.mat.rows() != state.mat.cols() ||
      state.mat.rows() != lifted.g_mat.rows())
    throw std::invalid_argument(
        "validate_generalized_state: dimension mismatch");

  const Complex tr = state.mat.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > trace_tol)
    throw std::runtime_error(
        "generalized state invariant violated: trace deviates from one by " +
        std::to_string(std::abs(tr - Complex(1.0, 0.0))));

  const Matrix rotated = lifted.g_mat * state.mat * lifted.g_inv;
  if (hermiticity_defect(rotated) > tol::identity)
    throw std::runtime_error(
        "generalized state invariant violated: rotated state is not Hermitian");
  const Matrix sym = 0.5 * (rotated + rotated.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym,
                                               Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < psd_floor)
    throw std::runtime_error(
        "generalized state invariant violated: rotated state has eigenvalue " +
        std::to_string(solver.eigenvalues().minCoeff()));
}

PseudoStatePair pseudo_ground_excited(const PTParams& p) {
  const PTEigensystem eig = pt_eigensystem(p);
  PseudoStatePair out;
  out.ground.mat = eig.right_vectors.col(0) * eig.left_covectors.row(0);
  out.excited.mat = eig.right_vectors.col(1) * eig.left_covectors.row(1);
  return out;
}

PseudoLadder pseudo_ladder_ops(const PTParams& p) {
  const PTEigensystem eig = pt_eigensystem(p);
  PseudoLadder out;
  out.plus = eig.right_vectors.col(1) * eig.left_covectors.row(0);
  out.minus = eig.right_vectors.col(0) * eig.left_covectors.row(1);
  return out;
}

Matrix generalized_pauli(const PTParams& p, PauliAxis axis) {
  const Metric m = build_metric(p);
  switch (axis) {
    case PauliAxis::x:
      return sigma_x() * m.eta;
    case PauliAxis::y:
      return sigma_y() * m.eta;
    case PauliAxis::z:
      return sigma_z() * m.eta;
  }
  throw std::invalid_argument("generalized_pauli: bad axis");
}

Complex cpt_inner_product(const PTParams& p, int m_idx, int n_idx) {
  if (m_idx < 1 || m_idx > 2 || n_idx < 1 || n_idx > 2)
    throw std::invalid_argument("cpt_inner_product: indices must be in {1, 2}");
  const PTEigensystem eig = pt_eigensystem(p);
  const Metric metric = build_metric(p);
  const Matrix parity = sigma_x();

  // Apply T, then P, then C = P eta.
  ComplexVector v = eig.right_vectors.col(m_idx - 1);
  v = v.conjugate().eval();
  v = (parity * v).eval();
  v = (parity * (metric.eta * v)).eval();
  return (v.transpose() * eig.right_vectors.col(n_idx - 1))(0, 0);
}

}  // namespace ptsym
