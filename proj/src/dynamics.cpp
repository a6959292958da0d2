#include "ptsym/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptsym {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_model_consistency(const CompositeModel& m) {
  if (hermiticity_defect(m.h_rotated) > tol::construction)
    throw std::runtime_error("composite model: rotated Hamiltonian is not Hermitian");
  if (!m.h_pseudo) return;
  const Matrix lift_g = kron(m.system_metric.g_mat,
                             Matrix::Identity(m.dim_bath, m.dim_bath));
  const Matrix lift_g_inv = kron(m.system_metric.g_inv,
                                 Matrix::Identity(m.dim_bath, m.dim_bath));
  if ((lift_g * *m.h_pseudo * lift_g_inv - m.h_rotated).cwiseAbs().maxCoeff() >
      tol::identity)
    throw std::runtime_error(
        "composite model: G-rotation of h_pseudo does not reproduce h_rotated");
  if ((pseudo_adjoint(*m.h_pseudo, m.total_metric) - *m.h_pseudo)
          .cwiseAbs()
          .maxCoeff() > tol::identity)
    throw std::runtime_error(
        "composite model: h_pseudo is not eta-pseudo-Hermitian");
}

// Population of the top Fock level, summed over system indices. The bath
// marginal is frame independent (the metric acts on the system factor only),
// so the same diagonal sum is valid for both evolvers.
double top_level_population(const Matrix& total, Eigen::Index dim_system,
                            Eigen::Index dim_bath) {
  double pop = 0.0;
  for (Eigen::Index s = 0; s < dim_system; ++s)
    pop += total(s * dim_bath + dim_bath - 1, s * dim_bath + dim_bath - 1).real();
  return pop;
}

template <typename Body>
void for_each_point(Exec exec, std::size_t n, Body&& body) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(n); ++k)
      body(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < n; ++k) body(k);
  }
}

struct PointChecks {
  const CompositeModel* model;
  void operator()(GeneralizedDensityMatrix& state) const {
    const double drift = std::abs(state.mat.trace() - Complex(1.0, 0.0));
    if (drift > tol::equivalence)
      throw std::runtime_error("trace drift " + std::to_string(drift) +
                               " beyond 1e-8 (matrix exponential inaccuracy)");
    validate_generalized_state(state, model->system_metric, tol::identity);
  }
};

Trajectory finish_trajectory(Trajectory traj, const std::vector<double>& tops,
                             const std::vector<std::string>& errors) {
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  for (double p : tops)
    traj.max_top_level_population = std::max(traj.max_top_level_population, p);
  traj.truncation_warning =
      traj.max_top_level_population >= kTruncationWarnLevel;
  return traj;
}

}  // namespace

BosonicOps bosonic_ops(Eigen::Index dim) {
  if (dim < 2) throw std::invalid_argument("bosonic_ops: dim must be >= 2");
  BosonicOps ops;
  ops.a = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n)
    ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.a_dag = ops.a.adjoint();
  ops.number = ops.a_dag * ops.a;
  return ops;
}

Matrix thermal_state(const BathSpec& b) {
  if (b.dim < 2) throw std::invalid_argument("thermal_state: dim must be >= 2");
  if (!(b.temperature > 0.0))
    throw std::invalid_argument("thermal_state: temperature must be > 0");
  if (!(b.omega_c > 0.0))
    throw std::invalid_argument("thermal_state: omega_c must be > 0");

  RealVector weights(b.dim);
  for (Eigen::Index n = 0; n < b.dim; ++n)
    weights(n) = std::exp(-b.omega_c * static_cast<double>(n) / b.temperature);
  weights /= weights.sum();
  Matrix rho = Matrix::Zero(b.dim, b.dim);
  for (Eigen::Index n = 0; n < b.dim; ++n) rho(n, n) = weights(n);
  return rho;
}

CompositeModel build_single_pt_model(const PTParams& p, const BathSpec& b,
                                     double g) {
  const Matrix h = build_pt_hamiltonian(p);
  const Metric metric = build_metric(p);
  const PseudoLadder ladder = pseudo_ladder_ops(p);
  const BosonicOps bos = bosonic_ops(b.dim);
  const Matrix h_bath = b.omega_c * bos.number;
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix ib = Matrix::Identity(b.dim, b.dim);

  CompositeModel m;
  m.n_systems = 1;
  m.dim_system = 2;
  m.dim_bath = b.dim;
  m.site_metric = metric;
  m.system_metric = metric;
  m.total_metric = lift_metric_with_bath(metric, b.dim);
  m.bath_state = thermal_state(b);

  m.h_pseudo = kron(h, ib) + kron(i2, h_bath) +
               g * (kron(ladder.plus, bos.a) + kron(ladder.minus, bos.a_dag));

  // The rotated frame is assembled from its own closed forms rather than by
  // conjugating h_pseudo; the similarity is then a checkable invariant.
  const Matrix plus_rot = metric.g_mat * ladder.plus * metric.g_inv;
  const Matrix minus_rot = metric.g_mat * ladder.minus * metric.g_inv;
  m.h_rotated = kron(hermitian_equivalent(p), ib) + kron(i2, h_bath) +
                g * (kron(plus_rot, bos.a) + kron(minus_rot, bos.a_dag));

  check_model_consistency(m);
  return m;
}

CompositeModel build_single_hermitian_model(double omega_0, const BathSpec& b,
                                            double g) {
  const BosonicOps bos = bosonic_ops(b.dim);
  const Matrix h_bath = b.omega_c * bos.number;
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix ib = Matrix::Identity(b.dim, b.dim);
  const Matrix raise = 0.5 * (sigma_x() + kI * sigma_y());
  const Matrix lower = 0.5 * (sigma_x() - kI * sigma_y());

  CompositeModel m;
  m.n_systems = 1;
  m.dim_system = 2;
  m.dim_bath = b.dim;
  m.site_metric = identity_metric(2);
  m.system_metric = identity_metric(2);
  m.total_metric = identity_metric(2 * b.dim);
  m.bath_state = thermal_state(b);
  m.h_rotated = kron(omega_0 * sigma_z(), ib) + kron(i2, h_bath) +
                g * (kron(raise, bos.a) + kron(lower, bos.a_dag));

  check_model_consistency(m);
  return m;
}

CompositeModel build_two_pt_model(const PTParams& p, const BathSpec& b,
                                  double g, double j) {
  const Matrix h = build_pt_hamiltonian(p);
  const Metric metric = build_metric(p);
  const PseudoLadder ladder = pseudo_ladder_ops(p);
  const Matrix z_pseudo = generalized_pauli(p, PauliAxis::z);
  const BosonicOps bos = bosonic_ops(b.dim);
  const Matrix h_bath = b.omega_c * bos.number;
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix i4 = Matrix::Identity(4, 4);
  const Matrix ib = Matrix::Identity(b.dim, b.dim);

  CompositeModel m;
  m.n_systems = 2;
  m.dim_system = 4;
  m.dim_bath = b.dim;
  m.site_metric = metric;
  m.system_metric = lift_metric(metric, 2);
  m.total_metric = lift_metric_with_bath(m.system_metric, b.dim);
  m.bath_state = thermal_state(b);

  const Matrix plus_coll = kron(ladder.plus, i2) + kron(i2, ladder.plus);
  const Matrix minus_coll = kron(ladder.minus, i2) + kron(i2, ladder.minus);
  m.h_pseudo = kron(kron(h, i2) + kron(i2, h) + j * kron(z_pseudo, z_pseudo), ib) +
               kron(i4, h_bath) +
               g * (kron(plus_coll, bos.a) + kron(minus_coll, bos.a_dag));

  const Matrix h_rot = hermitian_equivalent(p);
  const Matrix z_rot = metric.g_mat * sigma_z() * metric.g_mat;
  const Matrix plus_rot = metric.g_mat * ladder.plus * metric.g_inv;
  const Matrix minus_rot = metric.g_mat * ladder.minus * metric.g_inv;
  const Matrix plus_rot_coll = kron(plus_rot, i2) + kron(i2, plus_rot);
  const Matrix minus_rot_coll = kron(minus_rot, i2) + kron(i2, minus_rot);
  m.h_rotated =
      kron(kron(h_rot, i2) + kron(i2, h_rot) + j * kron(z_rot, z_rot), ib) +
      kron(i4, h_bath) +
      g * (kron(plus_rot_coll, bos.a) + kron(minus_rot_coll, bos.a_dag));

  check_model_consistency(m);
  return m;
}

CompositeModel build_two_hermitian_model(double omega_0, const BathSpec& b,
                                         double g, double j) {
  const BosonicOps bos = bosonic_ops(b.dim);
  const Matrix h_bath = b.omega_c * bos.number;
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix i4 = Matrix::Identity(4, 4);
  const Matrix ib = Matrix::Identity(b.dim, b.dim);
  const Matrix raise = 0.5 * (sigma_x() + kI * sigma_y());
  const Matrix lower = 0.5 * (sigma_x() - kI * sigma_y());

  CompositeModel m;
  m.n_systems = 2;
  m.dim_system = 4;
  m.dim_bath = b.dim;
  m.site_metric = identity_metric(2);
  m.system_metric = identity_metric(4);
  m.total_metric = identity_metric(4 * b.dim);
  m.bath_state = thermal_state(b);

  const Matrix raise_coll = kron(raise, i2) + kron(i2, raise);
  const Matrix lower_coll = kron(lower, i2) + kron(i2, lower);
  m.h_rotated = kron(omega_0 * (kron(sigma_z(), i2) + kron(i2, sigma_z())) +
                         j * kron(sigma_z(), sigma_z()),
                     ib) +
                kron(i4, h_bath) +
                g * (kron(raise_coll, bos.a) + kron(lower_coll, bos.a_dag));

  check_model_consistency(m);
  return m;
}

std::vector<double> uniform_grid(double t_max, int steps) {
  if (!(t_max > 0.0)) throw std::invalid_argument("uniform_grid: t_max must be > 0");
  if (steps < 2) throw std::invalid_argument("uniform_grid: steps must be >= 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k)
    grid[static_cast<std::size_t>(k)] =
        t_max * static_cast<double>(k) / static_cast<double>(steps - 1);
  return grid;
}

Trajectory evolve_pseudo(const CompositeModel& m,
                         const GeneralizedDensityMatrix& rho0,
                         const std::vector<double>& times, Exec exec) {
  if (!m.h_pseudo)
    throw std::invalid_argument(
        "evolve_pseudo: model has no pseudo-frame Hamiltonian");
  if (rho0.dim() != m.dim_system)
    throw std::invalid_argument("evolve_pseudo: state dimension mismatch");

  const Matrix& h = *m.h_pseudo;
  const Matrix total0 = kron(rho0.mat, m.bath_state);
  const PointChecks checks{&m};

  Trajectory traj;
  traj.times = times;
  traj.states.resize(times.size());
  std::vector<double> tops(times.size(), 0.0);
  std::vector<std::string> errors(times.size());

  for_each_point(exec, times.size(), [&](std::size_t k) {
    try {
      const double t = times[k];
      const Matrix u = matrix_exponential(-kI * t * h);
      const Matrix u_pseudo_adj = matrix_exponential(kI * t * h);  // U^ddag
      const Matrix total = u * total0 * u_pseudo_adj;
      traj.states[k].mat = partial_trace_bath(total, m.dim_system, m.dim_bath);
      checks(traj.states[k]);
      tops[k] = top_level_population(total, m.dim_system, m.dim_bath);
    } catch (const std::exception& e) {
      errors[k] = std::string("evolve_pseudo at t=") + std::to_string(times[k]) +
                  ": " + e.what();
    }
  });
  return finish_trajectory(std::move(traj), tops, errors);
}

Trajectory evolve_rotated(const CompositeModel& m,
                          const GeneralizedDensityMatrix& rho0,
                          const std::vector<double>& times, Exec exec) {
  if (rho0.dim() != m.dim_system)
    throw std::invalid_argument("evolve_rotated: state dimension mismatch");

  // One shared eigendecomposition; every grid point reuses it.
  const HermitianEigensystem eig = hermitian_eigensystem(m.h_rotated);
  const Matrix rotated0 =
      m.system_metric.g_mat * rho0.mat * m.system_metric.g_inv;
  const Matrix total0 = kron(rotated0, m.bath_state);
  const PointChecks checks{&m};

  Trajectory traj;
  traj.times = times;
  traj.states.resize(times.size());
  std::vector<double> tops(times.size(), 0.0);
  std::vector<std::string> errors(times.size());

  for_each_point(exec, times.size(), [&](std::size_t k) {
    try {
      const double t = times[k];
      ComplexVector phases(eig.values.size());
      for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        phases(i) = std::exp(-kI * (eig.values(i) * t));
      const Matrix u = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
      const Matrix total = u * total0 * u.adjoint();
      const Matrix reduced_rot =
          partial_trace_bath(total, m.dim_system, m.dim_bath);
      traj.states[k].mat =
          m.system_metric.g_inv * reduced_rot * m.system_metric.g_mat;
      checks(traj.states[k]);
      tops[k] = top_level_population(total, m.dim_system, m.dim_bath);
    } catch (const std::exception& e) {
      errors[k] = std::string("evolve_rotated at t=") + std::to_string(times[k]) +
                  ": " + e.what();
    }
  });
  return finish_trajectory(std::move(traj), tops, errors);
}

double improper_rho_trace(const GeneralizedDensityMatrix& rho_g,
                          const Metric& m) {
  if (rho_g.dim() != m.eta_inv.rows())
    throw std::invalid_argument("improper_rho_trace: dimension mismatch");
  const Complex tr = (rho_g.mat * m.eta_inv).trace();
  if (std::abs(tr.imag()) > tol::identity)
    throw std::runtime_error("improper_rho_trace: imaginary trace " +
                             std::to_string(tr.imag()));
  return tr.real();
}

}  // namespace ptsym
