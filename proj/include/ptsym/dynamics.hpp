#ifndef PTSYM_DYNAMICS_HPP
#define PTSYM_DYNAMICS_HPP

#include "ptsym/pt_system.hpp"

#include <optional>
#include <vector>

namespace ptsym {

/// Single bosonic mode truncated to `dim` Fock levels.
struct BathSpec {
  double omega_c = 2.0;
  Eigen::Index dim = 10;
  double temperature = 10.0;
};

struct BosonicOps {
  Matrix a;       // annihilation, a|n> = sqrt(n)|n-1>
  Matrix a_dag;
  Matrix number;  // a_dag * a
};

BosonicOps bosonic_ops(Eigen::Index dim);

/// Gibbs state exp(-H_B/T)/Tr on the truncated ladder, H_B = omega_c a^dag a.
Matrix thermal_state(const BathSpec& b);

/// Composite system+bath model in both frames. h_pseudo is absent for
/// Hermitian-system models. Tensor ordering is fixed: system factors left,
/// bath right.
struct CompositeModel {
  std::optional<Matrix> h_pseudo;  // eta-pseudo-Hermitian frame
  Matrix h_rotated;                // Hermitian frame, drives unitary evolution
  int n_systems = 1;
  Metric site_metric;    // one 2x2 factor (identity for Hermitian models)
  Metric system_metric;  // lifted over all system factors
  Metric total_metric;   // system_metric (x) I_bath
  Eigen::Index dim_system = 2;
  Eigen::Index dim_bath = 0;
  Matrix bath_state;  // rho_B(0)
};

/// H_tilde_U = H (x) I_B + I (x) omega_c a^dag a + g(sigma+_G (x) a + sigma-_G (x) a^dag)
/// plus its G-rotated Hermitian form, built independently and cross-checked.
CompositeModel build_single_pt_model(const PTParams& p, const BathSpec& b,
                                     double g);

/// H_U^0 = omega_0 sigma_z (x) I_B + I (x) H_B + g(sigma+ (x) a + sigma- (x) a^dag).
CompositeModel build_single_hermitian_model(double omega_0, const BathSpec& b,
                                            double g);

/// Two PT systems with sigma_G^z - sigma_G^z coupling j and a collective
/// Jaynes-Cummings coupling g to one mode.
CompositeModel build_two_pt_model(const PTParams& p, const BathSpec& b,
                                  double g, double j);

/// Hermitian two-qubit counterpart with sigma_z - sigma_z coupling.
CompositeModel build_two_hermitian_model(double omega_0, const BathSpec& b,
                                         double g, double j);

enum class Exec { serial, parallel };

struct Trajectory {
  std::vector<double> times;
  std::vector<GeneralizedDensityMatrix> states;
  // Largest population seen in the top Fock level of the bath; above
  // 1e-3 the truncation is suspect and the warning flag is raised.
  double max_top_level_population = 0.0;
  bool truncation_warning = false;
};

inline constexpr double kTruncationWarnLevel = 1e-3;

/// Uniform grid of `steps` points on [0, t_max], endpoints included.
std::vector<double> uniform_grid(double t_max, int steps);

/// Prescription A: rho_G(t) = Tr_B[ e^{-i H t} (rho_G (x) rho_B) e^{+i H t} ]
/// with H = h_pseudo. Fresh Pade exponentials per grid point; kept as the
/// independent cross-check of evolve_rotated.
Trajectory evolve_pseudo(const CompositeModel& m,
                         const GeneralizedDensityMatrix& rho0,
                         const std::vector<double>& times,
                         Exec exec = Exec::serial);

/// Prescription B (default path): rotate to the Hermitian frame, evolve
/// unitarily via one shared eigendecomposition, trace out, rotate back.
Trajectory evolve_rotated(const CompositeModel& m,
                          const GeneralizedDensityMatrix& rho0,
                          const std::vector<double>& times,
                          Exec exec = Exec::serial);

/// Tr(rho_G eta^{-1}), the trace of the improper rho. Imaginary part beyond
/// 1e-10 is an error. Metric must be lifted to the state's dimension.
double improper_rho_trace(const GeneralizedDensityMatrix& rho_g,
                          const Metric& m);

}  // namespace ptsym

#endif
