#ifndef PTSYM_PT_SYSTEM_HPP
#define PTSYM_PT_SYSTEM_HPP

#include "ptsym/matrix.hpp"

#include <array>
#include <utility>

namespace ptsym {

Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();

/// Parameters of the two-level PT-symmetric Hamiltonian
/// [[r e^{i psi}, s e^{i phi}], [s e^{-i phi}, r e^{-i psi}]].
struct PTParams {
  double r = 0.1;
  double s = 0.4;
  double psi = 0.0;
  double phi = 0.0;  // eigensystem/metric path requires phi == 0
};

/// Unbroken-PT condition s^2 > r^2 sin^2(psi), strictly, with a 1e-9 margin
/// away from the exceptional point where the metric diverges.
bool unbroken(const PTParams& p);
void require_unbroken(const PTParams& p);

/// The non-Hermitian Hamiltonian itself. Rejects broken-PT parameters.
Matrix build_pt_hamiltonian(const PTParams& p);

struct PTEigensystem {
  double alpha = 0.0;                   // sin(alpha) = (r/s) sin(psi)
  std::array<double, 2> energies{};     // ascending, both real
  Matrix right_vectors;                 // columns |E1>, |E2>
  Matrix left_covectors;                // rows <<E1|, <<E2|
};

/// Normalized right eigenvectors and left covectors, <<Em|En> = delta_mn.
PTEigensystem pt_eigensystem(const PTParams& p);

/// Metric eta, its Hermitian square root G, and inverses. Valid for any
/// dimension; lift helpers below build the multi-factor versions.
struct Metric {
  Matrix eta;
  Matrix eta_inv;
  Matrix g_mat;
  Matrix g_inv;
};

Metric build_metric(const PTParams& p);
Metric identity_metric(Eigen::Index dim);

/// Per-factor Kronecker lift: eta -> eta (x) eta (x) ... (n_systems copies).
Metric lift_metric(const Metric& site, int n_systems);
/// Append an identity bath factor: eta -> eta (x) I_bath.
Metric lift_metric_with_bath(const Metric& system, Eigen::Index dim_bath);

/// eta-pseudo adjoint  A^ddag = eta^{-1} A^dag eta. Metric dims must match a.
Matrix pseudo_adjoint(const Matrix& a, const Metric& m);

/// Hermitian equivalent H' = G H G^{-1}: diagonal r cos(psi), off-diagonal
/// s cos(alpha); same spectrum as H.
Matrix hermitian_equivalent(const PTParams& p);

/// Trace-one state of the eta-pseudo inner-product space (rho_G = rho eta).
struct GeneralizedDensityMatrix {
  Matrix mat;
  Eigen::Index dim() const { return mat.rows(); }
};

/// Checks Tr = 1 and that the frame-rotated G rho_G G^{-1} is Hermitian PSD.
/// Throws with a diagnostic on violation.
void validate_generalized_state(const GeneralizedDensityMatrix& state,
                                const Metric& lifted,
                                double trace_tol = tol::identity,
                                double psd_floor = -1e-9);

struct PseudoStatePair {
  GeneralizedDensityMatrix ground;   // |E1><<E1|
  GeneralizedDensityMatrix excited;  // |E2><<E2|
};

PseudoStatePair pseudo_ground_excited(const PTParams& p);

struct PseudoLadder {
  Matrix plus;   // |E2><<E1|
  Matrix minus;  // |E1><<E2|
};

/// System ladder operators of the eta-pseudo space; pseudo-adjoints of each other.
PseudoLadder pseudo_ladder_ops(const PTParams& p);

enum class PauliAxis { x, y, z };

/// Pauli operator elevated to the eta-pseudo space: sigma^k * eta.
Matrix generalized_pauli(const PTParams& p, PauliAxis axis);

/// (C P T |E_m>)^T |E_n> with C = P eta, T = complex conjugation. Indices in {1, 2}.
Complex cpt_inner_product(const PTParams& p, int m_idx, int n_idx);

}  // namespace ptsym

#endif
