#ifndef PTSYM_MATRIX_HPP
#define PTSYM_MATRIX_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ptsym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerance hierarchy used across the library: construction-time checks are
// tightest, algebraic identities looser, and anything that crosses a frame
// rotation plus an exponential plus a trace-out gets the loosest bound.
namespace tol {
inline constexpr double construction = 1e-12;
inline constexpr double identity = 1e-10;
inline constexpr double equivalence = 1e-8;
}  // namespace tol

/// Build a matrix from row-major entries. Rejects NaN/Inf and size mismatch.
Matrix make_matrix(Eigen::Index rows, Eigen::Index cols,
                   const std::vector<Complex>& row_major);

bool all_finite(const Matrix& a);
void require_finite(const Matrix& a, const char* what);

/// Max elementwise deviation from the conjugate transpose.
double hermiticity_defect(const Matrix& a);
bool is_hermitian(const Matrix& a, double tolerance = tol::construction);

/// Kronecker product, dims multiply, left factor is the slow index.
Matrix kron(const Matrix& a, const Matrix& b);

/// e^A for a general square complex matrix.
///
/// Scaling-and-squaring with a degree-13 Padé approximant is the general
/// path; Hermitian inputs (certified to tol::construction) take a spectral
/// fast path instead. Relative accuracy ~1e-13 for norms up to ~1e3.
Matrix matrix_exponential(const Matrix& a);

struct HermitianEigensystem {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns, first nonzero component real positive
};

/// Eigendecomposition of a Hermitian matrix (input checked to tol::construction).
HermitianEigensystem hermitian_eigensystem(const Matrix& a);

/// Full spectrum of a general square matrix, with algebraic multiplicity,
/// sorted by (real, imag) ascending.
ComplexVector general_eigenvalues(const Matrix& a);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are clipped to zero; anything below -1e-10 is an error.
Matrix matrix_sqrt_psd(const Matrix& a);

/// Trace out the bath (right tensor factor). m must be
/// (dim_system*dim_bath) square with the system as the LEFT factor.
Matrix partial_trace_bath(const Matrix& m, Eigen::Index dim_system,
                          Eigen::Index dim_bath);

/// Singular values, descending.
RealVector singular_values(const Matrix& a);

}  // namespace ptsym

#endif
