#include "ptsym/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptsym {

Matrix make_matrix(Eigen::Index rows, Eigen::Index cols,
                   const std::vector<Complex>& row_major) {
  if (rows < 0 || cols < 0 ||
      static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) !=
          row_major.size()) {
    throw std::invalid_argument("make_matrix: entry count does not match rows*cols");
  }
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      out(i, j) = row_major[static_cast<std::size_t>(i * cols + j)];
  require_finite(out, "make_matrix");
  return out;
}

bool all_finite(const Matrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

void require_finite(const Matrix& a, const char* what) {
  if (!all_finite(a))
    throw std::invalid_argument(std::string(what) + ": non-finite matrix entry");
}

double hermiticity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tolerance) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tolerance;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

// Padé-13 coefficients (Higham 2005).
constexpr double kPade13[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

Matrix expm_pade13(const Matrix& a) {
  const Eigen::Index n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  Matrix x = a;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
    x *= std::pow(2.0, -squarings);
  }

  const Matrix x2 = x * x;
  const Matrix x4 = x2 * x2;
  const Matrix x6 = x2 * x4;
  const Matrix u =
      x * (x6 * (kPade13[13] * x6 + kPade13[11] * x4 + kPade13[9] * x2) +
           kPade13[7] * x6 + kPade13[5] * x4 + kPade13[3] * x2 +
           kPade13[1] * ident);
  const Matrix v =
      x6 * (kPade13[12] * x6 + kPade13[10] * x4 + kPade13[8] * x2) +
      kPade13[6] * x6 + kPade13[4] * x4 + kPade13[2] * x2 + kPade13[0] * ident;

  Matrix f = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) f = f * f;
  return f;
}

}  // namespace

Matrix matrix_exponential(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("matrix_exponential: non-square input");
  require_finite(a, "matrix_exponential");
  if (a.rows() == 0) return Matrix(0, 0);

  if (is_hermitian(a)) {
    const HermitianEigensystem eig = hermitian_eigensystem(a);
    const ComplexVector phases =
        eig.values.array().exp().matrix().cast<Complex>();
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  }
  return expm_pade13(a);
}

HermitianEigensystem hermitian_eigensystem(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eigensystem: non-square input");
  require_finite(a, "hermitian_eigensystem");
  if (!is_hermitian(a))
    throw std::invalid_argument(
        "hermitian_eigensystem: input is not Hermitian within 1e-12");

  const Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");

  HermitianEigensystem out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();

  // Deterministic phase: first nonzero component of each column real positive.
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.vectors.rows(); ++i) {
      const double mag = std::abs(out.vectors(i, j));
      if (mag > 1e-12) {
        out.vectors.col(j) *= std::conj(out.vectors(i, j)) / mag;
        break;
      }
    }
  }
  return out;
}

ComplexVector general_eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("general_eigenvalues: non-square input");
  require_finite(a, "general_eigenvalues");

  Eigen::ComplexEigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error(
        "general_eigenvalues: QR iteration did not converge");

  ComplexVector ev = solver.eigenvalues();
  std::vector<Complex> sorted(ev.data(), ev.data() + ev.size());
  std::sort(sorted.begin(), sorted.end(), [](Complex lhs, Complex rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
    return lhs.imag() < rhs.imag();
  });
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    ev(i) = sorted[static_cast<std::size_t>(i)];
  return ev;
}

Matrix matrix_sqrt_psd(const Matrix& a) {
  const HermitianEigensystem eig = hermitian_eigensystem(a);
  RealVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values(i);
    if (lambda < -1e-10)
      throw std::invalid_argument(
          "matrix_sqrt_psd: eigenvalue below -1e-10, input is not PSD");
    roots(i) = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

Matrix partial_trace_bath(const Matrix& m, Eigen::Index dim_system,
                          Eigen::Index dim_bath) {
  if (dim_system < 1 || dim_bath < 1 || m.rows() != m.cols() ||
      m.rows() != dim_system * dim_bath)
    throw std::invalid_argument("partial_trace_bath: dimension mismatch");

  Matrix out = Matrix::Zero(dim_system, dim_system);
  for (Eigen::Index i = 0; i < dim_system; ++i)
    for (Eigen::Index j = 0; j < dim_system; ++j)
      for (Eigen::Index n = 0; n < dim_bath; ++n)
        out(i, j) += m(i * dim_bath + n, j * dim_bath + n);
  return out;
}

RealVector singular_values(const Matrix& a) {
  require_finite(a, "singular_values");
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

}  // namespace ptsym
