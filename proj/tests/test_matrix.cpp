#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptsym/matrix.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace ptsym;
using testing::max_abs_diff;

namespace {
const Complex kI{0.0, 1.0};

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
}  // namespace

TEST_CASE("make_matrix rejects bad input") {
  CHECK_THROWS_AS(make_matrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(make_matrix(1, 2, {Complex(nan, 0.0), 1.0}),
                  std::invalid_argument);
  const Matrix m = make_matrix(2, 2, {1.0, 2.0, 3.0, 4.0});
  CHECK(m(1, 0) == Complex(3.0, 0.0));
}

TEST_CASE("kron identity and diagonal cases") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(i2, i2), Matrix::Identity(4, 4)) == 0.0);

  Matrix d12(2, 2), d13(2, 2);
  d12 << 1, 0, 0, 2;
  d13 << 1, 0, 0, 3;
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = 1;
  expect(1, 1) = 3;
  expect(2, 2) = 2;
  expect(3, 3) = 6;
  CHECK(max_abs_diff(kron(d12, d13), expect) == 0.0);
}

TEST_CASE("kron permutes basis vectors") {
  ComplexVector e0(2), e1(2);
  e0 << 1, 0;
  e1 << 0, 1;
  const Matrix op = kron(pauli_x(), pauli_x());
  const ComplexVector in = kron(Matrix(e0), Matrix(e0));
  const ComplexVector expect = kron(Matrix(e1), Matrix(e1));
  CHECK((op * in - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron associativity on random matrices") {
  std::mt19937 rng(7101);
  for (int it = 0; it < 25; ++it) {
    const Matrix a = testing::random_complex(rng, 2, 3);
    const Matrix b = testing::random_complex(rng, 3, 2);
    const Matrix c = testing::random_complex(rng, 2, 2);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-14);
  }
}

TEST_CASE("matrix_exponential of zero is the identity") {
  CHECK(max_abs_diff(matrix_exponential(Matrix::Zero(3, 3)),
                     Matrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("matrix_exponential of a diagonal exponent") {
  Matrix sz(2, 2);
  sz << 1, 0, 0, -1;
  const double t = 0.7318;
  const Matrix u = matrix_exponential(-kI * t * sz);
  Matrix expect(2, 2);
  expect << std::exp(-kI * t), 0, 0, std::exp(kI * t);
  CHECK(max_abs_diff(u, expect) <= 1e-14);
}

TEST_CASE("matrix_exponential truncates nilpotent series") {
  Matrix n(2, 2);
  n << 0, 1, 0, 0;
  Matrix expect(2, 2);
  expect << 1, 1, 0, 1;
  CHECK(max_abs_diff(matrix_exponential(n), expect) <= 1e-15);
}

TEST_CASE("matrix_exponential rejects non-square input") {
  CHECK_THROWS_AS(matrix_exponential(Matrix::Zero(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("Pade path agrees with the spectral oracle for i*Hermitian") {
  std::mt19937 rng(20233);
  for (int it = 0; it < 20; ++it) {
    const Matrix a = testing::random_hermitian(rng, 6);
    // i*a is anti-Hermitian, so this exercises the Pade path.
    const Matrix via_pade = matrix_exponential(kI * a);
    const HermitianEigensystem eig = hermitian_eigensystem(a);
    ComplexVector phases(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
      phases(i) = std::exp(kI * eig.values(i));
    const Matrix via_spectrum =
        eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
    CHECK(max_abs_diff(via_pade, via_spectrum) <= 1e-10);
  }
}

TEST_CASE("matrix_exponential holds accuracy at norms near 1e3") {
  std::mt19937 rng(5150);
  Matrix a = testing::random_hermitian(rng, 8);
  a *= 800.0 / a.cwiseAbs().colwise().sum().maxCoeff();
  const Matrix via_pade = matrix_exponential(kI * a);
  const HermitianEigensystem eig = hermitian_eigensystem(a);
  ComplexVector phases(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    phases(i) = std::exp(kI * eig.values(i));
  const Matrix via_spectrum =
      eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  CHECK(max_abs_diff(via_pade, via_spectrum) <= 1e-10);
}

TEST_CASE("matrix_exponential similarity invariance") {
  std::mt19937 rng(90125);
  for (int it = 0; it < 10; ++it) {
    const Matrix a = testing::random_complex(rng, 5, 5);
    Matrix s = testing::random_complex(rng, 5, 5);
    s += 3.0 * Matrix::Identity(5, 5);  // keep S comfortably invertible
    const Matrix s_inv = s.partialPivLu().inverse();
    const RealVector sv = singular_values(s);
    const double cond = sv(0) / sv(sv.size() - 1);
    const Matrix lhs = matrix_exponential(s * a * s_inv);
    const Matrix rhs = s * matrix_exponential(a) * s_inv;
    CHECK(max_abs_diff(lhs, rhs) <= 1e-8 * cond);
  }
}

TEST_CASE("hermitian_eigensystem on Pauli matrices") {
  Matrix sz(2, 2);
  sz << 1, 0, 0, -1;
  const HermitianEigensystem ez = hermitian_eigensystem(sz);
  CHECK(ez.values(0) == doctest::Approx(-1.0));
  CHECK(ez.values(1) == doctest::Approx(1.0));

  const HermitianEigensystem ex = hermitian_eigensystem(pauli_x());
  CHECK(ex.values(0) == doctest::Approx(-1.0));
  CHECK(ex.values(1) == doctest::Approx(1.0));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexVector minus(2), plus(2);
  minus << inv_sqrt2, -inv_sqrt2;
  plus << inv_sqrt2, inv_sqrt2;
  CHECK((ex.vectors.col(0) - minus).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((ex.vectors.col(1) - plus).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("hermitian_eigensystem matches the quadratic-formula oracle for H'") {
  // H' at r=0.1, s=0.4, psi=pi/6 is [[a, b], [b, a]] with the values below.
  const double a = 0.1 * std::cos(M_PI / 6.0);
  const double b = std::sqrt(0.4 * 0.4 - 0.01 * std::sin(M_PI / 6.0) *
                                             std::sin(M_PI / 6.0));
  Matrix hp(2, 2);
  hp << a, b, b, a;
  // Roots of lambda^2 - 2a lambda + (a^2 - b^2), computed independently.
  const double oracle_e1 = a - std::sqrt(a * a - (a * a - b * b));
  const double oracle_e2 = a + std::sqrt(b * b);
  CHECK(oracle_e1 == doctest::Approx(-0.3102601562812448).epsilon(1e-12));
  CHECK(oracle_e2 == doctest::Approx(0.4834652370381325).epsilon(1e-12));

  const HermitianEigensystem eig = hermitian_eigensystem(hp);
  CHECK(eig.values(0) == doctest::Approx(oracle_e1).epsilon(1e-12));
  CHECK(eig.values(1) == doctest::Approx(oracle_e2).epsilon(1e-12));
}

TEST_CASE("hermitian_eigensystem rejects non-Hermitian input") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eigensystem(m), std::invalid_argument);
}

TEST_CASE("hermitian_eigensystem returns a unitary diagonalizer") {
  std::mt19937 rng(333);
  for (int it = 0; it < 20; ++it) {
    const Matrix a = testing::random_hermitian(rng, 7);
    const HermitianEigensystem eig = hermitian_eigensystem(a);
    CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors,
                       Matrix::Identity(7, 7)) <= 1e-10);
    RealVector lam = eig.values;
    CHECK(max_abs_diff(a * eig.vectors,
                       eig.vectors * lam.asDiagonal().toDenseMatrix()
                                         .cast<Complex>()) <= 1e-10);
    for (Eigen::Index i = 0; i + 1 < lam.size(); ++i)
      CHECK(lam(i) <= lam(i + 1));
  }
}

TEST_CASE("general_eigenvalues basic spectra") {
  Matrix d(2, 2);
  d << 1, 0, 0, Complex(2, 3);
  const ComplexVector ev = general_eigenvalues(d);
  CHECK(std::abs(ev(0) - Complex(1, 0)) <= 1e-14);
  CHECK(std::abs(ev(1) - Complex(2, 3)) <= 1e-14);

  Matrix n(2, 2);
  n << 0, 1, 0, 0;
  const ComplexVector ev2 = general_eigenvalues(n);
  CHECK(std::abs(ev2(0)) <= 1e-10);
  CHECK(std::abs(ev2(1)) <= 1e-10);
}

TEST_CASE("general_eigenvalues reproduces the closed-form PT spectrum") {
  const double r = 0.1, s = 0.4, psi = M_PI / 6.0;
  Matrix h(2, 2);
  h << r * std::exp(kI * psi), s, s, r * std::exp(-kI * psi);
  // Closed form: r cos psi -+ sqrt(s^2 - r^2 sin^2 psi).
  const double root = std::sqrt(s * s - r * r * std::sin(psi) * std::sin(psi));
  const double e1 = r * std::cos(psi) - root;
  const double e2 = r * std::cos(psi) + root;

  const ComplexVector ev = general_eigenvalues(h);
  CHECK(std::abs(ev(0) - Complex(e1, 0)) <= 1e-12);
  CHECK(std::abs(ev(1) - Complex(e2, 0)) <= 1e-12);
  CHECK(e1 == doctest::Approx(-0.3102601562812448).epsilon(1e-12));
  CHECK(e2 == doctest::Approx(0.4834652370381325).epsilon(1e-12));
}

TEST_CASE("matrix_sqrt_psd examples") {
  CHECK(max_abs_diff(matrix_sqrt_psd(Matrix::Identity(3, 3)),
                     Matrix::Identity(3, 3)) <= 1e-14);

  Matrix d(2, 2);
  d << 4, 0, 0, 9;
  Matrix expect(2, 2);
  expect << 2, 0, 0, 3;
  CHECK(max_abs_diff(matrix_sqrt_psd(d), expect) <= 1e-12);

  Matrix proj(2, 2);
  proj << 0.5, 0.5, 0.5, 0.5;  // |+x><+x|
  CHECK(max_abs_diff(matrix_sqrt_psd(proj), proj) <= 1e-12);
}

TEST_CASE("matrix_sqrt_psd squares back on random PSD matrices") {
  std::mt19937 rng(777);
  for (Eigen::Index n : {2, 5, 17, 40}) {
    const Matrix a = testing::random_psd(rng, n);
    const Matrix s = matrix_sqrt_psd(a);
    CHECK(max_abs_diff(s * s, a) <= 1e-10 * std::max(1.0, a.norm()));
    CHECK(hermiticity_defect(s) <= 1e-12);
  }
}

TEST_CASE("matrix_sqrt_psd rejects indefinite input") {
  Matrix m(2, 2);
  m << 1, 0, 0, -1e-6;
  CHECK_THROWS_AS(matrix_sqrt_psd(m), std::invalid_argument);
}

TEST_CASE("partial_trace_bath examples") {
  std::mt19937 rng(404);
  const Matrix rho = testing::random_density(rng, 2);
  const Matrix sigma = testing::random_density(rng, 5);
  CHECK(max_abs_diff(partial_trace_bath(kron(rho, sigma), 2, 5), rho) <= 1e-14);

  CHECK(max_abs_diff(
            partial_trace_bath(kron(Matrix::Identity(2, 2),
                                    Matrix::Identity(3, 3)),
                               2, 3),
            3.0 * Matrix::Identity(2, 2)) == 0.0);

  ComplexVector bell(4);
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  const Matrix bell_proj = Matrix(bell) * Matrix(bell).adjoint();
  CHECK(max_abs_diff(partial_trace_bath(bell_proj, 2, 2),
                     0.5 * Matrix::Identity(2, 2)) <= 1e-15);
}

TEST_CASE("partial_trace_bath is linear and trace preserving") {
  std::mt19937 rng(808);
  for (int it = 0; it < 10; ++it) {
    const Matrix m1 = testing::random_complex(rng, 12, 12);
    const Matrix m2 = testing::random_complex(rng, 12, 12);
    const Complex c1(0.3, -1.1), c2(-0.8, 0.2);
    CHECK(max_abs_diff(partial_trace_bath(c1 * m1 + c2 * m2, 3, 4),
                       c1 * partial_trace_bath(m1, 3, 4) +
                           c2 * partial_trace_bath(m2, 3, 4)) <= 1e-13);
    CHECK(std::abs(partial_trace_bath(m1, 3, 4).trace() - m1.trace()) <= 1e-12);
  }
  CHECK_THROWS_AS(partial_trace_bath(Matrix::Zero(6, 6), 2, 4),
                  std::invalid_argument);
}

TEST_CASE("singular_values examples") {
  const RealVector sx = singular_values(pauli_x());
  CHECK(sx(0) == doctest::Approx(1.0));
  CHECK(sx(1) == doctest::Approx(1.0));

  Matrix d(2, 2);
  d << 3, 0, 0, Complex(0, -4);
  const RealVector sd = singular_values(d);
  CHECK(sd(0) == doctest::Approx(4.0));
  CHECK(sd(1) == doctest::Approx(3.0));

  const RealVector sz = singular_values(Matrix::Zero(2, 2));
  CHECK(sz(0) == 0.0);
  CHECK(sz(1) == 0.0);
}
