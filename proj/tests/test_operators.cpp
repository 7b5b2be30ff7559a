#include <doctest.h>

#include <random>

#include "lvr/errors.hpp"
#include "lvr/fuss_catalan.hpp"
#include "lvr/operators.hpp"

using namespace lvr;

namespace {

Matrix random_complex(int n, unsigned seed, double scale = 1.0) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::complex<double>(g(rng), g(rng));
  return m;
}

Matrix random_hermitian(int n, unsigned seed) {
  Matrix g = random_complex(n, seed);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("matrix_A basics") {
  Matrix x = random_complex(3, 1, 0.5);
  Matrix X = x * x.adjoint();
  CHECK((matrix_A(X, 0.0, 2) - X).norm() < 1e-14);

  // scalar reduction on the identity: A = T_2(-lambda/N) * I
  Matrix I3 = Matrix::Identity(3, 3);
  Matrix a = matrix_A(I3, 0.03, 2);
  std::complex<double> expected = tp_series_eval(2, -0.01, 60).value;
  CHECK((a - expected * I3).norm() < 1e-12);

  CHECK_THROWS_AS(matrix_A(random_complex(3, 2), 0.1, 2), DomainError);  // not Hermitian
  CHECK_THROWS_AS(matrix_A(X, 0.1, 1), DomainError);
}

TEST_CASE("matrix_A reduces to the scalar branch on eigenvalues") {
  const int n = 4, p = 3;
  const double lambda = 0.05;
  Matrix g = random_complex(n, 3, 0.6);
  Matrix X = g * g.adjoint();
  Matrix A = matrix_A(X, lambda, p);

  Eigen::SelfAdjointEigenSolver<Matrix> es(X);
  Matrix expected = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    std::complex<double> z = -lambda / std::pow(double(n), p - 1) * std::pow(x, p - 1);
    expected += x * tp_eval(p, z) *
                (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
  }
  CHECK((A - expected).norm() < 1e-10);
  // A solves (lambda/N^{p-1}) A^p + A = X on the analytic branch
  Matrix residual = lambda / std::pow(double(n), p - 1) * A * A * A + A - X;
  CHECK(residual.norm() < 1e-9);
  // Hermitian for real lambda
  CHECK((A - A.adjoint()).norm() < 1e-10);
}

TEST_CASE("sigma and resolvent at degenerate points") {
  // M = 0: Sigma = 0 and R = identity for p >= 2
  Matrix zero = Matrix::Zero(3, 3);
  auto sr = sigma_and_resolvent(zero, 0.1, 2);
  CHECK(sr.sigma.norm() < 1e-14);
  CHECK((sr.resolvent - Matrix::Identity(9, 9)).norm() < 1e-12);

  // p=2, M = I (N=2): Sigma is a scalar multiple of the identity
  Matrix I2 = Matrix::Identity(2, 2);
  auto sr2 = sigma_and_resolvent(I2, 0.1, 2);
  std::complex<double> a = tp_series_eval(2, -0.05, 60).value;
  std::complex<double> factor = 0.05 * 2.0 * a;  // (lambda/N) * (A ox 1 + 1 ox A) on scalars
  CHECK((sr2.sigma - factor * Matrix::Identity(4, 4)).norm() < 1e-12);
  CHECK(sr2.residual < 1e-10);
}

TEST_CASE("resolvent inverts 1 + sigma") {
  Matrix m = random_complex(3, 5, 0.4);
  auto sr = sigma_and_resolvent(m, 0.08, 2);
  Matrix one = Matrix::Identity(9, 9);
  CHECK(((one + sr.sigma) * sr.resolvent - one).norm() < 1e-10);
  CHECK_THROWS_AS(sigma_and_resolvent(m, std::complex<double>(-0.5, 0.0), 2), DomainError);
}

TEST_CASE("derivative identity against the resolvent") {
  // d/dX of A(X) contracted against R: central finite differences on A around
  // X = M^2 for Hermitian PSD M, relative error < 1e-6.
  const double lambda = 0.05, eps = 1e-5;
  for (int p : {2, 3}) {
    const int n = 4;
    Matrix b = random_complex(n, 17 + p, 0.3);
    Matrix m = b * b.adjoint() + Matrix::Identity(n, n);  // Hermitian PD
    Matrix X = m * m.adjoint();
    auto sr = sigma_and_resolvent(m, lambda, p);

    Matrix h = random_hermitian(n, 23 + p);
    Matrix fd = (matrix_A(X + eps * h, lambda, p) - matrix_A(X - eps * h, lambda, p)) / (2 * eps);

    Eigen::Map<const Eigen::VectorXcd> vec_h(h.data(), n * n);
    Eigen::VectorXcd predicted = sr.resolvent * vec_h;
    Eigen::Map<const Eigen::VectorXcd> vec_fd(fd.data(), n * n);
    CHECK((predicted - vec_fd).norm() / vec_fd.norm() < 1e-6);
  }
}
