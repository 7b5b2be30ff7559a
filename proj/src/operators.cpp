#include "lvr/operators.hpp"

#include <numbers>

#include "lvr/errors.hpp"
#include "lvr/fuss_catalan.hpp"

namespace lvr {

void ensure_hermitian_psd(const Matrix& X, double tol) {
  if (X.rows() != X.cols()) throw DomainError("operand is not square");
  const double scale = 1.0 + X.norm();
  if ((X - X.adjoint()).norm() > tol * scale)
    throw DomainError("operand is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(X, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol * scale)
    throw DomainError("operand is not positive semidefinite within tolerance");
}

Matrix matrix_A(const Matrix& X, std::complex<double> lambda, int p) {
  if (p < 2) throw DomainError("matrix_A: p must be >= 2");
  ensure_hermitian_psd(X);
  const int n = static_cast<int>(X.rows());
  if (lambda == 0.0) return X;

  Eigen::SelfAdjointEigenSolver<Matrix> es(X);
  const auto& evals = es.eigenvalues();
  const Matrix& V = es.eigenvectors();

  const std::complex<double> scale = lambda / std::pow(static_cast<double>(n), p - 1);
  Eigen::VectorXcd f(n);
  for (int i = 0; i < n; ++i) {
    double x = std::max(0.0, evals(i));
    std::complex<double> z = -scale * std::pow(x, p - 1);
    f(i) = x * tp_eval(p, z);
  }
  return V * f.asDiagonal() * V.adjoint();
}

Matrix kronecker(const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

SigmaResolvent sigma_and_resolvent(const Matrix& M, std::complex<double> lambda, int p,
                                   const std::optional<DomainSpec>& domain) {
  if (p < 2) throw DomainError("sigma_and_resolvent: p must be >= 2");
  if (M.rows() != M.cols()) throw DomainError("sigma_and_resolvent: M must be square");
  const int n = static_cast<int>(M.rows());

  DomainSpec dom = domain.value_or(
      DomainSpec::pacman(p - 1, 1.0, (p - 1) * std::numbers::pi / 2.0));
  if (!in_domain(lambda, dom))
    throw DomainError("sigma_and_resolvent: lambda outside the pacman domain");

  const Matrix X = M * M.adjoint();
  const Matrix Y = M.adjoint() * M;
  const Matrix AX = matrix_A(X, lambda, p);
  const Matrix AY = matrix_A(Y, lambda, p);

  // Powers A^0 .. A^{p-1}.
  std::vector<Matrix> powX(static_cast<std::size_t>(p)), powY(static_cast<std::size_t>(p));
  powX[0] = Matrix::Identity(n, n);
  powY[0] = Matrix::Identity(n, n);
  for (int k = 1; k < p; ++k) {
    powX[static_cast<std::size_t>(k)] = powX[static_cast<std::size_t>(k - 1)] * AX;
    powY[static_cast<std::size_t>(k)] = powY[static_cast<std::size_t>(k - 1)] * AY;
  }

  const std::complex<double> scale = lambda / std::pow(static_cast<double>(n), p - 1);
  Matrix sigma = Matrix::Zero(n * n, n * n);
  for (int k = 0; k < p; ++k)
    sigma += kronecker(powY[static_cast<std::size_t>(p - 1 - k)].transpose(),
                       powX[static_cast<std::size_t>(k)]);
  sigma *= scale;

  const Matrix one = Matrix::Identity(n * n, n * n);
  Eigen::PartialPivLU<Matrix> lu(one + sigma);
  Matrix resolvent = lu.solve(one);

  SigmaResolvent out;
  out.residual = ((one + sigma) * resolvent - one).norm();
  out.condition_estimate = (one + sigma).norm() * resolvent.norm();
  if (out.residual > 1e-10 * (1.0 + sigma.norm()))
    throw SingularError("sigma_and_resolvent: ill-conditioned inversion, cond ~= " +
                        std::to_string(out.condition_estimate));
  out.sigma = std::move(sigma);
  out.resolvent = std::move(resolvent);
  return out;
}

}  // namespace lvr
