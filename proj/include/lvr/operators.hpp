#ifndef LVR_OPERATORS_HPP
#define LVR_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "lvr/borel.hpp"

namespace lvr {

using Matrix = Eigen::MatrixXcd;

// Throws unless X is Hermitian and positive semidefinite within tol.
void ensure_hermitian_psd(const Matrix& X, double tol = 1e-10);

// A(X) = X T_p(-(lambda/N^{p-1}) X^{p-1}), equivalently the branch of
// (lambda/N^{p-1}) A^p + A = X with A -> X as lambda -> 0, applied on the
// spectrum of the Hermitian PSD operand X.  N is the dimension of X.
Matrix matrix_A(const Matrix& X, std::complex<double> lambda, int p);

struct SigmaResolvent {
  Matrix sigma;      // N^2 x N^2
  Matrix resolvent;  // (1 + sigma)^{-1}
  double residual;   // ||(1 + sigma) resolvent - 1||
  double condition_estimate;
};

// Sigma = (lambda/N^{p-1}) sum_k A^k(M M^dag) (x) A^{p-1-k}(M^dag M), as an
// operator on matrices H -> sum_k A^k(X) H A^{p-1-k}(Y) in column-major vec
// convention, and its resolvent.  lambda must lie in the pacman domain
// (default opening q pi/2 with q = p-1, radius 1).
SigmaResolvent sigma_and_resolvent(const Matrix& M, std::complex<double> lambda,
                                   int p,
                                   const std::optional<DomainSpec>& domain = std::nullopt);

// Kronecker product helper in column-major vec convention.
Matrix kronecker(const Matrix& A, const Matrix& B);

}  // namespace lvr

#endif
