#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlt/abel_kernel.hpp"

namespace vlt {

using ComplexVector = std::vector<std::complex<double>>;

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError(int row_, const std::string& what)
      : std::runtime_error(what), row(row_) {}
  int row;
};

struct FactorizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SvdConvergenceError : std::runtime_error {
  explicit SvdConvergenceError(double off_diagonal_)
      : std::runtime_error("jacobi svd did not converge (worst relative "
                           "column correlation " +
                           std::to_string(off_diagonal_) + ")"),
        off_diagonal(off_diagonal_) {}
  double off_diagonal;
};

/// Back substitution on the upper triangular kernel system.  A diagonal
/// entry with magnitude at or below 1e-12 times the largest entry raises
/// SingularMatrixError naming the first such row.
ComplexVector solve_triangular(const AbelKernelMatrix& K,
                               const ComplexVector& rhs);

/// Cholesky factorization of K^T K + lambda I, reusable across right-hand
/// sides.  Complex right-hand sides amount to two real solves against the
/// one real factor.  Throws FactorizationError when the regularized normal
/// matrix is not numerically positive definite.
class TikhonovFactor {
 public:
  TikhonovFactor(const AbelKernelMatrix& K, double lambda);

  /// K must be the matrix the factor was built from.
  ComplexVector solve(const AbelKernelMatrix& K, const ComplexVector& rhs) const;

  double lambda() const { return lambda_; }

 private:
  int Q_;
  double lambda_;
  std::vector<double> low_;  // lower triangular Cholesky factor, row-major
};

/// Minimizer of ||K x - rhs||^2 + lambda ||x||^2 via the normal equations.
ComplexVector solve_tikhonov(const AbelKernelMatrix& K,
                             const ComplexVector& rhs, double lambda);

/// One-sided Jacobi orthogonalization; descending singular values.  Stops
/// when every column pair has relative correlation at most 1e-12, throws
/// SvdConvergenceError after 60 sweeps otherwise.
std::vector<double> singular_values(const AbelKernelMatrix& K);

/// sigma_max / sigma_min, +infinity when the smallest singular value
/// vanishes.
double condition_number(const AbelKernelMatrix& K);

}  // namespace vlt
