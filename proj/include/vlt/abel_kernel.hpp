#pragma once

#include <cstddef>
#include <vector>

#include "vlt/config.hpp"

namespace vlt {

/// Chebyshev polynomial of the first kind, degree k >= 0, via the three-term
/// recurrence.  Arguments within 1e-12 of [-1, 1] are clamped; anything
/// further out throws std::domain_error.
double chebyshev_T(int k, double z);

/// Kernel of the radial integral equation linking the n-th angular harmonic
/// of the image to the n-th harmonic of the scaled data, for 0 <= s <= r <= R:
///
///   sum over branch = +-1 of
///     branch^n exp(branch mu sqrt(r^2 - s^2))
///       cos(n (arcsin(s/r) - branch arcsin(s/R))).
///
/// Even in n.
double radial_kernel(int n, double s, double r, double mu, double R);

/// The same kernel after the change of variables t = 1 - (s/R)^2,
/// rho = 1 - (r/R)^2 that brings the equation to generalized Abel form,
/// for 0 <= rho <= t <= 1, rho < 1:
///
///   1/2 sum over branch of branch^n exp(branch mu R sqrt(t - rho))
///     T_n((sqrt(t) sqrt(t - rho) + branch (1 - t)) / sqrt(1 - rho)).
///
/// On the diagonal rho = t this reduces to T_n(sqrt(1 - t)).
double substituted_kernel(int n, double t, double rho, double mu, double R);

/// Product-integration weight for radial node s_q = q R / Q and source cell
/// j: the exact integral of r / sqrt(r^2 - s_q^2) over [s_j, s_{j+1}],
/// which is sqrt(s_{j+1}^2 - s_q^2) - sqrt(s_j^2 - s_q^2) for j >= q and 0
/// below the diagonal.  Requires 0 <= q, j < Q.
double product_weight(int q, int j, double R, int Q);

/// Discretized radial system for one harmonic: entries(q, j) =
/// product_weight(q, j) * radial_kernel(n, s_q, r_j), upper triangular.
struct AbelKernelMatrix {
  int n = 0;
  int Q = 0;
  std::vector<double> entries;  // row-major Q x Q

  AbelKernelMatrix() = default;
  AbelKernelMatrix(int n_, int Q_)
      : n(n_), Q(Q_), entries(static_cast<std::size_t>(Q_) * Q_, 0.0) {}

  double at(int q, int j) const {
    return entries[static_cast<std::size_t>(q) * Q + j];
  }
  double& at(int q, int j) {
    return entries[static_cast<std::size_t>(q) * Q + j];
  }
};

AbelKernelMatrix assemble_kernel_matrix(int n, const ScanConfig& cfg);

/// |radial_kernel - equivalent Chebyshev form|; the two expressions are
/// algebraically identical, so this measures numerical agreement only.
/// Requires 0 <= s < r <= R.
double kernel_form_residual(int n, double s, double r, double mu, double R);

}  // namespace vlt
