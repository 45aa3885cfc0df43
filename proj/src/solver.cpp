#include "vlt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vlt {
namespace {

double max_abs_entry(const AbelKernelMatrix& K) {
  double peak = 0.0;
  for (double v : K.entries) peak = std::max(peak, std::abs(v));
  return peak;
}

}  // namespace

ComplexVector solve_triangular(const AbelKernelMatrix& K,
                               const ComplexVector& rhs) {
  const int Q = K.Q;
  if (rhs.size() != static_cast<std::size_t>(Q))
    throw std::invalid_argument("solve_triangular: rhs length mismatch");
  const double floor = 1e-12 * max_abs_entry(K);
  for (int q = 0; q < Q; ++q)
    if (std::abs(K.at(q, q)) <= floor)
      throw SingularMatrixError(
          q, "triangular kernel system is singular at row " +
                 std::to_string(q) + " (harmonic n=" + std::to_string(K.n) +
                 ")");
  ComplexVector x(static_cast<std::size_t>(Q));
  for (int q = Q - 1; q >= 0; --q) {
    std::complex<double> acc = rhs[q];
    for (int j = q + 1; j < Q; ++j) acc -= K.at(q, j) * x[j];
    x[q] = acc / K.at(q, q);
  }
  return x;
}

TikhonovFactor::TikhonovFactor(const AbelKernelMatrix& K, double lambda)
    : Q_(K.Q), lambda_(lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("tikhonov: lambda must be finite and >= 0");
  // Lower triangle of K^T K + lambda I; K is upper triangular, so entry
  // (a, b) with b <= a only sums rows q <= b.
  std::vector<double> gram(static_cast<std::size_t>(Q_) * Q_, 0.0);
  for (int a = 0; a < Q_; ++a) {
    for (int b = 0; b <= a; ++b) {
      double s = 0.0;
      for (int q = 0; q <= b; ++q) s += K.at(q, a) * K.at(q, b);
      gram[static_cast<std::size_t>(a) * Q_ + b] = s;
    }
    gram[static_cast<std::size_t>(a) * Q_ + a] += lambda;
  }
  low_.assign(static_cast<std::size_t>(Q_) * Q_, 0.0);
  for (int j = 0; j < Q_; ++j) {
    double d = gram[static_cast<std::size_t>(j) * Q_ + j];
    for (int k = 0; k < j; ++k) {
      const double l = low_[static_cast<std::size_t>(j) * Q_ + k];
      d -= l * l;
    }
    if (!(d > 0.0) || !std::isfinite(d))
      throw FactorizationError(
          "regularized normal matrix is not positive definite at row " +
          std::to_string(j) + " (harmonic n=" + std::to_string(K.n) + ")");
    const double diag = std::sqrt(d);
    low_[static_cast<std::size_t>(j) * Q_ + j] = diag;
    for (int i = j + 1; i < Q_; ++i) {
      double off = gram[static_cast<std::size_t>(i) * Q_ + j];
      for (int k = 0; k < j; ++k)
        off -= low_[static_cast<std::size_t>(i) * Q_ + k] *
               low_[static_cast<std::size_t>(j) * Q_ + k];
      low_[static_cast<std::size_t>(i) * Q_ + j] = off / diag;
    }
  }
}

ComplexVector TikhonovFactor::solve(const AbelKernelMatrix& K,
                                    const ComplexVector& rhs) const {
  if (K.Q != Q_ || rhs.size() != static_cast<std::size_t>(Q_))
    throw std::invalid_argument("tikhonov solve: dimension mismatch");
  ComplexVector b(static_cast<std::size_t>(Q_));
  for (int a = 0; a < Q_; ++a) {
    std::complex<double> acc{0.0, 0.0};
    for (int q = 0; q <= a; ++q) acc += K.at(q, a) * rhs[q];
    b[a] = acc;
  }
  ComplexVector y(static_cast<std::size_t>(Q_));
  for (int i = 0; i < Q_; ++i) {
    std::complex<double> acc = b[i];
    for (int k = 0; k < i; ++k)
      acc -= low_[static_cast<std::size_t>(i) * Q_ + k] * y[k];
    y[i] = acc / low_[static_cast<std::size_t>(i) * Q_ + i];
  }
  ComplexVector x(static_cast<std::size_t>(Q_));
  for (int i = Q_ - 1; i >= 0; --i) {
    std::complex<double> acc = y[i];
    for (int k = i + 1; k < Q_; ++k)
      acc -= low_[static_cast<std::size_t>(k) * Q_ + i] * x[k];
    x[i] = acc / low_[static_cast<std::size_t>(i) * Q_ + i];
  }
  return x;
}

ComplexVector solve_tikhonov(const AbelKernelMatrix& K,
                             const ComplexVector& rhs, double lambda) {
  return TikhonovFactor(K, lambda).solve(K, rhs);
}

std::vector<double> singular_values(const AbelKernelMatrix& K) {
  const int n = K.Q;
  // Column-major working copy; rotations act on column pairs.
  std::vector<double> A(static_cast<std::size_t>(n) * n);
  for (int q = 0; q < n; ++q)
    for (int j = 0; j < n; ++j) A[static_cast<std::size_t>(j) * n + q] = K.at(q, j);
  const double tol = 1e-12;
  const int max_sweeps = 60;
  double worst = 0.0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    worst = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      double* ci = A.data() + static_cast<std::size_t>(i) * n;
      for (int j = i + 1; j < n; ++j) {
        double* cj = A.data() + static_cast<std::size_t>(j) * n;
        double a = 0.0, b = 0.0, c = 0.0;
        for (int k = 0; k < n; ++k) {
          a += ci[k] * ci[k];
          b += cj[k] * cj[k];
          c += ci[k] * cj[k];
        }
        const double denom = std::sqrt(a * b);
        if (denom == 0.0) continue;
        const double ratio = std::abs(c) / denom;
        worst = std::max(worst, ratio);
        if (ratio <= tol) continue;
        rotated = true;
        const double tau = (b - a) / (2.0 * c);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (int k = 0; k < n; ++k) {
          const double x = ci[k];
          const double y = cj[k];
          ci[k] = cs * x - sn * y;
          cj[k] = sn * x + cs * y;
        }
      }
    }
    if (!rotated) {
      std::vector<double> sigma(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        double s2 = 0.0;
        for (int k = 0; k < n; ++k) {
          const double v = A[static_cast<std::size_t>(j) * n + k];
          s2 += v * v;
        }
        sigma[j] = std::sqrt(s2);
      }
      std::sort(sigma.begin(), sigma.end(), std::greater<>());
      return sigma;
    }
  }
  throw SvdConvergenceError(worst);
}

double condition_number(const AbelKernelMatrix& K) {
  const auto sigma = singular_values(K);
  if (sigma.empty() || sigma.back() <= 0.0)
    return std::numeric_limits<double>::infinity();
  return sigma.front() / sigma.back();
}

}  // namespace vlt
