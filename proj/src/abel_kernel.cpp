#include "vlt/abel_kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlt {
namespace {

constexpr double kEdgeTol = 1e-12;

double clamp_unit(double z, const char* what) {
  if (z > 1.0) {
    if (z > 1.0 + kEdgeTol)
      throw std::domain_error(std::string(what) + " argument " +
                              std::to_string(z) + " outside [-1, 1]");
    return 1.0;
  }
  if (z < -1.0) {
    if (z < -1.0 - kEdgeTol)
      throw std::domain_error(std::string(what) + " argument " +
                              std::to_string(z) + " outside [-1, 1]");
    return -1.0;
  }
  return z;
}

double branch_sign(int n, int branch) {
  if (branch == 1) return 1.0;
  return n % 2 == 0 ? 1.0 : -1.0;  // (-1)^n
}

}  // namespace

double chebyshev_T(int k, double z) {
  if (k < 0) throw std::domain_error("chebyshev_T: negative degree");
  z = clamp_unit(z, "chebyshev_T");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = z;
  for (int i = 2; i <= k; ++i) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double radial_kernel(int n, double s, double r, double mu, double R) {
  if (!(s >= 0.0) || s > r * (1.0 + kEdgeTol) || r > R * (1.0 + kEdgeTol))
    throw std::domain_error("radial_kernel: need 0 <= s <= r <= R, got s=" +
                            std::to_string(s) + " r=" + std::to_string(r) +
                            " R=" + std::to_string(R));
  const double root = std::sqrt(std::max(0.0, (r - s) * (r + s)));
  const double inner = r > 0.0 ? std::asin(clamp_unit(s / r, "radial_kernel")) : 0.0;
  const double outer = std::asin(clamp_unit(s / R, "radial_kernel"));
  double sum = 0.0;
  for (int branch : {1, -1}) {
    sum += branch_sign(n, branch) * std::exp(branch * mu * root) *
           std::cos(n * (inner - branch * outer));
  }
  return sum;
}

double substituted_kernel(int n, double t, double rho, double mu, double R) {
  if (!(rho >= -kEdgeTol) || rho > t + kEdgeTol || t > 1.0 + kEdgeTol ||
      rho >= 1.0)
    throw std::domain_error(
        "substituted_kernel: need 0 <= rho <= t <= 1 and rho < 1, got t=" +
        std::to_string(t) + " rho=" + std::to_string(rho));
  const double root = std::sqrt(std::max(0.0, t - rho));
  const int deg = n < 0 ? -n : n;
  double sum = 0.0;
  for (int branch : {1, -1}) {
    double arg;
    if (rho == t) {
      // The general expression reduces to branch * sqrt(1 - t) here;
      // evaluating it directly avoids a needless rounding through the
      // quotient, which matters because T_n amplifies argument error by n^2.
      arg = branch * std::sqrt(std::max(0.0, 1.0 - t));
    } else {
      arg = (std::sqrt(std::max(0.0, t)) * root + branch * (1.0 - t)) /
            std::sqrt(1.0 - rho);
    }
    sum += branch_sign(n, branch) * std::exp(branch * mu * R * root) *
           chebyshev_T(deg, arg);
  }
  return 0.5 * sum;
}

double product_weight(int q, int j, double R, int Q) {
  if (q < 0 || j < 0 || q >= Q || j >= Q)
    throw std::domain_error("product_weight: indices must lie in [0, Q)");
  if (j < q) return 0.0;
  const auto node2 = [&](int i) {
    const double s = i * R / Q;
    return s * s;
  };
  const double s_q2 = node2(q);
  return std::sqrt(node2(j + 1) - s_q2) -
         std::sqrt(std::max(0.0, node2(j) - s_q2));
}

AbelKernelMatrix assemble_kernel_matrix(int n, const ScanConfig& cfg) {
  require_valid(cfg);
  AbelKernelMatrix K(n, cfg.Q);
  for (int q = 0; q < cfg.Q; ++q) {
    const double s = cfg.s(q);
    for (int j = q; j < cfg.Q; ++j)
      K.at(q, j) = product_weight(q, j, cfg.radius_R, cfg.Q) *
                   radial_kernel(n, s, cfg.r_mid(j), cfg.mu, cfg.radius_R);
  }
  return K;
}

double kernel_form_residual(int n, double s, double r, double mu, double R) {
  if (!(s >= 0.0) || s >= r || r > R * (1.0 + kEdgeTol))
    throw std::domain_error("kernel_form_residual: need 0 <= s < r <= R");
  const double trig = radial_kernel(n, s, r, mu, R);
  const double root_r = std::sqrt((r - s) * (r + s));
  const double root_R = std::sqrt(std::max(0.0, (R - s) * (R + s)));
  const int deg = n < 0 ? -n : n;
  double cheb = 0.0;
  for (int branch : {1, -1}) {
    const double arg = (root_r * root_R + branch * s * s) / (r * R);
    cheb += branch_sign(n, branch) * std::exp(branch * mu * root_r) *
            chebyshev_T(deg, clamp_unit(arg, "kernel_form_residual"));
  }
  return std::abs(trig - cheb);
}

}  // namespace vlt
