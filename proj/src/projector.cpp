#include "vlt/projector.hpp"

#include <cmath>
#include <stdexcept>

#include "vlt/parallel.hpp"

namespace vlt {

double bilinear_sample(const CartesianImage& img, Vec2 x) {
  const int M = img.half_width_M();
  const double h = img.pixel_pitch();
  const double u = x.x / h + M;
  const double v = x.y / h + M;
  const double top = 2.0 * M;
  if (u < 0.0 || u > top || v < 0.0 || v > top) return 0.0;
  int i = static_cast<int>(u);
  int j = static_cast<int>(v);
  if (i >= 2 * M) i = 2 * M - 1;
  if (j >= 2 * M) j = 2 * M - 1;
  const double fu = u - i;
  const double fv = v - j;
  const double v00 = img.at(i - M, j - M);
  const double v01 = img.at(i - M, j + 1 - M);
  const double v10 = img.at(i + 1 - M, j - M);
  const double v11 = img.at(i + 1 - M, j + 1 - M);
  return (1.0 - fu) * ((1.0 - fv) * v00 + fv * v01) +
         fu * ((1.0 - fv) * v10 + fv * v11);
}

double forward_vline_point(const CartesianImage& img, double mu, double phi,
                           double psi) {
  const int M = img.half_width_M();
  const double R = img.radius_R();
  const double step = R / M;
  const Vec2 vertex = R * unit_vector(phi);
  const double decay = std::exp(-mu * step);
  double total = 0.0;
  for (int branch : {1, -1}) {
    const Vec2 dir = unit_vector(phi - branch * psi);
    double weight = 1.0;
    double acc = 0.0;
    for (int j = 0; j <= 2 * M; ++j) {
      acc += weight * bilinear_sample(img, vertex - (j * step) * dir);
      weight *= decay;
    }
    total += acc;
  }
  return step * total;
}

VSinogram forward_vline(const CartesianImage& img, const ScanConfig& cfg) {
  require_valid(cfg);
  if (img.radius_R() != cfg.radius_R || img.half_width_M() != cfg.M)
    throw std::invalid_argument(
        "forward_vline: image raster does not match the scan config");
  VSinogram sino(cfg.P, cfg.Q, cfg.radius_R, cfg.mu);
  parallel_for(cfg.P, [&](int p) {
    const double phi = cfg.vertex_angle(p);
    for (int q = 0; q <= cfg.Q; ++q)
      sino.at(p, q) = forward_vline_point(img, cfg.mu, phi, cfg.psi(q));
  });
  return sino;
}

double forward_exponential_radon(const CartesianImage& img, double nu,
                                 double alpha, double s, int n_samples) {
  if (n_samples < 1)
    throw std::invalid_argument("forward_exponential_radon: n_samples < 1");
  const double L = img.radius_R();
  const double dt = 2.0 * L / n_samples;
  const Vec2 normal = unit_vector(alpha);
  const Vec2 along = unit_normal(alpha);
  double acc = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double t = -L + (i + 0.5) * dt;
    acc += bilinear_sample(img, s * normal + t * along) * std::exp(nu * t);
  }
  return acc * dt;
}

double vline_decomposition_residual(const CartesianImage& img, double mu,
                                    double phi, double psi, int n_samples) {
  const double R = img.radius_R();
  const double vline = forward_vline_point(img, mu, phi, psi);
  double radon = 0.0;
  for (int branch : {1, -1})
    radon += forward_exponential_radon(img, -mu,
                                       kPi / 2.0 + phi - branch * psi,
                                       branch * R * std::sin(psi), n_samples);
  radon *= std::exp(-mu * R * std::cos(psi));
  return std::abs(vline - radon);
}

}  // namespace vlt
