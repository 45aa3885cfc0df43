#include "vlt/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlt/geometry.hpp"

namespace vlt {

double ScanConfig::vertex_angle(int p) const { return kTwoPi * p / P; }

double ScanConfig::s(int q) const { return q * radius_R / Q; }

double ScanConfig::psi(int q) const {
  return std::asin(std::min(1.0, static_cast<double>(q) / Q));
}

double ScanConfig::r_mid(int j) const { return (j + 0.5) * radius_R / Q; }

int ScanConfig::harmonic_of_row(int k) const {
  return k < P / 2 ? k : k - P;
}

int ScanConfig::row_of_harmonic(int n) const {
  return n >= 0 ? n : n + P;
}

ScanConfig ScanConfig::with_uniform_lambda(double radius_R, double mu, int P,
                                           int Q, int M, double lambda_scalar,
                                           double lambda_zero) {
  ScanConfig cfg;
  cfg.radius_R = radius_R;
  cfg.mu = mu;
  cfg.P = P;
  cfg.Q = Q;
  cfg.M = M;
  cfg.lambda.assign(static_cast<std::size_t>(P), lambda_scalar);
  if (P > 0) cfg.lambda[0] = lambda_zero;
  return cfg;
}

ValidationReport validate_config(const ScanConfig& cfg) {
  ValidationReport rep;
  if (!std::isfinite(cfg.radius_R) || cfg.radius_R <= 0.0)
    rep.errors.push_back("radius_R must be finite and positive");
  if (!std::isfinite(cfg.mu))
    rep.errors.push_back("mu must be finite");
  if (cfg.P < 2 || cfg.P % 2 != 0)
    rep.errors.push_back("P must be even and at least 2");
  if (cfg.Q < 2)
    rep.errors.push_back("Q must be at least 2");
  if (cfg.M < 1)
    rep.errors.push_back("M must be at least 1");
  if (cfg.lambda.size() != static_cast<std::size_t>(std::max(cfg.P, 0)))
    rep.errors.push_back("lambda must hold exactly P entries");
  for (std::size_t k = 0; k < cfg.lambda.size(); ++k) {
    if (!std::isfinite(cfg.lambda[k]) || cfg.lambda[k] < 0.0) {
      rep.errors.push_back("lambda[" + std::to_string(k) +
                           "] must be finite and non-negative");
      break;
    }
  }
  if (rep.ok() && cfg.mu * cfg.radius_R > 1.5)
    rep.warnings.push_back(
        "mu * radius_R exceeds 3/2; unique invertibility is not guaranteed");
  return rep;
}

void require_valid(const ScanConfig& cfg) {
  const ValidationReport rep = validate_config(cfg);
  if (!rep.ok()) throw std::invalid_argument("invalid scan config: " + rep.errors.front());
}

}  // namespace vlt
