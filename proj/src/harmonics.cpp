#include "vlt/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace vlt {

HarmonicStack analyze(const VSinogram& sino, DftRoute route) {
  HarmonicStack stack(sino.P, sino.cols());
  std::vector<std::complex<double>> column(static_cast<std::size_t>(sino.P));
  for (int q = 0; q < sino.cols(); ++q) {
    for (int p = 0; p < sino.P; ++p) column[p] = sino.at(p, q);
    const auto spectrum = dft_forward(column, route);
    for (int k = 0; k < sino.P; ++k)
      stack.at(k, q) = spectrum[k] / static_cast<double>(sino.P);
  }
  return stack;
}

PolarImage synthesize(const HarmonicStack& stack, double radius_R,
                      DftRoute route) {
  PolarImage pol(stack.rows, stack.cols, radius_R);
  double peak = 0.0;
  double imag_peak = 0.0;
  std::vector<std::complex<double>> column(static_cast<std::size_t>(stack.rows));
  for (int j = 0; j < stack.cols; ++j) {
    for (int k = 0; k < stack.rows; ++k) column[k] = stack.at(k, j);
    const auto field = dft_inverse(column, route);
    for (int p = 0; p < stack.rows; ++p) {
      peak = std::max(peak, std::abs(field[p]));
      imag_peak = std::max(imag_peak, std::abs(field[p].imag()));
      pol.at(p, j) = field[p].real();
    }
  }
  if (peak > 0.0 && imag_peak > 1e-8 * peak)
    throw ConjugateSymmetryError(imag_peak / peak);
  return pol;
}

HarmonicStack scale_to_abel_rhs(const HarmonicStack& stack,
                                const ScanConfig& cfg) {
  require_valid(cfg);
  if (stack.rows != cfg.P || stack.cols != cfg.Q + 1)
    throw std::invalid_argument(
        "scale_to_abel_rhs: stack must be P x (Q + 1) for the given config");
  HarmonicStack out(cfg.P, cfg.Q);
  for (int q = 0; q < cfg.Q; ++q) {
    const double s = cfg.s(q);
    const double factor =
        0.5 * std::exp(cfg.mu * std::sqrt(cfg.radius_R * cfg.radius_R - s * s));
    for (int k = 0; k < cfg.P; ++k) out.at(k, q) = factor * stack.at(k, q);
  }
  return out;
}

}  // namespace vlt
