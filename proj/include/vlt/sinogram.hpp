#pragma once

#include <cstddef>
#include <vector>

namespace vlt {

/// V-line data on the (phi_p, psi_q) grid.  Row-major P x (Q+1); entry
/// (p, q) is the attenuated V-line integral with vertex angle
/// phi_p = 2 pi p / P and half opening angle psi_q = arcsin(q / Q).
/// The recorded mu is the attenuation the data were simulated (or measured)
/// with; reconstruction may deliberately assume a different value.
struct VSinogram {
  int P = 0;
  int Q = 0;
  double radius_R = 0.0;
  double mu = 0.0;
  std::vector<double> values;

  VSinogram(int P, int Q, double radius_R, double mu);
  VSinogram(int P, int Q, double radius_R, double mu, std::vector<double> values);

  int cols() const { return Q + 1; }

  double at(int p, int q) const {
    return values[static_cast<std::size_t>(p) * cols() + q];
  }
  double& at(int p, int q) {
    return values[static_cast<std::size_t>(p) * cols() + q];
  }
};

}  // namespace vlt
