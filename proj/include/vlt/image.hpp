#pragma once

#include <cstddef>
#include <vector>

namespace vlt {

/// Square pixel grid covering [-R, R]^2.  Pixel (i1, i2) sits at
/// (i1 h, i2 h) with h = R / M and i1, i2 in {-M, ..., M}.  Construction
/// forces pixels with ||x|| >= R to exactly zero and rejects non-finite
/// values, so every instance is supported inside the open disc.
class CartesianImage {
 public:
  CartesianImage(int half_width_M, double radius_R);
  CartesianImage(int half_width_M, double radius_R, std::vector<double> values);

  int half_width_M() const { return M_; }
  double radius_R() const { return R_; }
  int side() const { return 2 * M_ + 1; }
  double pixel_pitch() const { return R_ / M_; }

  double at(int i1, int i2) const { return values_[index(i1, i2)]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1 + M_) * static_cast<std::size_t>(side()) +
           static_cast<std::size_t>(i2 + M_);
  }

  int M_;
  double R_;
  std::vector<double> values_;
};

/// Real samples on the polar grid (r_j, phi_p) with midpoint radii
/// r_j = (j + 1/2) R / Q and phi_p = 2 pi p / P.  Row-major P x Q.
struct PolarImage {
  int P = 0;
  int Q = 0;
  double radius_R = 0.0;
  std::vector<double> values;

  PolarImage() = default;
  PolarImage(int P, int Q, double radius_R);

  double at(int p, int j) const {
    return values[static_cast<std::size_t>(p) * Q + j];
  }
  double& at(int p, int j) {
    return values[static_cast<std::size_t>(p) * Q + j];
  }
};

}  // namespace vlt
