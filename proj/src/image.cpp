#include "vlt/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlt {

namespace {

void check_geometry(int M, double R) {
  if (M < 1) throw std::invalid_argument("image half-width M must be at least 1");
  if (!std::isfinite(R) || R <= 0.0)
    throw std::invalid_argument("image radius must be finite and positive");
}

}  // namespace

CartesianImage::CartesianImage(int half_width_M, double radius_R)
    : M_(half_width_M), R_(radius_R) {
  check_geometry(M_, R_);
  values_.assign(static_cast<std::size_t>(side()) * side(), 0.0);
}

CartesianImage::CartesianImage(int half_width_M, double radius_R,
                               std::vector<double> values)
    : M_(half_width_M), R_(radius_R), values_(std::move(values)) {
  check_geometry(M_, R_);
  const std::size_t expected = static_cast<std::size_t>(side()) * side();
  if (values_.size() != expected)
    throw std::invalid_argument("image payload holds " +
                                std::to_string(values_.size()) +
                                " values, expected " + std::to_string(expected));
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("image payload contains non-finite values");
  // ||x|| >= R is equivalent to i1^2 + i2^2 >= M^2, exact in integers.
  const long long m2 = static_cast<long long>(M_) * M_;
  for (int i1 = -M_; i1 <= M_; ++i1)
    for (int i2 = -M_; i2 <= M_; ++i2)
      if (static_cast<long long>(i1) * i1 + static_cast<long long>(i2) * i2 >= m2)
        values_[index(i1, i2)] = 0.0;
}

PolarImage::PolarImage(int P_, int Q_, double radius_R_)
    : P(P_), Q(Q_), radius_R(radius_R_) {
  if (P < 1 || Q < 1)
    throw std::invalid_argument("polar image needs positive dimensions");
  if (!std::isfinite(radius_R) || radius_R <= 0.0)
    throw std::invalid_argument("polar image radius must be finite and positive");
  values.assign(static_cast<std::size_t>(P) * Q, 0.0);
}

}  // namespace vlt
