#include "vlt/sinogram.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlt {

namespace {

void check_header(int P, int Q, double R, double mu) {
  if (P < 1 || Q < 1) throw std::invalid_argument("sinogram needs positive P and Q");
  if (!std::isfinite(R) || R <= 0.0)
    throw std::invalid_argument("sinogram radius must be finite and positive");
  if (!std::isfinite(mu)) throw std::invalid_argument("sinogram mu must be finite");
}

}  // namespace

VSinogram::VSinogram(int P_, int Q_, double radius_R_, double mu_)
    : P(P_), Q(Q_), radius_R(radius_R_), mu(mu_) {
  check_header(P, Q, radius_R, mu);
  values.assign(static_cast<std::size_t>(P) * cols(), 0.0);
}

VSinogram::VSinogram(int P_, int Q_, double radius_R_, double mu_,
                     std::vector<double> values_)
    : P(P_), Q(Q_), radius_R(radius_R_), mu(mu_), values(std::move(values_)) {
  check_header(P, Q, radius_R, mu);
  const std::size_t expected = static_cast<std::size_t>(P) * cols();
  if (values.size() != expected)
    throw std::invalid_argument("sinogram payload holds " +
                                std::to_string(values.size()) +
                                " values, expected " + std::to_string(expected));
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("sinogram payload contains non-finite values");
}

}  // namespace vlt
