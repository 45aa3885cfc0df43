#pragma once

#include <complex>
#include <vector>

namespace vlt {

/// kMixedRadix splits the length over its prime factors recursively and is
/// the default; kDirect evaluates the O(n^2) sum and exists as an
/// independent cross-check.
enum class DftRoute { kMixedRadix, kDirect };

/// Unnormalized forward transform X_k = sum_p x_p e^{-2 pi i p k / n}.
/// Any length n >= 1, not just powers of two.
std::vector<std::complex<double>> dft_forward(
    const std::vector<std::complex<double>>& x,
    DftRoute route = DftRoute::kMixedRadix);

/// Unnormalized inverse x_p = sum_k X_k e^{+2 pi i p k / n}; composing with
/// dft_forward and dividing by n restores the input.
std::vector<std::complex<double>> dft_inverse(
    const std::vector<std::complex<double>>& x,
    DftRoute route = DftRoute::kMixedRadix);

}  // namespace vlt
