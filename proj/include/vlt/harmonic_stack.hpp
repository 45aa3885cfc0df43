#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace vlt {

/// Stack of complex angular-harmonic profiles, one row per harmonic in
/// wrap-around DFT order: row k holds harmonic n = k for k < rows/2 and
/// n = k - rows otherwise.  Column j is a radial sample.  Row-major.
struct HarmonicStack {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> coeffs;

  HarmonicStack() = default;
  HarmonicStack(int rows_, int cols_)
      : rows(rows_), cols(cols_),
        coeffs(static_cast<std::size_t>(rows_) * cols_) {}

  std::complex<double> at(int k, int j) const {
    return coeffs[static_cast<std::size_t>(k) * cols + j];
  }
  std::complex<double>& at(int k, int j) {
    return coeffs[static_cast<std::size_t>(k) * cols + j];
  }

  int harmonic_of_row(int k) const { return k < rows / 2 ? k : k - rows; }
  int row_of_harmonic(int n) const { return n >= 0 ? n : n + rows; }

  /// For a stack coming from real-valued data, row -n must be the conjugate
  /// of row n.  Returns max_k,j |c(-n, j) - conj(c(n, j))| relative to the
  /// largest coefficient magnitude (0 for an all-zero stack).  The Nyquist
  /// row pairs with itself, so a non-negligible imaginary part there counts.
  double max_conjugate_asymmetry() const {
    double peak = 0.0;
    for (const auto& c : coeffs) peak = std::max(peak, std::abs(c));
    if (peak == 0.0) return 0.0;
    double worst = 0.0;
    for (int k = 0; k < rows; ++k) {
      const int km = (rows - k) % rows;
      for (int j = 0; j < cols; ++j)
        worst = std::max(worst, std::abs(at(km, j) - std::conj(at(k, j))));
    }
    return worst / peak;
  }
};

}  // namespace vlt
