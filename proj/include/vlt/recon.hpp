#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vlt/abel_kernel.hpp"
#include "vlt/config.hpp"
#include "vlt/harmonic_stack.hpp"
#include "vlt/image.hpp"
#include "vlt/sinogram.hpp"

namespace vlt {

/// Wall-clock seconds per reconstruction stage.
struct ReconTimings {
  double analyze_s = 0.0;     // angular decomposition of the data
  double assemble_s = 0.0;    // kernel matrix assembly (0 when precomputed)
  double solve_s = 0.0;       // data scaling plus per-harmonic solves
  double synthesize_s = 0.0;  // angular synthesis of the radial profiles
  double resample_s = 0.0;    // polar grid to Cartesian pixels

  double total() const {
    return analyze_s + assemble_s + solve_s + synthesize_s + resample_s;
  }
};

/// Kernel matrices for every harmonic of one scan geometry.  The kernel is
/// even in the harmonic index, so one matrix per |n| <= P/2 is stored and
/// rows n and -n share it.
struct HarmonicSystems {
  double radius_R = 0.0;
  double mu = 0.0;
  int Q = 0;
  std::vector<AbelKernelMatrix> by_abs_n;

  static HarmonicSystems assemble(const ScanConfig& cfg);
};

/// Full inversion: angular analysis, per-harmonic regularized radial solve,
/// angular synthesis, Cartesian resampling.  The sinogram grid must match
/// cfg in P, Q and R; its recorded mu is deliberately ignored in favor of
/// cfg.mu, so attenuation mismatch studies are possible.  Pass precomputed
/// systems (matching cfg) to skip assembly.
CartesianImage reconstruct(const VSinogram& sino, const ScanConfig& cfg,
                           ReconTimings* timings = nullptr,
                           const HarmonicSystems* precomputed = nullptr);

/// Bilinear resampling of a polar field onto the (2M+1)^2 pixel grid:
/// linear in angle (periodic) and in radius, with radii clamped to the
/// midpoint node range.  Pixels with ||x|| >= R are zero.
CartesianImage resample_polar_to_cartesian(const PolarImage& pol, int M,
                                           double radius_R);

struct NoisySinogram {
  VSinogram sino;
  long long max_bin_count = 0;
};

/// Poisson photon statistics: scales the data so the total mass equals
/// total_counts expected photons, draws one count per bin (row-major order,
/// deterministic in seed), scales back.  Also reports the largest single
/// bin count of the realization.
NoisySinogram poisson_noise(const VSinogram& sino, long long total_counts,
                            std::uint64_t seed);

/// ||a - b||_2 / ||b||_2 over all pixels; the grids must match.
double relative_l2_error(const CartesianImage& a, const CartesianImage& b);

/// Reconstruction error against a reference across a ladder of Tikhonov
/// parameters (applied to every harmonic except 0, which keeps
/// cfg.lambda[0]).  The ladder must be positive and strictly increasing.
/// The angular analysis and the kernel matrices are shared across the
/// ladder.  Returns (lambda, error) pairs in input order.
std::vector<std::pair<double, double>> lambda_sweep(
    const VSinogram& sino, const ScanConfig& cfg,
    const std::vector<double>& lambdas, const CartesianImage& reference);

/// Reconstructs the same data under different assumed attenuation values;
/// kernels and data scaling both use the assumed mu while the data stay
/// fixed.  Returns (assumed mu, error) pairs in input order.
std::vector<std::pair<double, double>> mismatch_experiment(
    const VSinogram& sino, const ScanConfig& cfg,
    const std::vector<double>& assumed_mu, const CartesianImage& reference);

}  // namespace vlt
