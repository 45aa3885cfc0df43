#include "vlt/recon.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "vlt/geometry.hpp"
#include "vlt/harmonics.hpp"
#include "vlt/parallel.hpp"
#include "vlt/solver.hpp"

namespace vlt {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_sinogram_matches(const VSinogram& sino, const ScanConfig& cfg) {
  if (sino.P != cfg.P || sino.Q != cfg.Q || sino.radius_R != cfg.radius_R)
    throw std::invalid_argument(
        "sinogram grid does not match the scan config");
}

void check_reference_matches(const CartesianImage& ref, const ScanConfig& cfg) {
  if (ref.half_width_M() != cfg.M || ref.radius_R() != cfg.radius_R)
    throw std::invalid_argument(
        "reference image grid does not match the scan config");
}

/// One regularized radial solve per harmonic row.  Rows n and -n see the
/// same kernel matrix; when they also share a lambda the factorization is
/// reused.  lambda = 0 requests the plain triangular solve, falling back to
/// a 1e-12 Tikhonov floor if the diagonal is numerically singular.
HarmonicStack solve_harmonics(const HarmonicStack& rhs, const ScanConfig& cfg,
                              const HarmonicSystems& systems) {
  HarmonicStack out(cfg.P, cfg.Q);
  std::vector<std::unique_ptr<TikhonovFactor>> factors(systems.by_abs_n.size());
  ComplexVector rhs_vec(static_cast<std::size_t>(cfg.Q));
  for (int k = 0; k < cfg.P; ++k) {
    const int n = cfg.harmonic_of_row(k);
    const int an = n < 0 ? -n : n;
    const AbelKernelMatrix& K = systems.by_abs_n[an];
    const double lambda = cfg.lambda[k];
    for (int j = 0; j < cfg.Q; ++j) rhs_vec[j] = rhs.at(k, j);
    ComplexVector sol;
    try {
      if (lambda == 0.0) {
        try {
          sol = solve_triangular(K, rhs_vec);
        } catch (const SingularMatrixError&) {
          sol = solve_tikhonov(K, rhs_vec, 1e-12);
        }
      } else {
        if (!factors[an] || factors[an]->lambda() != lambda)
          factors[an] = std::make_unique<TikhonovFactor>(K, lambda);
        sol = factors[an]->solve(K, rhs_vec);
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception& e) {
      throw std::runtime_error("radial solve failed for harmonic n=" +
                               std::to_string(n) + ": " + e.what());
    }
    for (int j = 0; j < cfg.Q; ++j) out.at(k, j) = sol[j];
  }
  return out;
}

}  // namespace

HarmonicSystems HarmonicSystems::assemble(const ScanConfig& cfg) {
  require_valid(cfg);
  HarmonicSystems sys;
  sys.radius_R = cfg.radius_R;
  sys.mu = cfg.mu;
  sys.Q = cfg.Q;
  sys.by_abs_n.resize(static_cast<std::size_t>(cfg.P / 2) + 1);
  parallel_for(cfg.P / 2 + 1,
               [&](int n) { sys.by_abs_n[n] = assemble_kernel_matrix(n, cfg); });
  return sys;
}

CartesianImage reconstruct(const VSinogram& sino, const ScanConfig& cfg,
                           ReconTimings* timings,
                           const HarmonicSystems* precomputed) {
  require_valid(cfg);
  check_sinogram_matches(sino, cfg);

  ReconTimings local;
  ReconTimings& tm = timings ? *timings : local;
  tm = ReconTimings{};

  auto t = Clock::now();
  const HarmonicStack data_stack = analyze(sino);
  tm.analyze_s = seconds_since(t);

  HarmonicSystems assembled;
  const HarmonicSystems* systems = precomputed;
  if (systems) {
    if (systems->radius_R != cfg.radius_R || systems->mu != cfg.mu ||
        systems->Q != cfg.Q ||
        systems->by_abs_n.size() < static_cast<std::size_t>(cfg.P / 2) + 1)
      throw std::invalid_argument(
          "precomputed kernel systems do not match the scan config");
  } else {
    t = Clock::now();
    assembled = HarmonicSystems::assemble(cfg);
    tm.assemble_s = seconds_since(t);
    systems = &assembled;
  }

  t = Clock::now();
  const HarmonicStack rhs = scale_to_abel_rhs(data_stack, cfg);
  const HarmonicStack image_stack = solve_harmonics(rhs, cfg, *systems);
  tm.solve_s = seconds_since(t);

  t = Clock::now();
  const PolarImage pol = synthesize(image_stack, cfg.radius_R);
  tm.synthesize_s = seconds_since(t);

  t = Clock::now();
  CartesianImage img = resample_polar_to_cartesian(pol, cfg.M, cfg.radius_R);
  tm.resample_s = seconds_since(t);
  return img;
}

CartesianImage resample_polar_to_cartesian(const PolarImage& pol, int M,
                                           double radius_R) {
  if (M < 1) throw std::invalid_argument("resample: M must be at least 1");
  if (pol.radius_R != radius_R)
    throw std::invalid_argument("resample: polar field has a different radius");
  const int side = 2 * M + 1;
  const double h = radius_R / M;
  const long long m2 = static_cast<long long>(M) * M;
  std::vector<double> values(static_cast<std::size_t>(side) * side, 0.0);
  parallel_for(side, [&](int row) {
    const int i1 = row - M;
    for (int i2 = -M; i2 <= M; ++i2) {
      const long long rr =
          static_cast<long long>(i1) * i1 + static_cast<long long>(i2) * i2;
      if (rr >= m2) continue;
      const double r = h * std::sqrt(static_cast<double>(rr));
      double phi = std::atan2(static_cast<double>(i2), static_cast<double>(i1));
      if (phi < 0.0) phi += kTwoPi;
      double v = phi * pol.P / kTwoPi;
      if (v >= pol.P) v -= pol.P;
      int p0 = static_cast<int>(v);
      if (p0 >= pol.P) p0 = pol.P - 1;
      const double fp = v - p0;
      const int p1 = (p0 + 1) % pol.P;
      // Radial coordinate in midpoint-node units, clamped to the node range.
      double u = r * pol.Q / radius_R - 0.5;
      u = std::min(std::max(u, 0.0), static_cast<double>(pol.Q - 1));
      int j0 = static_cast<int>(u);
      if (j0 > pol.Q - 2) j0 = pol.Q >= 2 ? pol.Q - 2 : 0;
      const int j1 = pol.Q >= 2 ? j0 + 1 : j0;
      const double fu = u - j0;
      const double val =
          (1.0 - fp) * ((1.0 - fu) * pol.at(p0, j0) + fu * pol.at(p0, j1)) +
          fp * ((1.0 - fu) * pol.at(p1, j0) + fu * pol.at(p1, j1));
      values[static_cast<std::size_t>(i1 + M) * side + (i2 + M)] = val;
    }
  });
  return CartesianImage(M, radius_R, std::move(values));
}

NoisySinogram poisson_noise(const VSinogram& sino, long long total_counts,
                            std::uint64_t seed) {
  if (total_counts <= 0)
    throw std::invalid_argument("poisson_noise: total_counts must be positive");
  double mass = 0.0;
  for (double v : sino.values) {
    if (v < 0.0)
      throw std::invalid_argument("poisson_noise: sinogram has negative bins");
    mass += v;
  }
  if (!(mass > 0.0))
    throw std::invalid_argument(
        "poisson_noise: cannot scale an all-zero sinogram to a photon budget");
  const double scale = total_counts / mass;
  std::mt19937_64 rng(seed);
  VSinogram out(sino.P, sino.Q, sino.radius_R, sino.mu);
  long long max_count = 0;
  for (std::size_t i = 0; i < sino.values.size(); ++i) {
    const double mean = scale * sino.values[i];
    long long count = 0;
    if (mean > 0.0) {
      std::poisson_distribution<long long> draw(mean);
      count = draw(rng);
    }
    max_count = std::max(max_count, count);
    out.values[i] = static_cast<double>(count) / scale;
  }
  return {std::move(out), max_count};
}

double relative_l2_error(const CartesianImage& a, const CartesianImage& b) {
  if (a.half_width_M() != b.half_width_M() || a.radius_R() != b.radius_R())
    throw std::invalid_argument("relative_l2_error: image grids differ");
  double diff2 = 0.0;
  double ref2 = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const double d = a.values()[i] - b.values()[i];
    diff2 += d * d;
    ref2 += b.values()[i] * b.values()[i];
  }
  if (!(ref2 > 0.0))
    throw std::invalid_argument("relative_l2_error: reference is all zero");
  return std::sqrt(diff2 / ref2);
}

std::vector<std::pair<double, double>> lambda_sweep(
    const VSinogram& sino, const ScanConfig& cfg,
    const std::vector<double>& lambdas, const CartesianImage& reference) {
  require_valid(cfg);
  check_sinogram_matches(sino, cfg);
  check_reference_matches(reference, cfg);
  if (lambdas.empty())
    throw std::invalid_argument("lambda_sweep: empty ladder");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!std::isfinite(lambdas[i]) || lambdas[i] <= 0.0)
      throw std::invalid_argument("lambda_sweep: ladder must be positive");
    if (i > 0 && lambdas[i] <= lambdas[i - 1])
      throw std::invalid_argument("lambda_sweep: ladder must increase strictly");
  }

  const HarmonicStack rhs = scale_to_abel_rhs(analyze(sino), cfg);
  const HarmonicSystems systems = HarmonicSystems::assemble(cfg);

  std::vector<std::pair<double, double>> curve;
  curve.reserve(lambdas.size());
  ScanConfig step = cfg;
  for (double lambda : lambdas) {
    std::fill(step.lambda.begin(), step.lambda.end(), lambda);
    step.lambda[0] = cfg.lambda[0];
    const HarmonicStack image_stack = solve_harmonics(rhs, step, systems);
    const PolarImage pol = synthesize(image_stack, cfg.radius_R);
    const CartesianImage img =
        resample_polar_to_cartesian(pol, cfg.M, cfg.radius_R);
    curve.emplace_back(lambda, relative_l2_error(img, reference));
  }
  return curve;
}

std::vector<std::pair<double, double>> mismatch_experiment(
    const VSinogram& sino, const ScanConfig& cfg,
    const std::vector<double>& assumed_mu, const CartesianImage& reference) {
  require_valid(cfg);
  check_sinogram_matches(sino, cfg);
  check_reference_matches(reference, cfg);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(assumed_mu.size());
  ScanConfig step = cfg;
  for (double mu : assumed_mu) {
    step.mu = mu;
    const CartesianImage img = reconstruct(sino, step);
    curve.emplace_back(mu, relative_l2_error(img, reference));
  }
  return curve;
}

}  // namespace vlt
