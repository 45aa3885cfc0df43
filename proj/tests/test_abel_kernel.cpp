#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "vlt/abel_kernel.hpp"
#include "vlt/config.hpp"

using namespace vlt;

namespace {

// Two-branch kernel sum written out longhand, as an independent oracle.
double kernel_oracle(int n, double s, double r, double mu, double R) {
  const double root = std::sqrt(r * r - s * s);
  const double inner = std::asin(s / r);
  const double outer = std::asin(s / R);
  const double plus = std::exp(mu * root) * std::cos(n * (inner - outer));
  const double minus = std::exp(-mu * root) * std::cos(n * (inner + outer));
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return plus + sign * minus;
}

ScanConfig standard_config(int Q) {
  return ScanConfig::with_uniform_lambda(8.0, 0.15, 100, Q, 100, 0.0);
}

}  // namespace

TEST_CASE("chebyshev polynomials") {
  CHECK(chebyshev_T(0, 0.3) == 1.0);
  CHECK(chebyshev_T(1, -0.7) == -0.7);
  CHECK(chebyshev_T(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));

  // T_k(cos t) = cos(k t)
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  for (int trial = 0; trial < 50; ++trial) {
    const double t = angle(rng);
    for (int k : {3, 5, 10, 25}) {
      CHECK(std::abs(chebyshev_T(k, std::cos(t)) - std::cos(k * t)) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(chebyshev_T(3, 1.1), std::domain_error);
  CHECK_THROWS_AS(chebyshev_T(-1, 0.5), std::domain_error);
  // arguments a hair outside the interval clamp instead of throwing
  CHECK(chebyshev_T(4, 1.0 + 1e-13) == 1.0);
  CHECK(chebyshev_T(4, -1.0 - 1e-13) == 1.0);
}

TEST_CASE("radial kernel values on the axis s = 0") {
  // K_n(0, r) = e^{mu r} + (-1)^n e^{-mu r}
  CHECK(radial_kernel(0, 0.0, 4.0, 0.15, 8.0) ==
        doctest::Approx(2.0 * std::cosh(0.6)).epsilon(1e-14));
  CHECK(2.0 * std::cosh(0.6) == doctest::Approx(2.37093).epsilon(1e-5));
  CHECK(radial_kernel(1, 0.0, 4.0, 0.15, 8.0) ==
        doctest::Approx(2.0 * std::sinh(0.6)).epsilon(1e-13));
  CHECK(radial_kernel(2, 0.0, 5.0, 0.15, 8.0) ==
        doctest::Approx(2.0 * std::cosh(0.75)).epsilon(1e-14));

  SUBCASE("without attenuation the even kernels are flat in r") {
    CHECK(radial_kernel(0, 0.0, 3.0, 0.0, 8.0) == 2.0);
    CHECK(radial_kernel(0, 0.0, 7.5, 0.0, 8.0) == 2.0);
  }
}

TEST_CASE("radial kernel matches the longhand oracle") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double r = 0.5 + 7.5 * unit(rng);
    const double s = r * 0.98 * unit(rng);
    const int n = static_cast<int>(unit(rng) * 51);
    const double got = radial_kernel(n, s, r, 0.15, 8.0);
    const double want = kernel_oracle(n, s, r, 0.15, 8.0);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("radial kernel is even in the harmonic index") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double r = 0.5 + 7.5 * unit(rng);
    const double s = r * unit(rng);
    const int n = 1 + static_cast<int>(unit(rng) * 50);
    const double plus = radial_kernel(n, s, r, 0.15, 8.0);
    const double minus = radial_kernel(-n, s, r, 0.15, 8.0);
    CHECK(std::abs(plus - minus) <= 1e-13 * std::max(1.0, std::abs(plus)));
  }
}

TEST_CASE("radial kernel stays inside the exponential envelope") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double r = 0.5 + 7.5 * unit(rng);
    const double s = r * unit(rng);
    const int n = static_cast<int>(unit(rng) * 60);
    const double bound = 2.0 * std::exp(0.15 * std::sqrt(r * r - s * s));
    CHECK(std::abs(radial_kernel(n, s, r, 0.15, 8.0)) <= bound * (1.0 + 1e-12));
  }
}

TEST_CASE("radial kernel rejects out-of-range geometry") {
  CHECK_THROWS_AS(radial_kernel(0, 3.0, 2.0, 0.15, 8.0), std::domain_error);
  CHECK_THROWS_AS(radial_kernel(0, 1.0, 9.0, 0.15, 8.0), std::domain_error);
  CHECK_THROWS_AS(radial_kernel(0, -0.5, 2.0, 0.15, 8.0), std::domain_error);
}

TEST_CASE("substituted kernel diagonal collapses to a chebyshev value") {
  // K^_n(t, t) = T_n(sqrt(1 - t)) for every harmonic
  for (int n = 0; n <= 64; ++n)
    for (int i = 0; i < 200; ++i) {
      const double t = i / 200.0;
      const double want = chebyshev_T(n, std::sqrt(1.0 - t));
      const double got = substituted_kernel(n, t, t, 0.15, 8.0);
      CHECK(std::abs(got - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }

  SUBCASE("negative harmonics share the diagonal law") {
    const double got = substituted_kernel(-7, 0.3, 0.3, 0.15, 8.0);
    CHECK(std::abs(got - chebyshev_T(7, std::sqrt(0.7))) <= 1e-13);
  }
}

TEST_CASE("substituted kernel spot values") {
  // harmonic 0 reduces to cosh(mu R sqrt(t - rho))
  const double want = std::cosh(1.2 * std::sqrt(0.4));
  CHECK(want == doctest::Approx(1.302092).epsilon(1e-6));
  CHECK(substituted_kernel(0, 0.5, 0.1, 0.15, 8.0) ==
        doctest::Approx(want).epsilon(1e-13));

  CHECK(substituted_kernel(1, 0.5, 0.5, 0.0, 8.0) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

  CHECK_THROWS_AS(substituted_kernel(0, 0.2, 0.5, 0.15, 8.0), std::domain_error);
  CHECK_THROWS_AS(substituted_kernel(0, 1.2, 0.1, 0.15, 8.0), std::domain_error);
  CHECK_THROWS_AS(substituted_kernel(0, 1.0, 1.0, 0.15, 8.0), std::domain_error);
}

TEST_CASE("product integration weights") {
  // closed form for R = 1, Q = 4: w_{1,2} = (sqrt(8) - sqrt(3)) / 4
  const double w12 = product_weight(1, 2, 1.0, 4);
  CHECK(w12 == doctest::Approx((std::sqrt(8.0) - std::sqrt(3.0)) / 4.0)
                   .epsilon(1e-15));
  CHECK(w12 == doctest::Approx(0.2740941).epsilon(1e-6));

  SUBCASE("midpoint-rule quadrature oracle") {
    // w_{q,j} is the exact integral of r / sqrt(r^2 - s_q^2) over the cell
    const double s1 = 0.25;
    const int nodes = 200000;
    const double lo = 0.5, hi = 0.75;
    const double dr = (hi - lo) / nodes;
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double r = lo + (i + 0.5) * dr;
      acc += r / std::sqrt(r * r - s1 * s1);
    }
    CHECK(w12 == doctest::Approx(acc * dr).epsilon(1e-9));
  }

  SUBCASE("diagonal weights") {
    // w_{q,q} = (R/Q) sqrt(2 q + 1)
    for (int q = 0; q < 100; ++q)
      CHECK(product_weight(q, q, 8.0, 100) ==
            doctest::Approx(0.08 * std::sqrt(2.0 * q + 1.0)).epsilon(1e-13));
  }

  SUBCASE("rows telescope to the full chord") {
    for (int q = 0; q < 100; ++q) {
      double acc = 0.0;
      for (int j = 0; j < 100; ++j) acc += product_weight(q, j, 8.0, 100);
      const double s = 8.0 * q / 100.0;
      CHECK(acc == doctest::Approx(std::sqrt(64.0 - s * s)).epsilon(1e-12));
    }
  }

  SUBCASE("strictly lower entries vanish") {
    CHECK(product_weight(3, 2, 8.0, 100) == 0.0);
    CHECK(product_weight(99, 0, 8.0, 100) == 0.0);
  }

  CHECK_THROWS_AS(product_weight(-1, 0, 8.0, 100), std::domain_error);
  CHECK_THROWS_AS(product_weight(0, 100, 8.0, 100), std::domain_error);
}

TEST_CASE("kernel matrix assembly") {
  const ScanConfig cfg = standard_config(40);

  SUBCASE("upper triangular structure") {
    const AbelKernelMatrix K = assemble_kernel_matrix(5, cfg);
    for (int q = 0; q < K.Q; ++q)
      for (int j = 0; j < q; ++j) CHECK(K.at(q, j) == 0.0);
    CHECK(K.n == 5);
  }

  SUBCASE("zero attenuation and harmonic zero gives twice the weights") {
    ScanConfig flat = cfg;
    flat.mu = 0.0;
    const AbelKernelMatrix K = assemble_kernel_matrix(0, flat);
    for (int q = 0; q < K.Q; ++q)
      for (int j = q; j < K.Q; ++j)
        CHECK(K.at(q, j) ==
              doctest::Approx(2.0 * product_weight(q, j, 8.0, 40)).epsilon(1e-15));
  }

  SUBCASE("opposite harmonics produce the same matrix") {
    const AbelKernelMatrix a = assemble_kernel_matrix(7, cfg);
    const AbelKernelMatrix b = assemble_kernel_matrix(-7, cfg);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      CHECK(std::abs(a.entries[i] - b.entries[i]) <= 1e-13);
  }

  SUBCASE("entries stay inside the weighted envelope") {
    const AbelKernelMatrix K = assemble_kernel_matrix(13, cfg);
    const double envelope = 2.0 * std::exp(0.15 * 8.0);
    for (int q = 0; q < K.Q; ++q) {
      double wmax = 0.0;
      for (int j = 0; j < K.Q; ++j)
        wmax = std::max(wmax, product_weight(q, j, 8.0, 40));
      for (int j = 0; j < K.Q; ++j)
        CHECK(std::abs(K.at(q, j)) <= envelope * wmax * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("trigonometric and chebyshev kernel forms agree") {
  CHECK(kernel_form_residual(0, 1.0, 3.0, 0.15, 8.0) == 0.0);

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double r = 0.5 + 7.5 * unit(rng);
    const double s = r * 0.999 * unit(rng);
    const int n = static_cast<int>(unit(rng) * 101) - 50;
    const double scale = 2.0 * std::exp(0.15 * std::sqrt(r * r - s * s));
    CHECK(kernel_form_residual(n, s, r, 0.15, 8.0) <= 1e-10 * scale);
  }

  SUBCASE("s = 0 is exact up to rounding") {
    for (int n : {0, 1, 2, 9, 30})
      CHECK(kernel_form_residual(n, 0.0, 5.0, 0.15, 8.0) <= 1e-12);
  }
}
