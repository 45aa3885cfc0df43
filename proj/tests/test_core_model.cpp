#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "vlt/config.hpp"
#include "vlt/container_io.hpp"
#include "vlt/geometry.hpp"
#include "vlt/harmonic_stack.hpp"
#include "vlt/image.hpp"
#include "vlt/sinogram.hpp"

using namespace vlt;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "vlt_core_model_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

CartesianImage random_image(int M, double R, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int side = 2 * M + 1;
  std::vector<double> v(static_cast<std::size_t>(side) * side);
  for (auto& x : v) x = dist(rng);
  return CartesianImage(M, R, std::move(v));
}

}  // namespace

TEST_CASE("unit vectors at the axis angles") {
  CHECK(unit_vector(0.0).x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit_vector(0.0).y == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(unit_normal(0.0).x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(unit_normal(0.0).y == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit_vector(kPi / 2).y == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit_vector(kPi / 4).x == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("unit vector pairs stay orthonormal") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double phi = angle(rng);
    const Vec2 e = unit_vector(phi);
    const Vec2 n = unit_normal(phi);
    CHECK(std::abs(e.norm() - 1.0) <= 1e-15);
    CHECK(std::abs(n.norm() - 1.0) <= 1e-15);
    CHECK(std::abs(e.dot(n)) <= 1e-15);
    // n is e rotated by +pi/2
    CHECK(std::abs(n.x + e.y) <= 1e-15);
    CHECK(std::abs(n.y - e.x) <= 1e-15);
  }
}

TEST_CASE("scan config validation") {
  ScanConfig cfg = ScanConfig::with_uniform_lambda(8.0, 0.15, 100, 100, 100, 8e-4);
  CHECK(validate_config(cfg).ok());
  CHECK(validate_config(cfg).warnings.empty());

  SUBCASE("odd P rejected") {
    cfg.P = 99;
    cfg.lambda.resize(99);
    CHECK_FALSE(validate_config(cfg).ok());
  }
  SUBCASE("negative lambda rejected") {
    cfg.lambda[3] = -1e-9;
    CHECK_FALSE(validate_config(cfg).ok());
  }
  SUBCASE("lambda length must be P") {
    cfg.lambda.pop_back();
    CHECK_FALSE(validate_config(cfg).ok());
  }
  SUBCASE("non-positive radius rejected") {
    cfg.radius_R = 0.0;
    CHECK_FALSE(validate_config(cfg).ok());
    CHECK_THROWS_AS(require_valid(cfg), std::invalid_argument);
  }
  SUBCASE("large mu R only warns") {
    cfg.mu = 0.2;  // mu R = 1.6 > 3/2
    const auto rep = validate_config(cfg);
    CHECK(rep.ok());
    REQUIRE(rep.warnings.size() == 1);
  }
  SUBCASE("mu R = 1.2 stays quiet") {
    CHECK(validate_config(cfg).warnings.empty());
  }
}

TEST_CASE("scan config grids") {
  const ScanConfig cfg = ScanConfig::with_uniform_lambda(8.0, 0.15, 100, 100, 100, 0.0);
  CHECK(cfg.s(0) == 0.0);
  CHECK(cfg.s(100) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(cfg.s(25) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(cfg.r_mid(0) == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(cfg.r_mid(99) == doctest::Approx(7.96).epsilon(1e-15));
  CHECK(cfg.psi(0) == 0.0);
  CHECK(cfg.psi(100) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(cfg.vertex_angle(25) == doctest::Approx(kPi / 2).epsilon(1e-15));

  // wrap-around harmonic order
  CHECK(cfg.harmonic_of_row(0) == 0);
  CHECK(cfg.harmonic_of_row(49) == 49);
  CHECK(cfg.harmonic_of_row(50) == -50);
  CHECK(cfg.harmonic_of_row(99) == -1);
  for (int k = 0; k < cfg.P; ++k)
    CHECK(cfg.row_of_harmonic(cfg.harmonic_of_row(k)) == k);

  // lambda defaults: free harmonic 0, uniform elsewhere
  const ScanConfig reg = ScanConfig::with_uniform_lambda(8.0, 0.15, 100, 100, 100, 8e-4);
  CHECK(reg.lambda[0] == 0.0);
  CHECK(reg.lambda[1] == 8e-4);
  CHECK(reg.lambda[99] == 8e-4);
}

TEST_CASE("cartesian image masks the exterior of the disc") {
  const int M = 10;
  const int side = 2 * M + 1;
  std::vector<double> ones(static_cast<std::size_t>(side) * side, 1.0);
  const CartesianImage img(M, 1.0, std::move(ones));
  CHECK(img.at(0, 0) == 1.0);
  CHECK(img.at(3, 4) == 1.0);   // 9 + 16 < 100
  CHECK(img.at(6, 8) == 0.0);   // 36 + 64 = 100, on the rim
  CHECK(img.at(10, 0) == 0.0);
  CHECK(img.at(0, -10) == 0.0);
  CHECK(img.at(-7, -8) == 0.0);  // 49 + 64 > 100
}

TEST_CASE("image constructors validate") {
  CHECK_THROWS_AS(CartesianImage(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(CartesianImage(4, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(CartesianImage(4, 1.0, std::vector<double>(10, 0.0)),
                  std::invalid_argument);
  std::vector<double> bad(81, 0.0);
  bad[40] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(CartesianImage(4, 1.0, std::move(bad)), std::invalid_argument);
}

TEST_CASE("sinogram shape and validation") {
  VSinogram sino(4, 6, 8.0, 0.15);
  CHECK(sino.cols() == 7);
  CHECK(sino.values.size() == 28);
  sino.at(3, 6) = 2.5;
  CHECK(sino.values.back() == 2.5);
  CHECK_THROWS_AS(VSinogram(4, 6, 8.0, 0.15, std::vector<double>(27, 0.0)),
                  std::invalid_argument);
  std::vector<double> bad(28, 0.0);
  bad[5] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(VSinogram(4, 6, 8.0, 0.15, std::move(bad)),
                  std::invalid_argument);
}

TEST_CASE("harmonic stack conjugate asymmetry") {
  HarmonicStack stack(8, 3);
  CHECK(stack.max_conjugate_asymmetry() == 0.0);
  stack.at(1, 0) = {2.0, 1.0};
  stack.at(7, 0) = {2.0, -1.0};
  CHECK(stack.max_conjugate_asymmetry() <= 1e-15);
  stack.at(4, 1) = {0.0, 1.0};  // Nyquist row must be real
  // row 4 pairs with itself: |i - conj(i)| = 2, peak magnitude sqrt(5)
  CHECK(stack.max_conjugate_asymmetry() ==
        doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("image container round trip is bit exact") {
  const auto dir = temp_dir();
  const auto base = (dir / "img_roundtrip").string();
  const CartesianImage img = random_image(100, 8.0, 42);
  save_image(base, img);
  const CartesianImage back = load_image(base);
  CHECK(back.half_width_M() == 100);
  CHECK(back.radius_R() == 8.0);
  REQUIRE(back.values().size() == img.values().size());
  CHECK(std::memcmp(back.values().data(), img.values().data(),
                    img.values().size() * sizeof(double)) == 0);
  // either file name also resolves the pair
  CHECK(load_image(base + ".json").values().size() == img.values().size());
  CHECK(load_image(base + ".f64le").values().size() == img.values().size());
}

TEST_CASE("sinogram container keeps header fields") {
  const auto dir = temp_dir();
  const auto base = (dir / "sino_roundtrip").string();
  VSinogram sino(10, 5, 8.0, 0.15);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  for (auto& v : sino.values) v = dist(rng);
  save_sinogram(base, sino);
  const VSinogram back = load_sinogram(base);
  CHECK(back.P == 10);
  CHECK(back.Q == 5);
  CHECK(back.radius_R == 8.0);
  CHECK(back.mu == 0.15);
  CHECK(std::memcmp(back.values.data(), sino.values.data(),
                    sino.values.size() * sizeof(double)) == 0);
  CHECK(peek_kind(base) == "sinogram");
}

TEST_CASE("harmonics container interleaves re and im") {
  const auto dir = temp_dir();
  const auto base = (dir / "stack_roundtrip").string();
  HarmonicStack stack(6, 4);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (auto& c : stack.coeffs) c = {dist(rng), dist(rng)};
  save_harmonics(base, stack);
  const HarmonicStack back = load_harmonics(base);
  REQUIRE(back.rows == 6);
  REQUIRE(back.cols == 4);
  CHECK(std::memcmp(back.coeffs.data(), stack.coeffs.data(),
                    stack.coeffs.size() * sizeof(stack.coeffs[0])) == 0);

  // payload layout: re, im pairs in row-major order
  std::ifstream raw(base + ".f64le", std::ios::binary);
  double first_two[2];
  raw.read(reinterpret_cast<char*>(first_two), sizeof first_two);
  CHECK(first_two[0] == stack.coeffs[0].real());
  CHECK(first_two[1] == stack.coeffs[0].imag());
}

TEST_CASE("polar container round trip") {
  const auto dir = temp_dir();
  const auto base = (dir / "polar_roundtrip").string();
  PolarImage pol(12, 9, 8.0);
  for (std::size_t i = 0; i < pol.values.size(); ++i)
    pol.values[i] = std::sin(0.1 * static_cast<double>(i));
  save_polar(base, pol);
  const PolarImage back = load_polar(base);
  CHECK(back.P == 12);
  CHECK(back.Q == 9);
  CHECK(back.radius_R == 8.0);
  CHECK(back.values == pol.values);
}

TEST_CASE("container loaders reject malformed input") {
  const auto dir = temp_dir();

  SUBCASE("missing files") {
    CHECK_THROWS_AS(load_image((dir / "does_not_exist").string()), ContainerError);
  }
  SUBCASE("kind mismatch") {
    const auto base = (dir / "kind_mismatch").string();
    save_image(base, CartesianImage(4, 1.0));
    CHECK_THROWS_AS(load_sinogram(base), ContainerError);
  }
  SUBCASE("payload size disagrees with header") {
    const auto base = (dir / "short_payload").string();
    save_image(base, CartesianImage(4, 1.0));
    std::ofstream trunc(base + ".f64le", std::ios::binary | std::ios::trunc);
    const double v = 1.0;
    trunc.write(reinterpret_cast<const char*>(&v), sizeof v);
    trunc.close();
    CHECK_THROWS_AS(load_image(base), ContainerError);
  }
  SUBCASE("non-finite payload") {
    const auto base = (dir / "nan_payload").string();
    save_sinogram(base, VSinogram(2, 2, 1.0, 0.0));
    std::ofstream bad(base + ".f64le", std::ios::binary | std::ios::trunc);
    std::vector<double> vals(6, 0.0);
    vals[2] = std::numeric_limits<double>::quiet_NaN();
    bad.write(reinterpret_cast<const char*>(vals.data()), 6 * sizeof(double));
    bad.close();
    CHECK_THROWS_AS(load_sinogram(base), ContainerError);
  }
  SUBCASE("garbage header") {
    const auto base = (dir / "garbage").string();
    std::ofstream h(base + ".json", std::ios::trunc);
    h << "not json at all";
    h.close();
    CHECK_THROWS_AS(peek_kind(base), ContainerError);
  }
}

TEST_CASE("pgm export maps the value range onto 0..255") {
  const auto dir = temp_dir();
  const auto path = (dir / "preview.pgm").string();
  const int M = 6;
  const int side = 2 * M + 1;
  std::vector<double> v(static_cast<std::size_t>(side) * side, 0.0);
  v[static_cast<std::size_t>(M) * side + M] = 2.0;        // center pixel
  v[static_cast<std::size_t>(M) * side + M + 1] = -2.0;   // neighbor
  export_pgm(path, CartesianImage(M, 1.0, std::move(v)));

  std::ifstream in(path, std::ios::binary);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  in.get();  // single whitespace after the header
  CHECK(magic == "P5");
  CHECK(w == side);
  CHECK(h == side);
  CHECK(maxval == 255);
  std::vector<unsigned char> bytes(static_cast<std::size_t>(w) * h);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  CHECK(in.gcount() == static_cast<std::streamsize>(bytes.size()));
  const auto byte_at = [&](int i1, int i2) {
    return bytes[static_cast<std::size_t>(i1 + M) * side + (i2 + M)];
  };
  CHECK(byte_at(0, 0) == 255);
  CHECK(byte_at(0, 1) == 0);
  CHECK(byte_at(2, 2) == 128);  // zero maps to the middle of [-2, 2]
}
