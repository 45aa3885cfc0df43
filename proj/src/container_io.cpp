#include "vlt/container_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little,
              "payload files are raw little-endian doubles");

namespace vlt {
namespace {

using nlohmann::json;

std::string base_path(const std::string& path) {
  for (const char* ext : {".json", ".f64le"}) {
    const std::string suffix(ext);
    if (path.size() > suffix.size() &&
        path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
      return path.substr(0, path.size() - suffix.size());
  }
  return path;
}

void write_payload(const std::string& base, const double* data,
                   std::size_t count) {
  std::ofstream out(base + ".f64le", std::ios::binary | std::ios::trunc);
  if (!out) throw ContainerError("cannot open " + base + ".f64le for writing");
  out.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(count * sizeof(double)));
  if (!out) throw ContainerError("short write on " + base + ".f64le");
}

void write_header(const std::string& base, const json& header) {
  std::ofstream out(base + ".json", std::ios::trunc);
  if (!out) throw ContainerError("cannot open " + base + ".json for writing");
  out << header.dump(2) << '\n';
  if (!out) throw ContainerError("short write on " + base + ".json");
}

json read_header(const std::string& base) {
  std::ifstream in(base + ".json");
  if (!in) throw ContainerError("cannot open " + base + ".json");
  json header;
  try {
    in >> header;
  } catch (const json::exception& e) {
    throw ContainerError(base + ".json: " + e.what());
  }
  return header;
}

std::vector<double> read_payload(const std::string& base,
                                 std::size_t expected_count) {
  const std::string file = base + ".f64le";
  std::error_code ec;
  const auto bytes = std::filesystem::file_size(file, ec);
  if (ec) throw ContainerError("cannot stat " + file);
  if (bytes != expected_count * sizeof(double))
    throw ContainerError(file + " holds " + std::to_string(bytes) +
                         " bytes, header implies " +
                         std::to_string(expected_count * sizeof(double)));
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ContainerError("cannot open " + file);
  std::vector<double> data(expected_count);
  in.read(reinterpret_cast<char*>(data.data()),
          static_cast<std::streamsize>(bytes));
  if (static_cast<std::uintmax_t>(in.gcount()) != bytes)
    throw ContainerError("short read on " + file);
  for (double v : data)
    if (!std::isfinite(v))
      throw ContainerError(file + " contains non-finite values");
  return data;
}

json common_header(const char* kind, std::initializer_list<int> dims) {
  json h;
  h["kind"] = kind;
  h["dims"] = std::vector<int>(dims);
  h["dtype"] = "f64le";
  h["ordering"] = "row-major";
  return h;
}

void expect_kind(const json& header, const std::string& base,
                 const char* kind) {
  std::string actual;
  try {
    actual = header.at("kind").get<std::string>();
    if (header.at("dtype").get<std::string>() != "f64le")
      throw ContainerError(base + ".json: unsupported dtype");
    if (header.at("ordering").get<std::string>() != "row-major")
      throw ContainerError(base + ".json: unsupported ordering");
  } catch (const json::exception& e) {
    throw ContainerError(base + ".json: " + e.what());
  }
  if (actual != kind)
    throw ContainerError(base + ".json: kind is \"" + actual +
                         "\", expected \"" + kind + "\"");
}

std::vector<int> header_dims(const json& header, const std::string& base,
                             std::size_t rank) {
  std::vector<int> dims;
  try {
    dims = header.at("dims").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ContainerError(base + ".json: " + e.what());
  }
  if (dims.size() != rank)
    throw ContainerError(base + ".json: expected " + std::to_string(rank) +
                         " dims");
  for (int d : dims)
    if (d < 1) throw ContainerError(base + ".json: non-positive dimension");
  return dims;
}

double header_number(const json& header, const std::string& base,
                     const char* field) {
  try {
    return header.at(field).get<double>();
  } catch (const json::exception& e) {
    throw ContainerError(base + ".json: " + e.what());
  }
}

}  // namespace

void save_image(const std::string& path, const CartesianImage& img) {
  const std::string base = base_path(path);
  json h = common_header("image", {img.side(), img.side()});
  h["radius_R"] = img.radius_R();
  write_header(base, h);
  write_payload(base, img.values().data(), img.values().size());
}

void save_sinogram(const std::string& path, const VSinogram& sino) {
  const std::string base = base_path(path);
  json h = common_header("sinogram", {sino.P, sino.cols()});
  h["radius_R"] = sino.radius_R;
  h["mu"] = sino.mu;
  write_header(base, h);
  write_payload(base, sino.values.data(), sino.values.size());
}

void save_harmonics(const std::string& path, const HarmonicStack& stack) {
  const std::string base = base_path(path);
  json h = common_header("harmonics", {stack.rows, stack.cols});
  h["complex"] = true;
  write_header(base, h);
  // std::complex<double> is layout-compatible with double[2] (re, im).
  write_payload(base, reinterpret_cast<const double*>(stack.coeffs.data()),
                stack.coeffs.size() * 2);
}

void save_polar(const std::string& path, const PolarImage& pol) {
  const std::string base = base_path(path);
  json h = common_header("polar", {pol.P, pol.Q});
  h["radius_R"] = pol.radius_R;
  write_header(base, h);
  write_payload(base, pol.values.data(), pol.values.size());
}

void save_kernel_matrix(const std::string& path, const AbelKernelMatrix& K,
                        double mu, double radius_R) {
  const std::string base = base_path(path);
  json h = common_header("matrix", {K.Q, K.Q});
  h["harmonic_n"] = K.n;
  h["mu"] = mu;
  h["radius_R"] = radius_R;
  write_header(base, h);
  write_payload(base, K.entries.data(), K.entries.size());
}

CartesianImage load_image(const std::string& path) {
  const std::string base = base_path(path);
  const json h = read_header(base);
  expect_kind(h, base, "image");
  const auto dims = header_dims(h, base, 2);
  if (dims[0] != dims[1] || dims[0] % 2 == 0)
    throw ContainerError(base + ".json: image dims must be square and odd");
  const double R = header_number(h, base, "radius_R");
  const int M = (dims[0] - 1) / 2;
  auto data = read_payload(base, static_cast<std::size_t>(dims[0]) * dims[1]);
  try {
    return CartesianImage(M, R, std::move(data));
  } catch (const std::invalid_argument& e) {
    throw ContainerError(base + ": " + e.what());
  }
}

VSinogram load_sinogram(const std::string& path) {
  const std::string base = base_path(path);
  const json h = read_header(base);
  expect_kind(h, base, "sinogram");
  const auto dims = header_dims(h, base, 2);
  const double R = header_number(h, base, "radius_R");
  const double mu = header_number(h, base, "mu");
  auto data = read_payload(base, static_cast<std::size_t>(dims[0]) * dims[1]);
  try {
    return VSinogram(dims[0], dims[1] - 1, R, mu, std::move(data));
  } catch (const std::invalid_argument& e) {
    throw ContainerError(base + ": " + e.what());
  }
}

HarmonicStack load_harmonics(const std::string& path) {
  const std::string base = base_path(path);
  const json h = read_header(base);
  expect_kind(h, base, "harmonics");
  const auto dims = header_dims(h, base, 2);
  auto data =
      read_payload(base, static_cast<std::size_t>(dims[0]) * dims[1] * 2);
  HarmonicStack stack(dims[0], dims[1]);
  for (std::size_t i = 0; i < stack.coeffs.size(); ++i)
    stack.coeffs[i] = {data[2 * i], data[2 * i + 1]};
  return stack;
}

PolarImage load_polar(const std::string& path) {
  const std::string base = base_path(path);
  const json h = read_header(base);
  expect_kind(h, base, "polar");
  const auto dims = header_dims(h, base, 2);
  const double R = header_number(h, base, "radius_R");
  PolarImage pol(dims[0], dims[1], R);
  pol.values = read_payload(base, static_cast<std::size_t>(dims[0]) * dims[1]);
  return pol;
}

std::string peek_kind(const std::string& path) {
  const std::string base = base_path(path);
  const json h = read_header(base);
  try {
    return h.at("kind").get<std::string>();
  } catch (const json::exception& e) {
    throw ContainerError(base + ".json: " + e.what());
  }
}

void export_pgm(const std::string& path, const CartesianImage& img) {
  double lo = img.values().front();
  double hi = lo;
  for (double v : img.values()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi - lo;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ContainerError("cannot open " + path + " for writing");
  out << "P5\n" << img.side() << ' ' << img.side() << "\n255\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(img.side()));
  for (int i1 = -img.half_width_M(); i1 <= img.half_width_M(); ++i1) {
    for (int i2 = -img.half_width_M(); i2 <= img.half_width_M(); ++i2) {
      const double v = img.at(i1, i2);
      const double scaled = span > 0.0 ? (v - lo) / span * 255.0 : 0.0;
      row[static_cast<std::size_t>(i2 + img.half_width_M())] =
          static_cast<unsigned char>(std::lround(scaled));
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw ContainerError("short write on " + path);
}

}  // namespace vlt
