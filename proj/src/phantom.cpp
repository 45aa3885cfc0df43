#include "vlt/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace vlt {

namespace {

using nlohmann::json;

bool inside(const EllipseComponent& c, double x, double y) {
  const double dx = x - c.center.x;
  const double dy = y - c.center.y;
  const double co = std::cos(c.rotation);
  const double si = std::sin(c.rotation);
  const double u = (co * dx + si * dy) / c.semi_x;
  const double v = (-si * dx + co * dy) / c.semi_y;
  return u * u + v * v <= 1.0;
}

// Fraction of the pixel square (side h, centered at (x, y)) covered by the
// component. Pixels clear of the boundary resolve exactly: outside the
// circumscribed circle -> 0, all four corners inside -> 1 (the ellipse is
// convex, so the corners pin the whole square). Only the thin straddling
// band pays for supersampling.
double coverage(const EllipseComponent& c, double x, double y, double h) {
  const double half_diag = 0.5 * h * std::sqrt(2.0);
  const double d = std::hypot(x - c.center.x, y - c.center.y);
  if (d - half_diag >= std::max(c.semi_x, c.semi_y)) return 0.0;
  const double q = 0.5 * h;
  if (inside(c, x - q, y - q) && inside(c, x - q, y + q) &&
      inside(c, x + q, y - q) && inside(c, x + q, y + q))
    return 1.0;
  constexpr int k = 16;
  int hits = 0;
  for (int u = 0; u < k; ++u) {
    const double px = x + h * ((u + 0.5) / k - 0.5);
    for (int v = 0; v < k; ++v) {
      const double py = y + h * ((v + 0.5) / k - 0.5);
      if (inside(c, px, py)) ++hits;
    }
  }
  return static_cast<double>(hits) / (k * k);
}

}  // namespace

EllipsePhantom three_discs_preset() {
  EllipsePhantom ph;
  ph.components = {
      {{-2.2, 1.8}, 1.7, 1.7, 0.0, 1.0},
      {{2.6, 0.6}, 1.1, 1.1, 0.0, 0.8},
      {{0.4, -2.8}, 0.85, 0.85, 0.0, 1.2},
  };
  return ph;
}

EllipsePhantom centered_disc_preset(double a, double intensity) {
  EllipsePhantom ph;
  ph.components = {{{0.0, 0.0}, a, a, 0.0, intensity}};
  return ph;
}

void validate_phantom(const EllipsePhantom& phantom, double radius_R) {
  if (!std::isfinite(radius_R) || radius_R <= 0.0)
    throw std::invalid_argument("phantom radius must be finite and positive");
  const double bound = radius_R * (1.0 - 1e-3);
  for (std::size_t i = 0; i < phantom.components.size(); ++i) {
    const auto& c = phantom.components[i];
    for (double v : {c.center.x, c.center.y, c.semi_x, c.semi_y, c.rotation,
                     c.intensity})
      if (!std::isfinite(v))
        throw PhantomComponentError(i, "non-finite parameter");
    if (c.semi_x <= 0.0 || c.semi_y <= 0.0)
      throw PhantomComponentError(i, "semi-axes must be positive");
    if (c.center.norm() + std::max(c.semi_x, c.semi_y) >= bound)
      throw PhantomComponentError(
          i, "does not fit strictly inside the scan disc of radius " +
                 std::to_string(radius_R));
  }
}

CartesianImage rasterize(const EllipsePhantom& phantom, int M,
                         double radius_R) {
  validate_phantom(phantom, radius_R);
  if (M < 1) throw std::invalid_argument("rasterize: M must be at least 1");
  const int side = 2 * M + 1;
  const double h = radius_R / M;
  std::vector<double> values(static_cast<std::size_t>(side) * side, 0.0);
  for (int i1 = -M; i1 <= M; ++i1) {
    const double x = i1 * h;
    for (int i2 = -M; i2 <= M; ++i2) {
      const double y = i2 * h;
      double acc = 0.0;
      for (const auto& c : phantom.components)
        acc += c.intensity * coverage(c, x, y, h);
      if (acc != 0.0)
        values[static_cast<std::size_t>(i1 + M) * side + (i2 + M)] = acc;
    }
  }
  return CartesianImage(M, radius_R, std::move(values));
}

EllipsePhantom load_phantom(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  try {
    in >> doc;
    EllipsePhantom ph;
    for (const auto& item : doc.at("components")) {
      EllipseComponent c;
      c.center = {item.at("center").at(0).get<double>(),
                  item.at("center").at(1).get<double>()};
      c.semi_x = item.at("semi_axes").at(0).get<double>();
      c.semi_y = item.at("semi_axes").at(1).get<double>();
      c.rotation = item.value("rotation", 0.0);
      c.intensity = item.value("intensity", 1.0);
      ph.components.push_back(c);
    }
    return ph;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_phantom(const std::string& path, const EllipsePhantom& phantom) {
  json doc;
  doc["components"] = json::array();
  for (const auto& c : phantom.components) {
    json item;
    item["center"] = {c.center.x, c.center.y};
    item["semi_axes"] = {c.semi_x, c.semi_y};
    item["rotation"] = c.rotation;
    item["intensity"] = c.intensity;
    doc["components"].push_back(item);
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
}

namespace {

// Attenuated integral of one component along the ray r -> vertex - r * dir,
// r >= 0.  The vertex sits on the scan circle, strictly outside every valid
// component, so the ray either misses or crosses a single segment.
double ray_segment_integral(const EllipseComponent& c, const Vec2& vertex,
                            const Vec2& dir, double mu) {
  const double co = std::cos(c.rotation);
  const double si = std::sin(c.rotation);
  const double ax2 = c.semi_x * c.semi_x;
  const double ay2 = c.semi_y * c.semi_y;
  // quadratic form of the ellipse interior: (x-center)^T Q (x-center) <= 1
  const double qxx = co * co / ax2 + si * si / ay2;
  const double qyy = si * si / ax2 + co * co / ay2;
  const double qxy = co * si * (1.0 / ax2 - 1.0 / ay2);
  const Vec2 d{vertex.x - c.center.x, vertex.y - c.center.y};
  const double A = qxx * dir.x * dir.x + 2.0 * qxy * dir.x * dir.y +
                   qyy * dir.y * dir.y;
  const double B = qxx * d.x * dir.x + qxy * (d.x * dir.y + d.y * dir.x) +
                   qyy * d.y * dir.y;
  const double C = qxx * d.x * d.x + 2.0 * qxy * d.x * d.y + qyy * d.y * d.y -
                   1.0;
  const double disc = B * B - A * C;
  if (B <= 0.0 || disc <= 0.0) return 0.0;  // points away or misses
  const double r1 = (B + std::sqrt(disc)) / A;
  const double r0 = C / (A * r1);  // product of roots, no cancellation
  if (mu == 0.0) return c.intensity * (r1 - r0);
  return c.intensity * (std::exp(-mu * r0) - std::exp(-mu * r1)) / mu;
}

}  // namespace

double analytic_vline_phantom(const EllipsePhantom& phantom, double mu,
                              double radius_R, double phi, double psi) {
  validate_phantom(phantom, radius_R);
  if (psi < 0.0 || psi > kPi / 2.0 + 1e-12)
    throw std::domain_error("half opening angle must lie in [0, pi/2]");
  const Vec2 vertex = radius_R * unit_vector(phi);
  double total = 0.0;
  for (int branch : {1, -1}) {
    const Vec2 dir = unit_vector(phi - branch * psi);
    for (const auto& c : phantom.components)
      total += ray_segment_integral(c, vertex, dir, mu);
  }
  return total;
}

double analytic_vline_centered_disc(double a, double intensity, double mu,
                                    double radius_R, double phi, double psi) {
  (void)phi;  // rotational symmetry
  if (!(a > 0.0) || a >= radius_R)
    throw std::domain_error("disc radius must satisfy 0 < a < R");
  if (psi < 0.0 || psi > kPi / 2.0 + 1e-12)
    throw std::domain_error("half opening angle must lie in [0, pi/2]");
  const double s = radius_R * std::sin(psi);
  if (s >= a) return 0.0;
  const double h = std::sqrt(a * a - s * s);
  const double d0 = radius_R * std::cos(psi);
  if (mu == 0.0) return 4.0 * intensity * h;
  return 2.0 * intensity *
         (std::exp(-mu * (d0 - h)) - std::exp(-mu * (d0 + h))) / mu;
}

}  // namespace vlt
