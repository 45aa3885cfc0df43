#pragma once

#include "vlt/config.hpp"
#include "vlt/geometry.hpp"
#include "vlt/image.hpp"
#include "vlt/sinogram.hpp"

namespace vlt {

/// Bilinear interpolation of the pixel grid at an arbitrary point; zero
/// outside the grid (and hence outside the supported disc).
double bilinear_sample(const CartesianImage& img, Vec2 x);

/// Attenuated V-line integral for one vertex angle and half opening angle:
/// both branches leave the vertex R (cos phi, sin phi) in directions
/// -(cos(phi -+ psi), sin(phi -+ psi)) and are integrated against
/// e^{-mu r}.  Each branch is sampled at 2M + 1 equidistant points with step
/// R / M (M taken from the image), a plain Riemann sum.  At psi = 0 the two
/// coinciding branches are both counted, matching the transform's sum over
/// branches.
double forward_vline_point(const CartesianImage& img, double mu, double phi,
                           double psi);

/// Full simulated scan on the (phi_p, psi_q) grid of cfg.  The image raster
/// must match cfg (same R and M).
VSinogram forward_vline(const CartesianImage& img, const ScanConfig& cfg);

/// Exponential Radon transform along the line with unit normal
/// (cos alpha, sin alpha) at signed offset s, weight e^{nu t} in the
/// line parameter; midpoint rule with n_samples nodes on [-R, R].
double forward_exponential_radon(const CartesianImage& img, double nu,
                                 double alpha, double s, int n_samples);

/// Consistency check: a V-line value must equal e^{-mu R cos psi} times the
/// sum of two exponential Radon values taken at rotated angles
/// pi/2 + phi -+ psi and offsets +-R sin psi.  Returns the absolute
/// difference between the two evaluations, which is pure discretization
/// error.
double vline_decomposition_residual(const CartesianImage& img, double mu,
                                    double phi, double psi,
                                    int n_samples = 4001);

}  // namespace vlt
