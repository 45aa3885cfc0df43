#pragma once

#include <stdexcept>
#include <string>

#include "vlt/abel_kernel.hpp"
#include "vlt/harmonic_stack.hpp"
#include "vlt/image.hpp"
#include "vlt/sinogram.hpp"

namespace vlt {

/// Raised for missing files, malformed headers, payload size mismatches and
/// non-finite payload values.
struct ContainerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk container: <base>.json header plus <base>.f64le payload of raw
/// little-endian doubles, row-major, complex values interleaved re, im.
/// Every path argument may name the base, the .json file or the .f64le file.
void save_image(const std::string& path, const CartesianImage& img);
void save_sinogram(const std::string& path, const VSinogram& sino);
void save_harmonics(const std::string& path, const HarmonicStack& stack);
void save_polar(const std::string& path, const PolarImage& pol);
void save_kernel_matrix(const std::string& path, const AbelKernelMatrix& K,
                        double mu, double radius_R);

CartesianImage load_image(const std::string& path);
VSinogram load_sinogram(const std::string& path);
HarmonicStack load_harmonics(const std::string& path);
PolarImage load_polar(const std::string& path);

/// Reads just the "kind" field of a container header.
std::string peek_kind(const std::string& path);

/// 8-bit binary PGM with the value range mapped affinely onto 0..255
/// (all zero if the image is constant).  Lossy; meant for quick inspection.
void export_pgm(const std::string& path, const CartesianImage& img);

}  // namespace vlt
