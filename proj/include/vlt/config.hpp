#pragma once

#include <string>
#include <vector>

namespace vlt {

/// Acquisition geometry and physics parameters shared by the simulation and
/// reconstruction paths.
///
/// The detector vertex moves on the circle of radius R; data are sampled at P
/// vertex angles phi_p = 2 pi p / P and Q + 1 half opening angles psi_q with
/// sin(psi_q) = q / Q.  Images live on a (2M+1)^2 Cartesian grid covering
/// [-R, R]^2 and are supported inside the open disc of radius R.
///
/// lambda holds one Tikhonov parameter per angular harmonic, stored in
/// wrap-around DFT order: entry k regularizes harmonic harmonic_of_row(k).
struct ScanConfig {
  double radius_R = 8.0;  // cm
  double mu = 0.15;       // attenuation, 1/cm
  int P = 100;            // vertex angles
  int Q = 100;            // radial / opening-angle samples
  int M = 100;            // Cartesian grid half-width
  std::vector<double> lambda;

  double vertex_angle(int p) const;  // phi_p = 2 pi p / P
  double s(int q) const;             // s_q = q R / Q
  double psi(int q) const;           // arcsin(s_q / R)
  double r_mid(int j) const;         // r_j = (j + 1/2) R / Q

  /// Row k of a P-row harmonic stack holds harmonic n = k for k < P/2 and
  /// n = k - P otherwise.
  int harmonic_of_row(int k) const;
  int row_of_harmonic(int n) const;

  /// lambda = 0 for harmonic 0 and a constant for every other harmonic.
  static ScanConfig with_uniform_lambda(double radius_R, double mu, int P,
                                        int Q, int M, double lambda_scalar,
                                        double lambda_zero = 0.0);
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

/// Structural checks.  A product mu * R above 3/2 only warns: beyond that
/// bound unique invertibility of the transform is no longer guaranteed, but
/// the pipeline still runs.
ValidationReport validate_config(const ScanConfig& cfg);

/// Throws std::invalid_argument with the first validation error.
void require_valid(const ScanConfig& cfg);

}  // namespace vlt
