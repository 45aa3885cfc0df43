#pragma once

#include <stdexcept>

#include "vlt/config.hpp"
#include "vlt/dft.hpp"
#include "vlt/harmonic_stack.hpp"
#include "vlt/image.hpp"
#include "vlt/sinogram.hpp"

namespace vlt {

/// Raised by synthesize when the stack is too far from conjugate-symmetric
/// to represent a real field.
struct ConjugateSymmetryError : std::runtime_error {
  explicit ConjugateSymmetryError(double asymmetry_)
      : std::runtime_error(
            "harmonic stack is not conjugate symmetric (relative imaginary "
            "residual " +
            std::to_string(asymmetry_) + ")"),
        asymmetry(asymmetry_) {}
  double asymmetry;
};

/// Angular decomposition of the data: column by column forward DFT over the
/// vertex angle, normalized by 1/P.  Output has P rows (wrap-around harmonic
/// order) and Q + 1 columns.
HarmonicStack analyze(const VSinogram& sino,
                      DftRoute route = DftRoute::kMixedRadix);

/// Inverse of analyze for real fields: unnormalized inverse DFT down each
/// column.  The result must be real up to rounding; a relative imaginary
/// residual above 1e-8 throws ConjugateSymmetryError.  Works for any column
/// count (data profiles or reconstructed radial profiles).
PolarImage synthesize(const HarmonicStack& stack, double radius_R,
                      DftRoute route = DftRoute::kMixedRadix);

/// Turns data harmonics into the right-hand side of the radial integral
/// equation: multiplies column q by (1/2) e^{mu sqrt(R^2 - s_q^2)} and drops
/// the final column (s_Q = R carries no interior information).  Input must
/// have Q + 1 columns; output has Q.
HarmonicStack scale_to_abel_rhs(const HarmonicStack& stack,
                                const ScanConfig& cfg);

}  // namespace vlt
