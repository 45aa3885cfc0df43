#include "vlt/dft.hpp"

#include <cstddef>
#include <stdexcept>

#include "vlt/geometry.hpp"

namespace vlt {
namespace {

using cplx = std::complex<double>;

int smallest_prime_factor(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

// e^{sign 2 pi i index / n} with the index reduced mod n first, so the
// argument passed to sin/cos never grows with the transform size.
cplx twiddle(long long index, int n, double sign) {
  long long m = index % n;
  if (m < 0) m += n;
  return std::polar(1.0, sign * kTwoPi * static_cast<double>(m) / n);
}

void dft_direct(const cplx* x, int n, int stride, cplx* out, double sign) {
  for (int k = 0; k < n; ++k) {
    cplx acc{0.0, 0.0};
    for (int p = 0; p < n; ++p)
      acc += x[static_cast<std::size_t>(p) * stride] *
             twiddle(static_cast<long long>(p) * k, n, sign);
    out[k] = acc;
  }
}

// Decimation in time over the smallest prime factor r: with p = r t + j,
// X_k = sum_j w_n^{jk} Y_j[k mod m] where Y_j is the length-m transform of
// the j-th stride-r subsequence.  Prime lengths fall back to the direct sum.
void dft_recursive(const cplx* x, int n, int stride, cplx* out, double sign) {
  if (n == 1) {
    out[0] = x[0];
    return;
  }
  const int r = smallest_prime_factor(n);
  if (r == n) {
    dft_direct(x, n, stride, out, sign);
    return;
  }
  const int m = n / r;
  std::vector<cplx> sub(static_cast<std::size_t>(n));
  for (int j = 0; j < r; ++j)
    dft_recursive(x + static_cast<std::size_t>(j) * stride, m, stride * r,
                  sub.data() + static_cast<std::size_t>(j) * m, sign);
  for (int k = 0; k < n; ++k) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < r; ++j)
      acc += twiddle(static_cast<long long>(j) * k, n, sign) *
             sub[static_cast<std::size_t>(j) * m + (k % m)];
    out[k] = acc;
  }
}

std::vector<cplx> transform(const std::vector<cplx>& x, DftRoute route,
                            double sign) {
  if (x.empty()) throw std::invalid_argument("dft: empty input");
  std::vector<cplx> out(x.size());
  const int n = static_cast<int>(x.size());
  if (route == DftRoute::kDirect)
    dft_direct(x.data(), n, 1, out.data(), sign);
  else
    dft_recursive(x.data(), n, 1, out.data(), sign);
  return out;
}

}  // namespace

std::vector<cplx> dft_forward(const std::vector<cplx>& x, DftRoute route) {
  return transform(x, route, -1.0);
}

std::vector<cplx> dft_inverse(const std::vector<cplx>& x, DftRoute route) {
  return transform(x, route, +1.0);
}

}  // namespace vlt
