#pragma once

#include <complex>
#include <vector>

#include "logsob/grid.hpp"
#include "logsob/quadrature.hpp"
#include "logsob/seminorms.hpp"

namespace logsob {

// Discrete spectrum |f^(xi_k)|^2 on the (optionally zero-padded) box,
// normalized so that sum power * freq_step^d equals ||f||_2^2 exactly
// (discrete Plancherel). Frequencies per axis: xi_k = pi k / L_pad,
// k = -N/2 .. N/2-1 with N = pad * n.
struct Spectrum {
  Domain domain;       // the sampling domain
  int pad = 2;         // zero-padding factor (power of two)
  int size_per_axis = 0;
  double freq_step = 0.0;
  std::vector<double> power;  // squared magnitudes, frequency-ordered

  double axis_freq(int i) const {  // i in [0, size_per_axis)
    return (i - size_per_axis / 2) * freq_step;
  }
  std::int64_t count() const;
  double freq_norm(std::int64_t flat) const;  // |xi| of a flat index
  double l2_squared() const;                  // sum power * freq_step^d
};

// Requires points_per_axis a power of two. pad >= 1 controls periodization:
// pad = 2 (default) transforms the function on a twice-larger box.
Spectrum compute_spectrum(const SampledFunction& f, int pad = 2);

// ||f||_2^2 + sum_{|xi_k| > 1} log(|xi_k|)^{2 gamma} |f^(xi_k)|^2 dxi^d
double spectral_x_norm_squared(const SampledFunction& f, double gamma,
                               int pad = 2);

// I(xi) = integral over the scheme annulus of (1 - cos(h.xi)) against the
// log kernel with exponent 2*gamma - 1.
double cos_kernel_moment(const Point& xi, double gamma,
                         const RadialScheme& scheme);
// Same, but enforces the moment ball radius 1/2.
double kernel_moment(const Point& xi, double gamma, const RadialScheme& scheme);

// (||f||_2^2 + x_seminorm(f, gamma, p=2)^2) / spectral_x_norm_squared
double equivalence_ratio(const SampledFunction& f, double gamma,
                         const RadialScheme& scheme_third, int pad = 2);

// In-place complex FFT, size a power of two (row-column for d=2 callers).
namespace detail {
void fft_inplace(std::vector<std::complex<double>>& a);
}

}  // namespace logsob
