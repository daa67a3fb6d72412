#pragma once

// Verification-only reference computations, deliberately independent of the
// production kernels: direct all-pairs summation over lattice offsets, and
// one-dimensional quadrature of the explicit indicator integrals.

#include <cmath>
#include <cstdint>
#include <functional>

#include "logsob/grid.hpp"

namespace logsob::oracle {

// Direct double sum over grid pairs. The h-integral is discretized by lattice
// offsets; each offset is weighted by the kernel density at its radius times
// the overlap of its half-cell band with the annulus (r_lo, r_hi).
template <class Kernel, class Phi>
double pair_sum_pth(const SampledFunction& f, Kernel&& kernel, double r_lo,
                    double r_hi, Phi&& phi) {
  const Domain& dom = f.domain;
  const int n = dom.points_per_axis;
  const double dx = dom.spacing();
  const double cell = std::pow(dx, dom.dim);
  const int maxoff = static_cast<int>(std::floor(r_hi / dx + 0.5));

  auto value_at = [&](int ix, int iy) {
    if (ix < 0 || ix >= n) return 0.0;
    if (dom.dim == 2 && (iy < 0 || iy >= n)) return 0.0;
    return dom.dim == 1 ? f.values[static_cast<std::size_t>(ix)]
                        : f.values[static_cast<std::size_t>(iy) * n + ix];
  };
  auto band_overlap = [&](double rho) {
    const double lo = std::max(rho - 0.5 * dx, r_lo);
    const double hi = std::min(rho + 0.5 * dx, r_hi);
    return std::max(0.0, hi - lo);
  };

  double total = 0.0;
  if (dom.dim == 1) {
    for (int k = 1; k <= maxoff; ++k) {
      const double rho = k * dx;
      const double len = band_overlap(rho);
      if (len <= 0.0) continue;
      const double w = kernel(rho) * len;
      double sum_k = 0.0;
      for (int i = -maxoff; i < n + maxoff; ++i) {
        const double fx = value_at(i, 0);
        sum_k += phi(value_at(i + k, 0) - fx) + phi(value_at(i - k, 0) - fx);
      }
      total += w * sum_k;
    }
    return total * cell;
  }
  for (int oy = -maxoff; oy <= maxoff; ++oy)
    for (int ox = -maxoff; ox <= maxoff; ++ox) {
      if (ox == 0 && oy == 0) continue;
      const double rho = std::hypot(ox * dx, oy * dx);
      const double frac = band_overlap(rho) / dx;
      if (frac <= 0.0) continue;
      const double w = kernel(rho) * cell * frac;
      double sum_o = 0.0;
      for (int iy = -maxoff; iy < n + maxoff; ++iy)
        for (int ix = -maxoff; ix < n + maxoff; ++ix)
          sum_o += phi(value_at(ix + ox, iy + oy) - value_at(ix, iy));
      total += w * sum_o;
    }
  return total * cell;
}

// Exact one-dimensional reduction for the centered interval indicator:
// the x-integral of |1_B(x+h) - 1_B(x)|^p is 2 min(|h|, 2r), so the whole
// double integral collapses to a single h-integral done here by Simpson.
inline double indicator_pth_exact(double r,
                                  const std::function<double(double)>& kernel,
                                  double r_lo, double r_hi) {
  auto integrate = [&](double a, double b) {
    if (!(b > a)) return 0.0;
    const int panels = 20000;
    const double h = (b - a) / (2 * panels);
    auto g = [&](double t) { return std::min(t, 2.0 * r) * kernel(t); };
    double s = g(a) + g(b);
    for (int i = 1; i < 2 * panels; ++i)
      s += g(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  const double split = std::min(std::max(2.0 * r, r_lo), r_hi);
  return 4.0 * (integrate(r_lo, split) + integrate(split, r_hi));
}

inline double indicator_x_pth_exact(double r, double p, double gamma,
                                    double r_lo, double r_hi) {
  return indicator_pth_exact(
      r,
      [p, gamma](double t) {
        return std::pow(std::log(1.0 / t), p * gamma - 1.0) / t;
      },
      r_lo, r_hi);
}

inline double indicator_frac_pth_exact(double r, double p, double s,
                                       double r_lo, double r_hi) {
  return indicator_pth_exact(
      r, [p, s](double t) { return std::pow(t, -1.0 - p * s); }, r_lo, r_hi);
}

}  // namespace logsob::oracle
