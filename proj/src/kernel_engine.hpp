#pragma once

// Internal: turns a radial scheme into integer lattice offsets with merged
// weights, and runs the (x, h) double sums over the zero-extended grid.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "logsob/grid.hpp"
#include "logsob/quadrature.hpp"
#include "logsob/reduce.hpp"

namespace logsob::detail {

struct OffsetTable {
  std::vector<int> dx;
  std::vector<int> dy;          // zero-filled for d=1
  std::vector<double> weight;   // merged over scheme nodes sharing an offset
  int max_abs = 0;
};

// radial_factor(r) is the kernel with the |h|^{-d} already cancelled against
// the annulus measure: log(1/r)^e for log kernels, r^{-ps} for fractional.
inline OffsetTable make_offset_table(
    const Domain& dom, const RadialScheme& scheme,
    const std::function<double(double)>& radial_factor) {
  const double dx = dom.spacing();
  const int cap = static_cast<int>(
      std::floor(0.5 + scheme.outer_radius / dx)) + 1;
  const int side = 2 * cap + 1;
  std::vector<double> dense(static_cast<std::size_t>(side) *
                                (dom.dim == 2 ? side : 1),
                            0.0);
  for (int j = 0; j < scheme.n_radial; ++j) {
    const double r = scheme.radii[static_cast<std::size_t>(j)];
    const double base = radial_factor(r) * scheme.log_step;
    for (int a = 0; a < scheme.n_angular; ++a) {
      const Point& u = scheme.directions[static_cast<std::size_t>(a)];
      const int ox = static_cast<int>(std::floor(0.5 + r * u[0] / dx));
      const int oy = dom.dim == 2
                         ? static_cast<int>(std::floor(0.5 + r * u[1] / dx))
                         : 0;
      const double w =
          base * scheme.angular_weights[static_cast<std::size_t>(a)];
      const std::size_t slot =
          dom.dim == 1 ? static_cast<std::size_t>(ox + cap)
                       : static_cast<std::size_t>(oy + cap) * side + (ox + cap);
      dense[slot] += w;
    }
  }
  OffsetTable tab;
  if (dom.dim == 1) {
    for (int o = -cap; o <= cap; ++o) {
      const double w = dense[static_cast<std::size_t>(o + cap)];
      if (w != 0.0) {
        tab.dx.push_back(o);
        tab.dy.push_back(0);
        tab.weight.push_back(w);
        tab.max_abs = std::max(tab.max_abs, std::abs(o));
      }
    }
  } else {
    for (int oy = -cap; oy <= cap; ++oy)
      for (int ox = -cap; ox <= cap; ++ox) {
        const double w =
            dense[static_cast<std::size_t>(oy + cap) * side + (ox + cap)];
        if (w != 0.0) {
          tab.dx.push_back(ox);
          tab.dy.push_back(oy);
          tab.weight.push_back(w);
          tab.max_abs =
              std::max({tab.max_abs, std::abs(ox), std::abs(oy)});
        }
      }
  }
  return tab;
}

// phi maps a difference to the integrand value (|t|^p, 1 ^ |t|^q, ...).
template <class Phi>
double inner_sum_1d(const std::vector<double>& v, int n, int gi,
                    const OffsetTable& tab, Phi&& phi) {
  const double fx = (gi >= 0 && gi < n) ? v[static_cast<std::size_t>(gi)] : 0.0;
  double acc = 0.0;
  const std::size_t k_count = tab.weight.size();
  for (std::size_t k = 0; k < k_count; ++k) {
    const int idx = gi + tab.dx[k];
    const double fy =
        (idx >= 0 && idx < n) ? v[static_cast<std::size_t>(idx)] : 0.0;
    acc += phi(fy - fx) * tab.weight[k];
  }
  return acc;
}

template <class Phi>
double inner_sum_2d(const std::vector<double>& v, int n, int gx, int gy,
                    const OffsetTable& tab, Phi&& phi) {
  const bool in = gx >= 0 && gx < n && gy >= 0 && gy < n;
  const double fx =
      in ? v[static_cast<std::size_t>(gy) * n + gx] : 0.0;
  double acc = 0.0;
  const std::size_t k_count = tab.weight.size();
  for (std::size_t k = 0; k < k_count; ++k) {
    const int ix = gx + tab.dx[k];
    const int iy = gy + tab.dy[k];
    const double fy = (ix >= 0 && ix < n && iy >= 0 && iy < n)
                          ? v[static_cast<std::size_t>(iy) * n + ix]
                          : 0.0;
    acc += phi(fy - fx) * tab.weight[k];
  }
  return acc;
}

// Sum of the inner sums over the grid enlarged by `margin` cells per side,
// times the cell measure. Deterministic at any thread count.
template <class Phi>
double double_sum(const SampledFunction& f, const OffsetTable& tab, int margin,
                  Phi&& phi) {
  const int n = f.domain.points_per_axis;
  const double cell = std::pow(f.domain.spacing(), f.domain.dim);
  if (f.domain.dim == 1) {
    const std::int64_t ext = n + 2 * margin;
    return cell * block_sum(ext, [&](std::int64_t e) {
             return inner_sum_1d(f.values, n, static_cast<int>(e) - margin, tab,
                                 phi);
           });
  }
  const std::int64_t ext = n + 2 * margin;
  return cell * block_sum(ext * ext, [&](std::int64_t e) {
           const int gx = static_cast<int>(e % ext) - margin;
           const int gy = static_cast<int>(e / ext) - margin;
           return inner_sum_2d(f.values, n, gx, gy, tab, phi);
         });
}

// Per-node inner sums over the enlarged grid (row-major over that grid).
template <class Phi>
std::vector<double> inner_sums(const SampledFunction& f, const OffsetTable& tab,
                               int margin, Phi&& phi) {
  const int n = f.domain.points_per_axis;
  const std::int64_t ext = n + 2 * margin;
  if (f.domain.dim == 1) {
    std::vector<double> out(static_cast<std::size_t>(ext));
#pragma omp parallel for schedule(static)
    for (std::int64_t e = 0; e < ext; ++e)
      out[static_cast<std::size_t>(e)] =
          inner_sum_1d(f.values, n, static_cast<int>(e) - margin, tab, phi);
    return out;
  }
  std::vector<double> out(static_cast<std::size_t>(ext * ext));
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < ext * ext; ++e) {
    const int gx = static_cast<int>(e % ext) - margin;
    const int gy = static_cast<int>(e / ext) - margin;
    out[static_cast<std::size_t>(e)] =
        inner_sum_2d(f.values, n, gx, gy, tab, phi);
  }
  return out;
}

struct PowerPhi {
  double p;
  double operator()(double t) const {
    const double a = std::abs(t);
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    return a == 0.0 ? 0.0 : std::pow(a, p);
  }
};

struct TruncatedPhi {
  double q;
  double operator()(double t) const {
    const double a = std::abs(t);
    if (a >= 1.0) return 1.0;
    if (q == 1.0) return a;
    if (q == 2.0) return a * a;
    return a == 0.0 ? 0.0 : std::pow(a, q);
  }
};

}  // namespace logsob::detail
