#include "logsob/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logsob {

double sphere_measure(int dim) {
  if (dim == 1) return 2.0;
  if (dim == 2) return 2.0 * std::numbers::pi;
  throw std::invalid_argument("sphere_measure: dim must be 1 or 2");
}

double RadialScheme::radial_weight(int j) const {
  const double r = radii[static_cast<std::size_t>(j)];
  return (dim == 1 ? r : r * r) * log_step;
}

RadialScheme build_radial_scheme(double r_min, double outer_radius,
                                 int n_radial, int n_angular, int dim) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("radial scheme: dim must be 1 or 2");
  if (!(r_min > 0.0) || !(r_min < outer_radius))
    throw std::invalid_argument("radial scheme: need 0 < r_min < outer_radius");
  if (n_radial < 8)
    throw std::invalid_argument("radial scheme: need at least 8 radial nodes");
  if (dim == 1 && n_angular != 2)
    throw std::invalid_argument("radial scheme: d=1 uses exactly 2 directions");
  if (dim == 2 && n_angular < 4)
    throw std::invalid_argument("radial scheme: d=2 needs >= 4 directions");

  RadialScheme s;
  s.dim = dim;
  s.r_min = r_min;
  s.outer_radius = outer_radius;
  s.n_radial = n_radial;
  s.n_angular = n_angular;
  s.log_step = std::log(outer_radius / r_min) / n_radial;
  s.radii.resize(static_cast<std::size_t>(n_radial));
  const double ratio = outer_radius / r_min;
  for (int j = 0; j < n_radial; ++j)
    s.radii[static_cast<std::size_t>(j)] =
        r_min * std::pow(ratio, (j + 0.5) / n_radial);

  s.directions.resize(static_cast<std::size_t>(n_angular));
  s.angular_weights.assign(static_cast<std::size_t>(n_angular),
                           sphere_measure(dim) / n_angular);
  if (dim == 1) {
    s.directions[0] = {1.0, 0.0};
    s.directions[1] = {-1.0, 0.0};
  } else {
    for (int a = 0; a < n_angular; ++a) {
      const double theta = 2.0 * std::numbers::pi * a / n_angular;
      s.directions[static_cast<std::size_t>(a)] = {std::cos(theta),
                                                   std::sin(theta)};
    }
  }
  return s;
}

KernelSpec KernelSpec::log_kernel(double gamma, double p, double outer_radius) {
  KernelSpec k;
  k.kind = Kind::log_kernel;
  k.gamma = gamma;
  k.p = p;
  k.outer_radius = outer_radius;
  return k;
}

KernelSpec KernelSpec::frac_kernel(double s, double p, double outer_radius) {
  KernelSpec k;
  k.kind = Kind::frac_kernel;
  k.s = s;
  k.p = p;
  k.outer_radius = outer_radius;
  return k;
}

KernelSpec KernelSpec::truncated_log_kernel(double p, double outer_radius) {
  KernelSpec k;
  k.kind = Kind::truncated_log_kernel;
  k.p = p;
  k.outer_radius = outer_radius;
  return k;
}

double KernelSpec::log_exponent() const {
  switch (kind) {
    case Kind::log_kernel: return p * gamma - 1.0;
    case Kind::truncated_log_kernel: return p - 1.0;
    case Kind::frac_kernel:
      throw std::invalid_argument("log_exponent: not a log kernel");
  }
  return 0.0;
}

double KernelSpec::density(double r, int dim) const {
  const double rd = dim == 1 ? r : r * r;
  if (kind == Kind::frac_kernel)
    return std::pow(r, -p * s) / rd;
  return std::pow(std::log(1.0 / r), log_exponent()) / rd;
}

double kernel_mass(const KernelSpec& spec, const RadialScheme& scheme) {
  if (std::abs(spec.outer_radius - scheme.outer_radius) > 1e-12)
    throw std::invalid_argument("kernel_mass: spec and scheme radii differ");
  if (spec.kind != KernelSpec::Kind::frac_kernel && !(spec.outer_radius < 1.0))
    throw std::invalid_argument(
        "kernel_mass: log kernels need outer radius < 1");
  double total = 0.0;
  for (int j = 0; j < scheme.n_radial; ++j) {
    const double r = scheme.radii[static_cast<std::size_t>(j)];
    const double w = scheme.radial_weight(j) * spec.density(r, scheme.dim);
    double ang = 0.0;
    for (double aw : scheme.angular_weights) ang += aw;
    total += w * ang;
  }
  return total;
}

double log_kernel_mass_closed_form(int dim, double p, double gamma,
                                   double r_min, double outer_radius) {
  const double pg = p * gamma;
  return sphere_measure(dim) / pg *
         (std::pow(std::log(1.0 / r_min), pg) -
          std::pow(std::log(1.0 / outer_radius), pg));
}

double frac_kernel_mass_closed_form(int dim, double p, double s, double r_min,
                                    double outer_radius) {
  const double ps = p * s;
  return sphere_measure(dim) / ps *
         (std::pow(r_min, -ps) - std::pow(outer_radius, -ps));
}

}  // namespace logsob
