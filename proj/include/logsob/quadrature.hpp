#pragma once

#include <vector>

#include "logsob/grid.hpp"

namespace logsob {

// Surface measure of the unit sphere: 2 (d=1), 2*pi (d=2).
double sphere_measure(int dim);

inline constexpr double kSupportRadiusLog = 1.0 / 3.0;   // log-kernel ball
inline constexpr double kSupportRadiusMoment = 0.5;      // cosine-moment ball

// Log-radial quadrature on the annulus {r_min < |h| < R}: midpoint rule in
// log r, uniform directions. Radial nodes are geometric,
//   r_j = r_min * (R/r_min)^((j+1/2)/n_radial).
struct RadialScheme {
  int dim = 1;
  double r_min = 1e-4;
  double outer_radius = kSupportRadiusLog;
  int n_radial = 256;
  int n_angular = 2;
  double log_step = 0.0;                 // panel width in log r
  std::vector<double> radii;             // strictly increasing midpoints
  std::vector<Point> directions;         // unit vectors
  std::vector<double> angular_weights;   // sum to sphere_measure(dim)

  // weight for the measure r^{d-1} dr, one radial panel (dr = r dlog r)
  double radial_weight(int j) const;
};

// throws std::invalid_argument unless 0 < r_min < R, n_radial >= 8,
// dim in {1,2} and the angular count suits the dimension
RadialScheme build_radial_scheme(double r_min, double outer_radius,
                                 int n_radial, int n_angular, int dim);

struct KernelSpec {
  enum class Kind { log_kernel, frac_kernel, truncated_log_kernel };

  Kind kind = Kind::log_kernel;
  double gamma = 0.5;  // log order (log_kernel)
  double p = 1.0;      // integrability exponent
  double s = 0.5;      // fractional order (frac_kernel)
  double outer_radius = kSupportRadiusLog;

  static KernelSpec log_kernel(double gamma, double p,
                               double outer_radius = kSupportRadiusLog);
  static KernelSpec frac_kernel(double s, double p, double outer_radius);
  static KernelSpec truncated_log_kernel(double p,
                                         double outer_radius = kSupportRadiusLog);

  // exponent on log(1/|h|): p*gamma - 1 for log_kernel, p - 1 for the
  // truncated variant
  double log_exponent() const;
  // kernel density at radius r
  double density(double r, int dim) const;
};

// Numerical mass of the kernel over the scheme's annulus. The scheme and the
// spec must share the outer radius; log kernels additionally need R < 1 so
// the logarithm stays positive.
double kernel_mass(const KernelSpec& spec, const RadialScheme& scheme);

// sigma_{d-1}/(p*gamma) * [log(1/r_min)^{p*gamma} - log(1/R)^{p*gamma}]
double log_kernel_mass_closed_form(int dim, double p, double gamma,
                                   double r_min, double outer_radius);
// sigma_{d-1}/(p*s) * [r_min^{-p*s} - R^{-p*s}]
double frac_kernel_mass_closed_form(int dim, double p, double s, double r_min,
                                    double outer_radius);

}  // namespace logsob
