#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace logsob {

// A point in the ambient space. Only the first `dim` coordinates are used.
using Point = std::array<double, 2>;

double norm2(const Point& x, int dim);

// Uniform cell-centered grid on the box [-L, L]^d, d in {1, 2}.
struct Domain {
  int dim = 1;
  double half_width = 1.0;
  int points_per_axis = 64;

  Domain() = default;
  Domain(int d, double L, int n);  // throws std::invalid_argument on bad input

  double spacing() const { return 2.0 * half_width / points_per_axis; }
  std::int64_t node_count() const;
  double axis_coord(int i) const { return -half_width + (i + 0.5) * spacing(); }
  std::int64_t flat_index(int ix, int iy = 0) const;
  Point node(std::int64_t flat) const;

  bool operator==(const Domain&) const = default;
};

// Grow the box by ceil(margin/spacing) cells per side; cell centers of the
// original grid stay cell centers of the enlarged one.
Domain enlarged(const Domain& dom, double margin);
int margin_cells(const Domain& dom, double margin);

struct AnalyticFunction {
  enum class Kind { constant, gaussian, indicator_ball, step_sum, trig_poly };

  Kind kind = Kind::constant;
  double value = 0.0;       // constant
  double sigma = 1.0;       // gaussian
  double radius = 0.25;     // indicator_ball
  int steps = 1;            // step_sum: alternating +-1 on (k/M, (k+1)/M]
  int degree = 1;           // trig_poly: sine series up to this index
  std::uint64_t seed = 0;   // trig_poly coefficients

  static AnalyticFunction constant(double c);
  static AnalyticFunction gaussian(double sigma);
  static AnalyticFunction indicator_ball(double r);
  static AnalyticFunction step_sum(int steps);
  static AnalyticFunction trig_poly(std::uint64_t seed, int degree);

  std::string describe() const;
};

// Function sampled at cell centers; evaluation outside the box returns 0.
struct SampledFunction {
  Domain domain;
  std::vector<double> values;

  // nearest-cell lookup inside the box, 0 outside
  double evaluate(const Point& x) const;
};

// Sine-series coefficients for trig_poly, deterministic in the seed.
std::vector<double> trig_coefficients(std::uint64_t seed, int degree);

SampledFunction sample(const AnalyticFunction& g, const Domain& dom);
SampledFunction sample(const Domain& dom,
                       const std::function<double(const Point&)>& fn);

// Exact (off-grid) evaluation of an analytic function on a given box.
std::function<double(const Point&)> evaluator(const AnalyticFunction& g,
                                              const Domain& dom);
// Analytic gradient; only smooth kinds (constant, gaussian, trig_poly).
std::function<Point(const Point&)> analytic_gradient(const AnalyticFunction& g,
                                                     const Domain& dom);

double lp_norm(const SampledFunction& f, double p);
double weak_lp_quasinorm(const SampledFunction& f, double p);

}  // namespace logsob
