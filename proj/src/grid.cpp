#include "logsob/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "logsob/reduce.hpp"
#include "logsob/rng.hpp"

namespace logsob {

double norm2(const Point& x, int dim) {
  return dim == 1 ? std::abs(x[0]) : std::hypot(x[0], x[1]);
}

Domain::Domain(int d, double L, int n) : dim(d), half_width(L), points_per_axis(n) {
  if (d != 1 && d != 2) throw std::invalid_argument("domain: dim must be 1 or 2");
  if (!(L > 0.0)) throw std::invalid_argument("domain: half_width must be positive");
  if (n < 16) throw std::invalid_argument("domain: points_per_axis must be >= 16");
}

std::int64_t Domain::node_count() const {
  std::int64_t n = points_per_axis;
  return dim == 1 ? n : n * n;
}

std::int64_t Domain::flat_index(int ix, int iy) const {
  return dim == 1 ? ix : static_cast<std::int64_t>(iy) * points_per_axis + ix;
}

Point Domain::node(std::int64_t flat) const {
  if (dim == 1) return {axis_coord(static_cast<int>(flat)), 0.0};
  const int ix = static_cast<int>(flat % points_per_axis);
  const int iy = static_cast<int>(flat / points_per_axis);
  return {axis_coord(ix), axis_coord(iy)};
}

int margin_cells(const Domain& dom, double margin) {
  return static_cast<int>(std::ceil(margin / dom.spacing() - 1e-12));
}

Domain enlarged(const Domain& dom, double margin) {
  const int m = margin_cells(dom, margin);
  Domain out = dom;
  out.points_per_axis = dom.points_per_axis + 2 * m;
  out.half_width = dom.half_width + m * dom.spacing();
  return out;
}

AnalyticFunction AnalyticFunction::constant(double c) {
  AnalyticFunction g;
  g.kind = Kind::constant;
  g.value = c;
  return g;
}

AnalyticFunction AnalyticFunction::gaussian(double sigma) {
  AnalyticFunction g;
  g.kind = Kind::gaussian;
  g.sigma = sigma;
  return g;
}

AnalyticFunction AnalyticFunction::indicator_ball(double r) {
  AnalyticFunction g;
  g.kind = Kind::indicator_ball;
  g.radius = r;
  return g;
}

AnalyticFunction AnalyticFunction::step_sum(int steps) {
  AnalyticFunction g;
  g.kind = Kind::step_sum;
  g.steps = steps;
  return g;
}

AnalyticFunction AnalyticFunction::trig_poly(std::uint64_t seed, int degree) {
  AnalyticFunction g;
  g.kind = Kind::trig_poly;
  g.seed = seed;
  g.degree = degree;
  return g;
}

std::string AnalyticFunction::describe() const {
  switch (kind) {
    case Kind::constant: return "constant(" + std::to_string(value) + ")";
    case Kind::gaussian: return "gaussian(sigma=" + std::to_string(sigma) + ")";
    case Kind::indicator_ball:
      return "indicator_ball(r=" + std::to_string(radius) + ")";
    case Kind::step_sum: return "step_sum(M=" + std::to_string(steps) + ")";
    case Kind::trig_poly:
      return "trig_poly(seed=" + std::to_string(seed) +
             ",degree=" + std::to_string(degree) + ")";
  }
  return "?";
}

std::vector<double> trig_coefficients(std::uint64_t seed, int degree) {
  SplitMix64 rng(seed);
  std::vector<double> b(static_cast<std::size_t>(degree));
  for (auto& c : b) c = rng.uniform(-1.0, 1.0);
  return b;
}

namespace {

void validate(const AnalyticFunction& g, const Domain& dom) {
  using Kind = AnalyticFunction::Kind;
  switch (g.kind) {
    case Kind::constant:
      break;
    case Kind::gaussian:
      if (!(g.sigma > 0.0))
        throw std::invalid_argument("gaussian: sigma must be positive");
      break;
    case Kind::indicator_ball:
      if (!(g.radius > 0.0) || g.radius >= dom.half_width)
        throw std::invalid_argument(
            "indicator_ball: radius must lie in (0, half_width)");
      break;
    case Kind::step_sum:
      if (g.steps < 1) throw std::invalid_argument("step_sum: steps must be >= 1");
      if (dom.dim != 1)
        throw std::invalid_argument("step_sum: one-dimensional only");
      if (dom.half_width < 1.0)
        throw std::invalid_argument(
            "step_sum: box must contain [0,1]; need half_width >= 1");
      break;
    case Kind::trig_poly:
      if (g.degree < 1)
        throw std::invalid_argument("trig_poly: degree must be >= 1");
      break;
  }
}

double step_sum_value(double x, int steps) {
  if (x < 0.0 || x > 1.0) return 0.0;
  // value on [k/M, (k+1)/M) is (-1)^k; right-continuous at the breakpoints
  int k = static_cast<int>(std::floor(x * steps));
  k = std::min(k, steps - 1);
  return (k % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

std::function<double(const Point&)> evaluator(const AnalyticFunction& g,
                                              const Domain& dom) {
  using Kind = AnalyticFunction::Kind;
  validate(g, dom);
  const int dim = dom.dim;
  switch (g.kind) {
    case Kind::constant: {
      const double c = g.value;
      return [c](const Point&) { return c; };
    }
    case Kind::gaussian: {
      const double inv2s2 = 1.0 / (2.0 * g.sigma * g.sigma);
      return [inv2s2, dim](const Point& x) {
        const double r2 = dim == 1 ? x[0] * x[0] : x[0] * x[0] + x[1] * x[1];
        return std::exp(-r2 * inv2s2);
      };
    }
    case Kind::indicator_ball: {
      const double r = g.radius;
      return [r, dim](const Point& x) {
        return norm2(x, dim) < r ? 1.0 : 0.0;
      };
    }
    case Kind::step_sum: {
      const int steps = g.steps;
      return [steps](const Point& x) { return step_sum_value(x[0], steps); };
    }
    case Kind::trig_poly: {
      const auto b = trig_coefficients(g.seed, g.degree);
      const double w0 = std::numbers::pi / dom.half_width;
      if (dim == 1) {
        return [b, w0](const Point& x) {
          double s = 0.0;
          for (std::size_t k = 0; k < b.size(); ++k)
            s += b[k] * std::sin((k + 1) * w0 * x[0]);
          return s;
        };
      }
      return [b, w0](const Point& x) {
        double s = 0.0;
        for (std::size_t k = 0; k < b.size(); ++k)
          s += b[k] * std::sin((k + 1) * w0 * x[0]) * std::sin((k + 1) * w0 * x[1]);
        return s;
      };
    }
  }
  throw std::invalid_argument("unknown analytic function kind");
}

std::function<Point(const Point&)> analytic_gradient(const AnalyticFunction& g,
                                                     const Domain& dom) {
  using Kind = AnalyticFunction::Kind;
  validate(g, dom);
  const int dim = dom.dim;
  switch (g.kind) {
    case Kind::constant:
      return [](const Point&) { return Point{0.0, 0.0}; };
    case Kind::gaussian: {
      const double inv_s2 = 1.0 / (g.sigma * g.sigma);
      const double inv2s2 = 0.5 * inv_s2;
      return [inv_s2, inv2s2, dim](const Point& x) {
        const double r2 = dim == 1 ? x[0] * x[0] : x[0] * x[0] + x[1] * x[1];
        const double f = std::exp(-r2 * inv2s2);
        Point grad{-x[0] * inv_s2 * f, 0.0};
        if (dim == 2) grad[1] = -x[1] * inv_s2 * f;
        return grad;
      };
    }
    case Kind::trig_poly: {
      const auto b = trig_coefficients(g.seed, g.degree);
      const double w0 = std::numbers::pi / dom.half_width;
      if (dim == 1) {
        return [b, w0](const Point& x) {
          double s = 0.0;
          for (std::size_t k = 0; k < b.size(); ++k) {
            const double w = (k + 1) * w0;
            s += b[k] * w * std::cos(w * x[0]);
          }
          return Point{s, 0.0};
        };
      }
      return [b, w0](const Point& x) {
        Point grad{0.0, 0.0};
        for (std::size_t k = 0; k < b.size(); ++k) {
          const double w = (k + 1) * w0;
          grad[0] += b[k] * w * std::cos(w * x[0]) * std::sin(w * x[1]);
          grad[1] += b[k] * w * std::sin(w * x[0]) * std::cos(w * x[1]);
        }
        return grad;
      };
    }
    default:
      throw std::invalid_argument(
          "analytic_gradient: function is not differentiable");
  }
}

SampledFunction sample(const Domain& dom,
                       const std::function<double(const Point&)>& fn) {
  SampledFunction f;
  f.domain = dom;
  f.values.resize(static_cast<std::size_t>(dom.node_count()));
  const std::int64_t count = dom.node_count();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    f.values[static_cast<std::size_t>(i)] = fn(dom.node(i));
  for (double v : f.values)
    if (!std::isfinite(v))
      throw std::invalid_argument("sample: non-finite value produced");
  return f;
}

SampledFunction sample(const AnalyticFunction& g, const Domain& dom) {
  return sample(dom, evaluator(g, dom));
}

double SampledFunction::evaluate(const Point& x) const {
  const double L = domain.half_width;
  const double dx = domain.spacing();
  const int n = domain.points_per_axis;
  int idx[2] = {0, 0};
  for (int a = 0; a < domain.dim; ++a) {
    if (std::abs(x[a]) > L) return 0.0;
    idx[a] = std::clamp(static_cast<int>(std::floor((x[a] + L) / dx)), 0, n - 1);
  }
  return values[static_cast<std::size_t>(domain.flat_index(idx[0], idx[1]))];
}

double lp_norm(const SampledFunction& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  const double cell = std::pow(f.domain.spacing(), f.domain.dim);
  const auto& v = f.values;
  double s;
  if (p == 1.0) {
    s = block_sum(static_cast<std::int64_t>(v.size()),
                  [&](std::int64_t i) { return std::abs(v[i]); });
  } else if (p == 2.0) {
    s = block_sum(static_cast<std::int64_t>(v.size()),
                  [&](std::int64_t i) { return v[i] * v[i]; });
  } else {
    s = block_sum(static_cast<std::int64_t>(v.size()), [&](std::int64_t i) {
      return std::pow(std::abs(v[i]), p);
    });
  }
  return std::pow(s * cell, 1.0 / p);
}

double weak_lp_quasinorm(const SampledFunction& f, double p) {
  if (!(p > 0.0))
    throw std::invalid_argument("weak_lp_quasinorm: p must be positive");
  std::vector<double> mags(f.values.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f.values[i]);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  const double cell = std::pow(f.domain.spacing(), f.domain.dim);
  double best = 0.0;
  // at each distinct level v, the super-level set {|f| >= v} has exactly
  // (last index of v) + 1 nodes
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (mags[i] == 0.0) break;
    if (i + 1 < mags.size() && mags[i + 1] == mags[i]) continue;
    const double measure = static_cast<double>(i + 1) * cell;
    best = std::max(best, mags[i] * std::pow(measure, 1.0 / p));
  }
  return best;
}

}  // namespace logsob
