// Serial reference kernels: plain nested loops over the scheme nodes, no
// offset merging, no threading. These pin down the parallel implementations.

#include <cmath>
#include <stdexcept>

#include "logsob/seminorms.hpp"

namespace logsob::serial {

namespace {

double lookup(const SampledFunction& f, const Point& x) {
  return f.evaluate(x);
}

template <class Phi>
double double_integral(const SampledFunction& f, const RadialScheme& scheme,
                       double log_exponent, bool frac, double ps, Phi phi) {
  const Domain& dom = f.domain;
  const double dx = dom.spacing();
  const int margin =
      static_cast<int>(std::floor(0.5 + scheme.outer_radius / dx)) + 1;
  const int n = dom.points_per_axis;
  const double cell = std::pow(dx, dom.dim);
  const int lo = -margin, hi = n + margin;

  double total = 0.0;
  auto node_term = [&](const Point& x, double fx) {
    double acc = 0.0;
    for (int j = 0; j < scheme.n_radial; ++j) {
      const double r = scheme.radii[static_cast<std::size_t>(j)];
      const double radial = frac ? std::pow(r, -ps)
                                 : std::pow(std::log(1.0 / r), log_exponent);
      for (int a = 0; a < scheme.n_angular; ++a) {
        const Point& u = scheme.directions[static_cast<std::size_t>(a)];
        Point y{x[0] + r * u[0], x[1] + r * u[1]};
        const double fy = lookup(f, y);
        acc += phi(fy - fx) * radial * scheme.log_step *
               scheme.angular_weights[static_cast<std::size_t>(a)];
      }
    }
    return acc;
  };

  if (dom.dim == 1) {
    for (int i = lo; i < hi; ++i) {
      const Point x{-dom.half_width + (i + 0.5) * dx, 0.0};
      const double fx = (i >= 0 && i < n)
                            ? f.values[static_cast<std::size_t>(i)]
                            : 0.0;
      total += node_term(x, fx);
    }
  } else {
    for (int iy = lo; iy < hi; ++iy)
      for (int ix = lo; ix < hi; ++ix) {
        const Point x{-dom.half_width + (ix + 0.5) * dx,
                      -dom.half_width + (iy + 0.5) * dx};
        const bool in = ix >= 0 && ix < n && iy >= 0 && iy < n;
        const double fx =
            in ? f.values[static_cast<std::size_t>(iy) * n + ix] : 0.0;
        total += node_term(x, fx);
      }
  }
  return total * cell;
}

struct PowerPhi {
  double p;
  double operator()(double t) const {
    return p == 1.0 ? std::abs(t)
                    : (p == 2.0 ? t * t : std::pow(std::abs(t), p));
  }
};

struct TruncPhi {
  double q;
  double operator()(double t) const {
    return std::min(1.0, std::pow(std::abs(t), q));
  }
};

}  // namespace

double x_seminorm(const SampledFunction& f, const SeminormParams& params,
                  const RadialScheme& scheme, bool allow_gamma_zero) {
  if (params.gamma < 0.0 || (params.gamma == 0.0 && !allow_gamma_zero))
    throw std::invalid_argument("x_seminorm: need gamma > 0");
  const double pth =
      double_integral(f, scheme, params.p * params.gamma - 1.0, false, 0.0,
                      PowerPhi{params.p});
  return std::pow(pth, 1.0 / params.p);
}

TailSeminorm w_seminorm(const SampledFunction& f, const SeminormParams& params,
                        const RadialScheme& scheme) {
  const double ps = params.p * params.s;
  const double main_pth =
      double_integral(f, scheme, 0.0, true, ps, PowerPhi{params.p});
  const double lp = logsob::lp_norm(f, params.p);
  const double tail = std::pow(2.0, params.p) * std::pow(lp, params.p) *
                      sphere_measure(f.domain.dim) /
                      (ps * std::pow(scheme.outer_radius, ps));
  TailSeminorm out;
  out.main_part = std::pow(main_pth, 1.0 / params.p);
  out.tail_bound = tail;
  out.value = std::pow(main_pth + tail, 1.0 / params.p);
  return out;
}

double truncated_q_seminorm(const SampledFunction& f,
                            const SeminormParams& params,
                            const RadialScheme& scheme) {
  return double_integral(f, scheme, params.p - 1.0, false, 0.0,
                         TruncPhi{params.q});
}

}  // namespace logsob::serial
