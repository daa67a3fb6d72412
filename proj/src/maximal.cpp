#include "logsob/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kernel_engine.hpp"
#include "logsob/reduce.hpp"
#include "logsob/rng.hpp"

namespace logsob {

namespace {

constexpr double kDegenerate = 1e-12;
constexpr double kExpClamp = 700.0;  // exp stays representable below this

// dyadic radii dx * 2^k up to the box diameter
std::vector<int> dyadic_cell_radii(const Domain& dom) {
  std::vector<int> radii;
  for (int r = 1; r <= dom.points_per_axis; r *= 2) radii.push_back(r);
  return radii;
}

// lattice offsets with |o| < radius (open balls: radius 1 is the node alone)
struct BallOffsets {
  std::vector<int> dx;
  std::vector<int> dy;
};

BallOffsets ball_offsets(int cell_radius, int dim) {
  BallOffsets b;
  if (dim == 1) {
    for (int o = -(cell_radius - 1); o <= cell_radius - 1; ++o) {
      b.dx.push_back(o);
      b.dy.push_back(0);
    }
    return b;
  }
  const std::int64_t r2 = static_cast<std::int64_t>(cell_radius) * cell_radius;
  for (int oy = -(cell_radius - 1); oy <= cell_radius - 1; ++oy)
    for (int ox = -(cell_radius - 1); ox <= cell_radius - 1; ++ox)
      if (static_cast<std::int64_t>(ox) * ox +
              static_cast<std::int64_t>(oy) * oy < r2) {
        b.dx.push_back(ox);
        b.dy.push_back(oy);
      }
  return b;
}

double value_at(const std::vector<double>& v, int n, int dim, int ix, int iy) {
  if (ix < 0 || ix >= n) return 0.0;
  if (dim == 2 && (iy < 0 || iy >= n)) return 0.0;
  return dim == 1 ? v[static_cast<std::size_t>(ix)]
                  : v[static_cast<std::size_t>(iy) * n + ix];
}

template <class PerRadius>
PointFunctional radius_sweep(const SampledFunction& f,
                             PointFunctional::Kind kind,
                             const SeminormParams& params, PerRadius&& term) {
  const Domain& dom = f.domain;
  const int n = dom.points_per_axis;
  const auto radii = dyadic_cell_radii(dom);
  std::vector<BallOffsets> balls;
  balls.reserve(radii.size());
  for (int r : radii) balls.push_back(ball_offsets(r, dom.dim));

  PointFunctional out;
  out.domain = dom;
  out.kind = kind;
  out.params = params;
  out.values.assign(static_cast<std::size_t>(dom.node_count()), 0.0);
  const std::int64_t count = dom.node_count();
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < count; ++e) {
    const int ix = static_cast<int>(dom.dim == 1 ? e : e % n);
    const int iy = static_cast<int>(dom.dim == 1 ? 0 : e / n);
    const double fx = f.values[static_cast<std::size_t>(e)];
    double best = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const double radius = radii[k] * dom.spacing();
      const auto& ball = balls[k];
      double acc = 0.0;
      for (std::size_t t = 0; t < ball.dx.size(); ++t)
        acc += term(fx, value_at(f.values, n, dom.dim, ix + ball.dx[t],
                                 iy + ball.dy[t]),
                    radius);
      best = std::max(best, acc / static_cast<double>(ball.dx.size()));
    }
    out.values[static_cast<std::size_t>(e)] = best;
  }
  return out;
}

}  // namespace

double PointFunctional::evaluate(const Point& x) const {
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

double PointFunctional::lp_norm(double p) const {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  const double cell = std::pow(domain.spacing(), domain.dim);
  const auto& v = values;
  const double s = block_sum(static_cast<std::int64_t>(v.size()),
                             [&](std::int64_t i) {
                               return p == 2.0 ? v[i] * v[i]
                                               : std::pow(std::abs(v[i]), p);
                             });
  return std::pow(s * cell, 1.0 / p);
}

PointFunctional lusin_functional(const SampledFunction& f,
                                 const SeminormParams& params,
                                 const RadialScheme& scheme) {
  if (std::abs(scheme.outer_radius - kSupportRadiusLog) > 1e-12)
    throw std::invalid_argument("lusin_functional: scheme radius must be 1/3");
  if (!(params.gamma > 0.0) || !(params.p > 0.0))
    throw std::invalid_argument("lusin_functional: need gamma, p > 0");
  const double e = params.p * params.gamma - 1.0;
  const auto tab = detail::make_offset_table(
      f.domain, scheme,
      [e](double r) { return std::pow(std::log(1.0 / r), e); });
  auto sums =
      detail::inner_sums(f, tab, tab.max_abs, detail::PowerPhi{params.p});
  PointFunctional out;
  out.domain = enlarged(f.domain, tab.max_abs * f.domain.spacing());
  out.kind = PointFunctional::Kind::lusin_L;
  out.params = params;
  out.values = std::move(sums);
  const double inv_p = 1.0 / params.p;
  for (auto& v : out.values) v = std::pow(v, inv_p);
  return out;
}

PointFunctional frac_functional(const SampledFunction& f,
                                const SeminormParams& params,
                                const RadialScheme& scheme) {
  if (!(params.s > 0.0) || !(params.s < 1.0) || !(params.p >= 1.0))
    throw std::invalid_argument("frac_functional: need s in (0,1), p >= 1");
  const double ps = params.p * params.s;
  const auto tab = detail::make_offset_table(
      f.domain, scheme, [ps](double r) { return std::pow(r, -ps); });
  auto sums =
      detail::inner_sums(f, tab, tab.max_abs, detail::PowerPhi{params.p});
  const double tail_factor = std::pow(2.0, params.p) *
                             sphere_measure(f.domain.dim) /
                             (ps * std::pow(scheme.outer_radius, ps));
  PointFunctional out;
  out.domain = enlarged(f.domain, tab.max_abs * f.domain.spacing());
  out.kind = PointFunctional::Kind::frac_D;
  out.params = params;
  out.values = std::move(sums);

  // per-node share of the far-field bound; integrates back to the total
  const int n = f.domain.points_per_axis;
  const int m = (out.domain.points_per_axis - n) / 2;
  const int ext = out.domain.points_per_axis;
  const std::int64_t count = out.domain.node_count();
  const double inv_p = 1.0 / params.p;
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < count; ++e) {
    const int gx = static_cast<int>(f.domain.dim == 1 ? e : e % ext) - m;
    const int gy = static_cast<int>(f.domain.dim == 1 ? 0 : e / ext) - m;
    const double fx = value_at(f.values, n, f.domain.dim, gx, gy);
    const double tail =
        tail_factor * (params.p == 1.0 ? std::abs(fx)
                                       : std::pow(std::abs(fx), params.p));
    out.values[static_cast<std::size_t>(e)] =
        std::pow(out.values[static_cast<std::size_t>(e)] + tail, inv_p);
  }
  return out;
}

PointFunctional hl_maximal(const SampledFunction& f) {
  return radius_sweep(f, PointFunctional::Kind::hl_maximal, SeminormParams{},
                      [](double, double fy, double) { return std::abs(fy); });
}

PointFunctional phi_star(const SampledFunction& f, double s, double q) {
  if (!(s > 0.0) || s > 1.0)
    throw std::invalid_argument("phi_star: need s in (0,1]");
  if (!(q >= 1.0)) throw std::invalid_argument("phi_star: need q >= 1");
  SeminormParams params;
  params.s = s;
  params.q = q;
  return radius_sweep(
      f, PointFunctional::Kind::phi_star, params,
      [s, q](double fx, double fy, double radius) {
        const double t = std::log1p(std::abs(fx - fy) / std::pow(radius, s));
        return q == 1.0 ? t : std::pow(t, q);
      });
}

PairSample make_pair_sample(const Domain& dom, int count, double delta_min,
                            double delta_max, std::uint64_t seed) {
  if (!(delta_min > 0.0) || !(delta_min < delta_max))
    throw std::invalid_argument("pair sample: need 0 < delta_min < delta_max");
  if (count < 1) throw std::invalid_argument("pair sample: need count >= 1");
  SplitMix64 rng(seed);
  PairSample out;
  out.delta_min = delta_min;
  out.delta_max = delta_max;
  out.seed = seed;
  out.pairs.reserve(static_cast<std::size_t>(count));
  const double L = dom.half_width;
  while (out.pairs.size() < static_cast<std::size_t>(count)) {
    Point x{rng.uniform(-L, L), dom.dim == 2 ? rng.uniform(-L, L) : 0.0};
    const double sep =
        std::exp(rng.uniform(std::log(delta_min), std::log(delta_max)));
    Point dir{1.0, 0.0};
    if (dom.dim == 1) {
      dir[0] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    } else {
      const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
      dir = {std::cos(theta), std::sin(theta)};
    }
    Point y{x[0] + sep * dir[0], x[1] + sep * dir[1]};
    bool ok = std::abs(y[0]) <= L && (dom.dim == 1 || std::abs(y[1]) <= L);
    if (ok) out.pairs.emplace_back(x, y);
  }
  return out;
}

namespace {

// Shared pair loop: numerator(x, y) over denominator(x, y), degenerate pairs
// skipped or flagged.
template <class Num, class Den>
PairRatio pair_max_ratio(const PairSample& pairs, Num&& num, Den&& den) {
  if (pairs.pairs.empty())
    throw std::invalid_argument("pair ratio: empty pair sample");
  double best = 0.0;
  std::int64_t used = 0, skipped = 0, violations = 0;
  const std::int64_t count = static_cast<std::int64_t>(pairs.pairs.size());
#pragma omp parallel for schedule(static) reduction(max : best) \
    reduction(+ : used, skipped, violations)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& [x, y] = pairs.pairs[static_cast<std::size_t>(i)];
    const double n = num(x, y);
    const double d = den(x, y);
    if (d < kDegenerate) {
      if (n < kDegenerate)
        ++skipped;
      else
        ++violations;
      continue;
    }
    ++used;
    best = std::max(best, n / d);
  }
  PairRatio out;
  out.used = used;
  out.skipped = skipped;
  out.violations = violations;
  out.max_ratio =
      violations > 0 ? std::numeric_limits<double>::infinity() : best;
  if (used == 0 && violations == 0 && skipped == 0)
    throw std::invalid_argument("pair ratio: no usable pairs");
  return out;
}

double distance(const Point& x, const Point& y, int dim) {
  return dim == 1 ? std::abs(x[0] - y[0])
                  : std::hypot(x[0] - y[0], x[1] - y[1]);
}

void check_pair_bounds(const PairSample& pairs, double limit) {
  if (!(pairs.delta_max < limit))
    throw std::invalid_argument("pair sample separation exceeds the valid range");
}

}  // namespace

PairRatio lusin_pair_ratio(const SampledFunction& f, const PointFunctional& L,
                           double gamma, const PairSample& pairs) {
  check_pair_bounds(pairs, 1.0 / 36.0);
  const int dim = f.domain.dim;
  return pair_max_ratio(
      pairs,
      [&](const Point& x, const Point& y) {
        const double d = distance(x, y, dim);
        return std::abs(f.evaluate(x) - f.evaluate(y)) *
               std::pow(std::log(1.0 / d), gamma);
      },
      [&](const Point& x, const Point& y) {
        return L.evaluate(x) + L.evaluate(y);
      });
}

PairRatio lusin_pair_ratio(const SampledFunction& f,
                           const SeminormParams& params,
                           const RadialScheme& scheme,
                           const PairSample& pairs) {
  const PointFunctional L = lusin_functional(f, params, scheme);
  return lusin_pair_ratio(f, L, params.gamma, pairs);
}

PairRatio holder_pair_ratio(const SampledFunction& f, const PointFunctional& D,
                            double s, const PairSample& pairs) {
  const int dim = f.domain.dim;
  return pair_max_ratio(
      pairs,
      [&](const Point& x, const Point& y) {
        return std::abs(f.evaluate(x) - f.evaluate(y));
      },
      [&](const Point& x, const Point& y) {
        return std::pow(distance(x, y, dim), s) *
               (D.evaluate(x) + D.evaluate(y));
      });
}

PairRatio holder_pair_ratio(const SampledFunction& f,
                            const SeminormParams& params,
                            const RadialScheme& scheme,
                            const PairSample& pairs) {
  const PointFunctional D = frac_functional(f, params, scheme);
  return holder_pair_ratio(f, D, params.s, pairs);
}

PairRatio hajlasz_check(const SampledFunction& f, const CandidateWitness& w,
                        double s, const PairSample& pairs) {
  if (w.role != CandidateWitness::Role::hajlasz)
    throw std::invalid_argument("hajlasz_check: witness role mismatch");
  for (double g : w.g.values)
    if (g < 0.0)
      throw std::invalid_argument("hajlasz_check: witness must be nonnegative");
  const int dim = f.domain.dim;
  std::int64_t clamped = 0;
  const std::int64_t count = static_cast<std::int64_t>(pairs.pairs.size());
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& [x, y] = pairs.pairs[static_cast<std::size_t>(i)];
    if (w.g.evaluate(x) + w.g.evaluate(y) > kExpClamp) ++clamped;
  }
  PairRatio out = pair_max_ratio(
      pairs,
      [&](const Point& x, const Point& y) {
        return std::abs(f.evaluate(x) - f.evaluate(y));
      },
      [&](const Point& x, const Point& y) {
        const double e = std::min(w.g.evaluate(x) + w.g.evaluate(y), kExpClamp);
        return std::pow(distance(x, y, dim), s) * std::expm1(e);
      });
  out.clamped = clamped;
  return out;
}

ConverseResult lusin_converse_seminorm(const SampledFunction& f,
                                       const CandidateWitness& w, double gamma,
                                       double alpha,
                                       const SeminormParams& params,
                                       const RadialScheme& scheme,
                                       const PairSample& pairs) {
  if (w.role != CandidateWitness::Role::lusin_converse)
    throw std::invalid_argument("lusin_converse: witness role mismatch");
  if (!(alpha > 0.0) || !(alpha < gamma))
    throw std::invalid_argument("lusin_converse: need 0 < alpha < gamma");
  const int dim = f.domain.dim;
  std::int64_t bad = 0;
  for (const auto& [x, y] : pairs.pairs) {
    const double d = distance(x, y, dim);
    const double rhs = std::pow(std::log(1.0 / d), -gamma) *
                       (w.g.evaluate(x) + w.g.evaluate(y));
    if (std::abs(f.evaluate(x) - f.evaluate(y)) > rhs + kDegenerate) ++bad;
  }
  SeminormParams at_alpha = params;
  at_alpha.gamma = alpha;
  const double s = x_seminorm(f, at_alpha, scheme);
  const double gnorm = lp_norm(w.g, params.p);
  ConverseResult out;
  out.seminorm_pth = std::pow(s, params.p);
  out.bound = std::pow(gnorm, params.p) / (params.p * (gamma - alpha));
  out.hypothesis_violations = bad;
  out.hypothesis_ok = bad == 0;
  return out;
}

namespace serial {

PointFunctional phi_star(const SampledFunction& f, double s, double q) {
  const Domain& dom = f.domain;
  const int n = dom.points_per_axis;
  PointFunctional out;
  out.domain = dom;
  out.kind = PointFunctional::Kind::phi_star;
  out.params.s = s;
  out.params.q = q;
  out.values.assign(static_cast<std::size_t>(dom.node_count()), 0.0);
  for (std::int64_t e = 0; e < dom.node_count(); ++e) {
    const int ix = static_cast<int>(dom.dim == 1 ? e : e % n);
    const int iy = static_cast<int>(dom.dim == 1 ? 0 : e / n);
    const double fx = f.values[static_cast<std::size_t>(e)];
    double best = 0.0;
    for (int radius = 1; radius <= n; radius *= 2) {
      const double r = radius * dom.spacing();
      double acc = 0.0;
      std::int64_t cnt = 0;
      for (int oy = -(radius - 1); oy <= radius - 1; ++oy) {
        if (dom.dim == 1 && oy != 0) continue;
        for (int ox = -(radius - 1); ox <= radius - 1; ++ox) {
          if (dom.dim == 2 &&
              static_cast<std::int64_t>(ox) * ox +
                      static_cast<std::int64_t>(oy) * oy >=
                  static_cast<std::int64_t>(radius) * radius)
            continue;
          const double fy = value_at(f.values, n, dom.dim, ix + ox, iy + oy);
          acc += std::pow(std::log1p(std::abs(fx - fy) / std::pow(r, s)), q);
          ++cnt;
        }
      }
      best = std::max(best, acc / static_cast<double>(cnt));
    }
    out.values[static_cast<std::size_t>(e)] = best;
  }
  return out;
}

PointFunctional hl_maximal(const SampledFunction& f) {
  const Domain& dom = f.domain;
  const int n = dom.points_per_axis;
  PointFunctional out;
  out.domain = dom;
  out.kind = PointFunctional::Kind::hl_maximal;
  out.values.assign(static_cast<std::size_t>(dom.node_count()), 0.0);
  for (std::int64_t e = 0; e < dom.node_count(); ++e) {
    const int ix = static_cast<int>(dom.dim == 1 ? e : e % n);
    const int iy = static_cast<int>(dom.dim == 1 ? 0 : e / n);
    double best = 0.0;
    for (int radius = 1; radius <= n; radius *= 2) {
      double acc = 0.0;
      std::int64_t cnt = 0;
      for (int oy = -(radius - 1); oy <= radius - 1; ++oy) {
        if (dom.dim == 1 && oy != 0) continue;
        for (int ox = -(radius - 1); ox <= radius - 1; ++ox) {
          if (dom.dim == 2 &&
              static_cast<std::int64_t>(ox) * ox +
                      static_cast<std::int64_t>(oy) * oy >=
                  static_cast<std::int64_t>(radius) * radius)
            continue;
          acc += std::abs(value_at(f.values, n, dom.dim, ix + ox, iy + oy));
          ++cnt;
        }
      }
      best = std::max(best, acc / static_cast<double>(cnt));
    }
    out.values[static_cast<std::size_t>(e)] = best;
  }
  return out;
}

}  // namespace serial

}  // namespace logsob
