#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "logsob/grid.hpp"
#include "logsob/quadrature.hpp"
#include "logsob/seminorms.hpp"

namespace logsob {

// Per-grid-point functional values. The domain may be larger than the
// sampling box: the point functionals of a zero-extended function are
// supported on a margin shell around it, and keeping that shell makes
// ||functional||_p match the corresponding double integral exactly.
struct PointFunctional {
  enum class Kind { lusin_L, frac_D, phi_star, hl_maximal };

  Domain domain;
  std::vector<double> values;
  Kind kind = Kind::lusin_L;
  SeminormParams params;

  double evaluate(const Point& x) const;  // nearest cell, 0 outside
  double lp_norm(double p) const;
};

// L_{gamma,p} f: per node, the inner log-kernel integral to the 1/p power.
PointFunctional lusin_functional(const SampledFunction& f,
                                 const SeminormParams& params,
                                 const RadialScheme& scheme);

// D_{s,p} f: fractional analogue, same cutoff and tail policy as w_seminorm.
PointFunctional frac_functional(const SampledFunction& f,
                                const SeminormParams& params,
                                const RadialScheme& scheme);

// Hardy-Littlewood maximal function over dyadic radii {dx * 2^k} up to the
// box diameter. Discrete balls are open: radius dx contains the node alone.
PointFunctional hl_maximal(const SampledFunction& f);

// Phi*_{s,q} f(x): max over dyadic radii of the ball average of
// log(1 + |f(x)-f(y)| / r^s)^q.
PointFunctional phi_star(const SampledFunction& f, double s, double q);

// Seeded point pairs with separation in [delta_min, delta_max], log-uniform.
struct PairSample {
  std::vector<std::pair<Point, Point>> pairs;
  double delta_min = 0.0;
  double delta_max = 0.0;
  std::uint64_t seed = 0;
};

PairSample make_pair_sample(const Domain& dom, int count, double delta_min,
                            double delta_max, std::uint64_t seed);

struct PairRatio {
  double max_ratio = 0.0;        // +inf when a violation was seen
  std::int64_t used = 0;
  std::int64_t skipped = 0;      // numerator and denominator both negligible
  std::int64_t violations = 0;   // denominator negligible, numerator not
  std::int64_t clamped = 0;      // exponent clamps (hajlasz only)
};

// max over pairs of |f(x)-f(y)| log(1/|x-y|)^gamma / (L(x) + L(y))
PairRatio lusin_pair_ratio(const SampledFunction& f,
                           const SeminormParams& params,
                           const RadialScheme& scheme, const PairSample& pairs);
PairRatio lusin_pair_ratio(const SampledFunction& f, const PointFunctional& L,
                           double gamma, const PairSample& pairs);

// max over pairs of |f(x)-f(y)| / (|x-y|^s (D(x) + D(y)))
PairRatio holder_pair_ratio(const SampledFunction& f,
                            const SeminormParams& params,
                            const RadialScheme& scheme, const PairSample& pairs);
PairRatio holder_pair_ratio(const SampledFunction& f, const PointFunctional& D,
                            double s, const PairSample& pairs);

struct CandidateWitness {
  enum class Role { hajlasz, lusin_converse };
  SampledFunction g;  // must be >= 0 everywhere
  Role role = Role::hajlasz;
};

// max over pairs of |f(x)-f(y)| / (|x-y|^s (exp(g(x)+g(y)) - 1));
// a value <= 1 certifies the pointwise inequality on the sample.
PairRatio hajlasz_check(const SampledFunction& f, const CandidateWitness& w,
                        double s, const PairSample& pairs);

struct ConverseResult {
  double seminorm_pth = 0.0;  // x_seminorm(f, alpha, p)^p
  double bound = 0.0;         // ||g||_p^p / (p (gamma - alpha))
  bool hypothesis_ok = false;
  std::int64_t hypothesis_violations = 0;
};

// Checks |f(x)-f(y)| <= log(1/|x-y|)^{-gamma} (g(x)+g(y)) on the pair sample,
// then returns the seminorm at order alpha < gamma together with the bound.
ConverseResult lusin_converse_seminorm(const SampledFunction& f,
                                       const CandidateWitness& w, double gamma,
                                       double alpha,
                                       const SeminormParams& params,
                                       const RadialScheme& scheme,
                                       const PairSample& pairs);

namespace serial {
PointFunctional phi_star(const SampledFunction& f, double s, double q);
PointFunctional hl_maximal(const SampledFunction& f);
}  // namespace serial

}  // namespace logsob
