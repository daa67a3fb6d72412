#pragma once

#include "logsob/grid.hpp"
#include "logsob/quadrature.hpp"

namespace logsob {

// Exponent tuple shared by every functional. Only the fields an operation
// consumes need to be meaningful.
struct SeminormParams {
  double gamma = 0.5;  // log order, >= 0
  double p = 2.0;      // integrability, > 0
  double s = 0.5;      // fractional order, (0, 1]
  double q = 1.0;      // secondary exponent, >= 1
};

// Log-order Gagliardo seminorm: S with
//   S^p = sum_x dx^d sum_{h in scheme} |f(x+h)-f(x)|^p log(1/|h|)^{p*gamma-1} w_h,
// x running over the box enlarged by the kernel radius (f is zero-extended).
// Requires scheme outer radius 1/3. gamma = 0 sits outside the definition and
// is only accepted with allow_gamma_zero.
double x_seminorm(const SampledFunction& f, const SeminormParams& params,
                  const RadialScheme& scheme, bool allow_gamma_zero = false);

// Fractional seminorm with a finite outer cutoff plus an analytic bound for
// the discarded far field. tail_bound is in p-th power units and is already
// included in value; main_part excludes it.
struct TailSeminorm {
  double value = 0.0;       // (main^p + tail_bound)^{1/p}
  double main_part = 0.0;   // cutoff integral only, ^{1/p}
  double tail_bound = 0.0;  // 2^p ||f||_p^p sigma_{d-1} / (p s R^{ps})
};

TailSeminorm w_seminorm(const SampledFunction& f, const SeminormParams& params,
                        const RadialScheme& scheme);

// Truncated variant: integrand 1 ^ |f(x+h)-f(x)|^q against the log kernel
// with exponent p-1. Scheme outer radius 1/3.
double truncated_q_seminorm(const SampledFunction& f,
                            const SeminormParams& params,
                            const RadialScheme& scheme);

// (||f||_p^p + x_seminorm^p)^{1/p}
double x_norm(const SampledFunction& f, const SeminormParams& params,
              const RadialScheme& scheme);
// (||f||_p^p + w_seminorm^p)^{1/p}, tail bound included
double w_norm(const SampledFunction& f, const SeminormParams& params,
              const RadialScheme& scheme);

// Straight-loop reference implementations, kept serial on purpose. Used by
// the tests to pin down the OpenMP kernels and by the benchmark tool.
namespace serial {
double x_seminorm(const SampledFunction& f, const SeminormParams& params,
                  const RadialScheme& scheme, bool allow_gamma_zero = false);
TailSeminorm w_seminorm(const SampledFunction& f, const SeminormParams& params,
                        const RadialScheme& scheme);
double truncated_q_seminorm(const SampledFunction& f,
                            const SeminormParams& params,
                            const RadialScheme& scheme);
}  // namespace serial

}  // namespace logsob
