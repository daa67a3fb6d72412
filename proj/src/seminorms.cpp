#include "logsob/seminorms.hpp"

#include <cmath>
#include <stdexcept>

#include "kernel_engine.hpp"

namespace logsob {

namespace {

void check_log_scheme(const RadialScheme& scheme, const SampledFunction& f) {
  if (scheme.dim != f.domain.dim)
    throw std::invalid_argument("seminorm: scheme dimension mismatch");
  if (std::abs(scheme.outer_radius - kSupportRadiusLog) > 1e-12)
    throw std::invalid_argument("seminorm: scheme outer radius must be 1/3");
}

}  // namespace

double x_seminorm(const SampledFunction& f, const SeminormParams& params,
                  const RadialScheme& scheme, bool allow_gamma_zero) {
  check_log_scheme(scheme, f);
  if (!(params.p > 0.0)) throw std::invalid_argument("x_seminorm: need p > 0");
  if (params.gamma < 0.0 || (params.gamma == 0.0 && !allow_gamma_zero))
    throw std::invalid_argument("x_seminorm: need gamma > 0");
  const double e = params.p * params.gamma - 1.0;
  const auto tab = detail::make_offset_table(
      f.domain, scheme,
      [e](double r) { return std::pow(std::log(1.0 / r), e); });
  const double pth = detail::double_sum(f, tab, tab.max_abs,
                                        detail::PowerPhi{params.p});
  return std::pow(pth, 1.0 / params.p);
}

TailSeminorm w_seminorm(const SampledFunction& f, const SeminormParams& params,
                        const RadialScheme& scheme) {
  if (scheme.dim != f.domain.dim)
    throw std::invalid_argument("w_seminorm: scheme dimension mismatch");
  if (!(params.s > 0.0) || !(params.s < 1.0))
    throw std::invalid_argument("w_seminorm: need s in (0,1)");
  if (!(params.p >= 1.0)) throw std::invalid_argument("w_seminorm: need p >= 1");
  const double ps = params.p * params.s;
  const auto tab = detail::make_offset_table(
      f.domain, scheme, [ps](double r) { return std::pow(r, -ps); });
  const double main_pth = detail::double_sum(f, tab, tab.max_abs,
                                             detail::PowerPhi{params.p});
  const double lp = lp_norm(f, params.p);
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
  check_log_scheme(scheme, f);
  if (!(params.p >= 1.0) || !(params.q >= 1.0))
    throw std::invalid_argument("truncated_q_seminorm: need p, q >= 1");
  const double e = params.p - 1.0;
  const auto tab = detail::make_offset_table(
      f.domain, scheme,
      [e](double r) { return std::pow(std::log(1.0 / r), e); });
  return detail::double_sum(f, tab, tab.max_abs,
                            detail::TruncatedPhi{params.q});
}

double x_norm(const SampledFunction& f, const SeminormParams& params,
              const RadialScheme& scheme) {
  const double lp = lp_norm(f, params.p);
  const double s = x_seminorm(f, params, scheme);
  return std::pow(std::pow(lp, params.p) + std::pow(s, params.p),
                  1.0 / params.p);
}

double w_norm(const SampledFunction& f, const SeminormParams& params,
              const RadialScheme& scheme) {
  const double lp = lp_norm(f, params.p);
  const double s = w_seminorm(f, params, scheme).value;
  return std::pow(std::pow(lp, params.p) + std::pow(s, params.p),
                  1.0 / params.p);
}

}  // namespace logsob
