#include "logsob/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "logsob/cli.hpp"
#include "logsob/fit.hpp"
#include "logsob/reduce.hpp"
#include "logsob/rng.hpp"

namespace logsob {

namespace {

constexpr double kDegenerate = 1e-12;

nlohmann::ordered_json scheme_json(const RadialScheme& s) {
  nlohmann::ordered_json j;
  j["r_min"] = s.r_min;
  j["outer_radius"] = s.outer_radius;
  j["n_radial"] = s.n_radial;
  j["n_angular"] = s.n_angular;
  return j;
}

nlohmann::ordered_json base_inputs(const AnalyticFunction* g, const Domain& dom,
                                   const RadialScheme* scheme) {
  nlohmann::ordered_json j;
  if (g != nullptr) j["function"] = function_to_json(*g);
  j["domain"] = domain_to_json(dom);
  if (scheme != nullptr) j["scheme"] = scheme_json(*scheme);
  return j;
}

Domain refined(const Domain& dom) {
  return Domain(dom.dim, dom.half_width, 2 * dom.points_per_axis);
}

double simpson(const std::function<double(double)>& f, double a, double b,
               int panels) {
  const double h = (b - a) / (2 * panels);
  double s = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i)
    s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

RadialScheme SchemeSpec::resolve(const Domain& dom, double outer_radius) const {
  const double rm = r_min > 0.0 ? r_min : dom.spacing();
  const int na = n_angular > 0 ? n_angular : (dom.dim == 1 ? 2 : 64);
  return build_radial_scheme(rm, outer_radius, n_radial, na, dom.dim);
}

nlohmann::ordered_json SchemeSpec::to_json() const {
  nlohmann::ordered_json j;
  j["r_min"] = r_min;
  j["n_radial"] = n_radial;
  j["n_angular"] = n_angular;
  return j;
}

SchemeSpec SchemeSpec::from_json(const nlohmann::ordered_json& j) {
  SchemeSpec s;
  if (j.contains("r_min")) s.r_min = j.at("r_min").get<double>();
  if (j.contains("n_radial")) s.n_radial = j.at("n_radial").get<int>();
  if (j.contains("n_angular")) s.n_angular = j.at("n_angular").get<int>();
  return s;
}

double ExperimentReport::get(const std::string& label) const {
  for (const auto& [k, v] : values)
    if (k == label) return v;
  throw std::invalid_argument("report has no value labelled " + label);
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["name"] = name;
  j["params"] = params_to_json(params);
  j["inputs"] = inputs;
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& [k, v] : values) {
    nlohmann::ordered_json item;
    item["label"] = k;
    item["value"] = v;
    vals.push_back(item);
  }
  j["values"] = vals;
  j["fits"] = fits;
  j["band"] = {{"lo", band_lo}, {"hi", band_hi}};
  j["convergence"] = convergence;
  j["seed"] = seed;
  j["timestamp"] = timestamp;
  j["notes"] = notes;
  return j;
}

// ---- indicator scaling ------------------------------------------------------

ExperimentReport indicator_scaling(double gamma, double p,
                                   const std::vector<double>& r_list,
                                   const Domain& dom, const SchemeSpec& spec) {
  if (r_list.size() < 3)
    throw std::invalid_argument("indicator_scaling: need >= 3 radii");
  for (double r : r_list)
    if (!(r > 0.0) || !(r < 1.0 / 6.0))
      throw std::invalid_argument("indicator_scaling: radii must lie in (0,1/6)");

  const RadialScheme scheme = spec.resolve(dom, kSupportRadiusLog);
  SeminormParams params;
  params.gamma = gamma;
  params.p = p;

  ExperimentReport rep;
  rep.name = "indicator-scaling";
  rep.params = params;
  rep.inputs = base_inputs(nullptr, dom, &scheme);
  rep.inputs["r_list"] = r_list;

  std::vector<double> log_r, log_log, ones, y, pth_values;
  double band_lo = 0.0, band_hi = 0.0;
  for (double r : r_list) {
    const SampledFunction f = sample(AnalyticFunction::indicator_ball(r), dom);
    const double s = x_seminorm(f, params, scheme);
    const double pth = std::pow(s, p);
    pth_values.push_back(pth);
    rep.add("S_pth[r=" + std::to_string(r) + "]", pth);
    log_r.push_back(std::log(r));
    log_log.push_back(std::log(std::log(1.0 / r)));
    ones.push_back(1.0);
    y.push_back(std::log(pth));
    const double scaled =
        pth / (std::pow(r, dom.dim) *
               std::pow(std::log(1.0 / r), p * gamma));
    band_lo = band_lo == 0.0 ? scaled : std::min(band_lo, scaled);
    band_hi = std::max(band_hi, scaled);
  }
  rep.band_lo = band_lo;
  rep.band_hi = band_hi;

  double ss_full = 0.0;
  const auto full = fit_least_squares({log_r, log_log, ones}, y, &ss_full);
  rep.add("fitted_a", full[0]);
  rep.add("fitted_b", full[1]);
  rep.fits.push_back({{"model", "free"},
                      {"a", full[0]},
                      {"b", full[1]},
                      {"const", full[2]},
                      {"residual_ss", ss_full}});

  // same fit with the log exponent frozen at p*gamma, and with it dropped
  std::vector<double> y_frozen(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y_frozen[i] = y[i] - p * gamma * log_log[i];
  double ss_frozen = 0.0;
  const auto frozen = fit_least_squares({log_r, ones}, y_frozen, &ss_frozen);
  rep.fits.push_back({{"model", "log_exponent_frozen"},
                      {"a", frozen[0]},
                      {"b", p * gamma},
                      {"const", frozen[1]},
                      {"residual_ss", ss_frozen}});
  double ss_none = 0.0;
  const auto none = fit_least_squares({log_r, ones}, y, &ss_none);
  rep.fits.push_back({{"model", "no_log_factor"},
                      {"a", none[0]},
                      {"b", 0.0},
                      {"const", none[1]},
                      {"residual_ss", ss_none}});

  // cutoff sensitivity and grid refinement for the smallest radius
  const double r_ref = r_list.back();
  {
    SchemeSpec half = spec;
    half.r_min = (spec.r_min > 0.0 ? spec.r_min : dom.spacing()) / 2.0;
    const RadialScheme scheme_half = half.resolve(dom, kSupportRadiusLog);
    const SampledFunction f =
        sample(AnalyticFunction::indicator_ball(r_ref), dom);
    const double pth_half = std::pow(x_seminorm(f, params, scheme_half), p);
    const Domain dom2 = refined(dom);
    const RadialScheme scheme2 = spec.resolve(dom2, kSupportRadiusLog);
    const double pth_fine = std::pow(
        x_seminorm(sample(AnalyticFunction::indicator_ball(r_ref), dom2),
                   params, scheme2),
        p);
    rep.convergence = {{"label", "S_pth[r=" + std::to_string(r_ref) + "]"},
                       {"value_n", pth_values.back()},
                       {"value_2n", pth_fine},
                       {"value_rmin_half", pth_half}};
  }

  PlotTable t;
  t.name = "scaling";
  t.columns = {"r", "S_pth", "model_free", "model_frozen"};
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    const double model_free =
        std::exp(full[0] * log_r[i] + full[1] * log_log[i] + full[2]);
    const double model_frozen =
        std::exp(frozen[0] * log_r[i] + p * gamma * log_log[i] + frozen[1]);
    t.rows.push_back({r_list[i], pth_values[i], model_free, model_frozen});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

// ---- logarithmic perimeter --------------------------------------------------

double log_perimeter(const std::vector<Ball>& balls, double gamma,
                     const Domain& dom, const SchemeSpec& spec) {
  if (balls.empty()) return 0.0;
  if (balls.size() > 2)
    throw std::invalid_argument("log_perimeter: at most two balls");
  for (const auto& b : balls) {
    if (!(b.radius > 0.0))
      throw std::invalid_argument("log_perimeter: radius must be positive");
    if (norm2(b.center, dom.dim) + b.radius >= dom.half_width)
      throw std::invalid_argument("log_perimeter: ball must fit in the box");
  }
  if (balls.size() == 2) {
    const double dx = balls[0].center[0] - balls[1].center[0];
    const double dy =
        dom.dim == 2 ? balls[0].center[1] - balls[1].center[1] : 0.0;
    const double dist = std::hypot(dx, dy);
    if (dist <= balls[0].radius + balls[1].radius)
      throw std::invalid_argument("log_perimeter: balls overlap");
  }
  const SampledFunction f = sample(dom, [&](const Point& x) {
    for (const auto& b : balls) {
      const double dx = x[0] - b.center[0];
      const double dy = dom.dim == 2 ? x[1] - b.center[1] : 0.0;
      if (std::hypot(dx, dy) < b.radius) return 1.0;
    }
    return 0.0;
  });
  SeminormParams params;
  params.gamma = gamma;
  params.p = 1.0;
  return x_seminorm(f, params, spec.resolve(dom, kSupportRadiusLog));
}

ExperimentReport log_perimeter_report(const std::vector<Ball>& balls,
                                      double gamma, const Domain& dom,
                                      const SchemeSpec& spec) {
  ExperimentReport rep;
  rep.name = "log-perimeter";
  rep.params.gamma = gamma;
  rep.params.p = 1.0;
  rep.inputs = base_inputs(nullptr, dom, nullptr);
  nlohmann::ordered_json blist = nlohmann::ordered_json::array();
  for (const auto& b : balls)
    blist.push_back({{"center", {b.center[0], b.center[1]}},
                     {"radius", b.radius}});
  rep.inputs["balls"] = blist;
  rep.add("perimeter", log_perimeter(balls, gamma, dom, spec));
  return rep;
}

// ---- embedding --------------------------------------------------------------

EmbeddingRatios embedding_ratios(const SampledFunction& f, double gamma,
                                 double p, const RadialScheme& scheme,
                                 bool weak_norm_in_log) {
  const double norm_in_log =
      weak_norm_in_log ? weak_lp_quasinorm(f, p) : lp_norm(f, p);
  if (!(norm_in_log > 0.0))
    throw std::invalid_argument("embedding: zero function rejected");
  SeminormParams params;
  params.gamma = gamma;
  params.p = p;
  const PointFunctional L = lusin_functional(f, params, scheme);

  const Domain& dom = f.domain;
  const int n = dom.points_per_axis;
  const int m = (L.domain.points_per_axis - n) / 2;
  const int ext = L.domain.points_per_axis;
  const double pg = p * gamma;

  double max_ratio = 0.0;
  std::int64_t skipped = 0;
  double lhs_sum = 0.0;
  for (std::int64_t e = 0; e < dom.node_count(); ++e) {
    const int ix = static_cast<int>(dom.dim == 1 ? e : e % n);
    const int iy = static_cast<int>(dom.dim == 1 ? 0 : e / n);
    const std::int64_t le =
        dom.dim == 1 ? (ix + m)
                     : static_cast<std::int64_t>(iy + m) * ext + (ix + m);
    const double fv = std::abs(f.values[static_cast<std::size_t>(e)]);
    const double fp = std::pow(fv, p);
    const double num =
        fp * std::pow(std::log(fv / norm_in_log + 2.0), pg);
    lhs_sum += num;
    const double den =
        fp + std::pow(L.values[static_cast<std::size_t>(le)], p);
    if (den < kDegenerate) {
      ++skipped;
      continue;
    }
    max_ratio = std::max(max_ratio, num / den);
  }
  const double cell = std::pow(dom.spacing(), dom.dim);
  const double x_norm_pth =
      std::pow(lp_norm(f, p), p) + std::pow(L.lp_norm(p), p);
  EmbeddingRatios out;
  out.pointwise_max = max_ratio;
  out.integrated = lhs_sum * cell / x_norm_pth;
  out.skipped_nodes = skipped;
  return out;
}

namespace {

ExperimentReport embedding_report(const std::string& name,
                                  const AnalyticFunction& g, double gamma,
                                  double p, const Domain& dom,
                                  const SchemeSpec& spec, bool weak) {
  const RadialScheme scheme = spec.resolve(dom, kSupportRadiusLog);
  const SampledFunction f = sample(g, dom);
  const EmbeddingRatios r = embedding_ratios(f, gamma, p, scheme, weak);

  ExperimentReport rep;
  rep.name = name;
  rep.params.gamma = gamma;
  rep.params.p = p;
  rep.inputs = base_inputs(&g, dom, &scheme);
  rep.add("pointwise_max", r.pointwise_max);
  rep.add("integrated", r.integrated);
  rep.add("skipped_nodes", static_cast<double>(r.skipped_nodes));
  if (weak) {
    const EmbeddingRatios strong = embedding_ratios(f, gamma, p, scheme, false);
    rep.add("strong_pointwise_max", strong.pointwise_max);
    rep.add("strong_integrated", strong.integrated);
    rep.add("weak_norm", weak_lp_quasinorm(f, p));
    rep.add("strong_norm", lp_norm(f, p));
  }

  const Domain dom2 = refined(dom);
  const EmbeddingRatios r2 = embedding_ratios(
      sample(g, dom2), gamma, p, spec.resolve(dom2, kSupportRadiusLog), weak);
  rep.convergence = {{"label", "pointwise_max"},
                     {"value_n", r.pointwise_max},
                     {"value_2n", r2.pointwise_max},
                     {"integrated_n", r.integrated},
                     {"integrated_2n", r2.integrated}};
  return rep;
}

}  // namespace

ExperimentReport embedding_constant(const AnalyticFunction& g, double gamma,
                                    double p, const Domain& dom,
                                    const SchemeSpec& spec) {
  return embedding_report("embedding", g, gamma, p, dom, spec, false);
}

ExperimentReport weak_embedding_constant(const AnalyticFunction& g,
                                         double gamma, double p,
                                         const Domain& dom,
                                         const SchemeSpec& spec) {
  return embedding_report("weak-embedding", g, gamma, p, dom, spec, true);
}

// ---- fractional embedding ---------------------------------------------------

FracEmbeddingRatios frac_embedding_ratios(const SampledFunction& f, double s,
                                          double p,
                                          const RadialScheme& scheme) {
  const Domain& dom = f.domain;
  if (!(s * p < dom.dim))
    throw std::invalid_argument("frac_embedding: need s*p < dim");
  const double p_star = dom.dim * p / (dom.dim - s * p);
  SeminormParams params;
  params.s = s;
  params.p = p;
  const PointFunctional D = frac_functional(f, params, scheme);
  const double fpstar = lp_norm(f, p_star);
  if (!(fpstar > 0.0))
    throw std::invalid_argument("frac_embedding: zero function rejected");

  const int n = dom.points_per_axis;
  const int m = (D.domain.points_per_axis - n) / 2;
  const int ext = D.domain.points_per_axis;
  const double norm_factor = std::pow(fpstar, p_star - p);
  double max_ratio = 0.0;
  for (std::int64_t e = 0; e < dom.node_count(); ++e) {
    const int ix = static_cast<int>(dom.dim == 1 ? e : e % n);
    const int iy = static_cast<int>(dom.dim == 1 ? 0 : e / n);
    const std::int64_t de =
        dom.dim == 1 ? (ix + m)
                     : static_cast<std::int64_t>(iy + m) * ext + (ix + m);
    const double num =
        std::pow(std::abs(f.values[static_cast<std::size_t>(e)]), p_star);
    const double den =
        norm_factor * std::pow(D.values[static_cast<std::size_t>(de)], p);
    if (den < kDegenerate) continue;
    max_ratio = std::max(max_ratio, num / den);
  }
  FracEmbeddingRatios out;
  out.p_star = p_star;
  out.pointwise_max = max_ratio;
  const double wn = std::pow(
      std::pow(lp_norm(f, p), p) + std::pow(D.lp_norm(p), p), 1.0 / p);
  out.integrated = fpstar / wn;
  return out;
}

ExperimentReport frac_embedding_constant(const AnalyticFunction& g, double s,
                                         double p, const Domain& dom,
                                         const SchemeSpec& spec) {
  const RadialScheme scheme = spec.resolve(dom, 4.0 * dom.half_width);
  const SampledFunction f = sample(g, dom);
  const FracEmbeddingRatios r = frac_embedding_ratios(f, s, p, scheme);

  ExperimentReport rep;
  rep.name = "frac-embedding";
  rep.params.s = s;
  rep.params.p = p;
  rep.inputs = base_inputs(&g, dom, &scheme);
  rep.add("p_star", r.p_star);
  rep.add("pointwise_max", r.pointwise_max);
  rep.add("integrated", r.integrated);

  const Domain dom2 = refined(dom);
  const FracEmbeddingRatios r2 = frac_embedding_ratios(
      sample(g, dom2), s, p, spec.resolve(dom2, 4.0 * dom.half_width));
  rep.convergence = {{"label", "pointwise_max"},
                     {"value_n", r.pointwise_max},
                     {"value_2n", r2.pointwise_max},
                     {"integrated_n", r.integrated},
                     {"integrated_2n", r2.integrated}};
  return rep;
}

// ---- interpolation ----------------------------------------------------------

double interpolation_ratio(const SampledFunction& f, double gamma, double s,
                           double p, const RadialScheme& scheme_third,
                           const RadialScheme& scheme_out) {
  const double lp = lp_norm(f, p);
  if (!(lp > 0.0))
    throw std::invalid_argument("interpolation: zero function rejected");
  SeminormParams params;
  params.gamma = gamma;
  params.s = s;
  params.p = p;
  const double num = x_seminorm(f, params, scheme_third);
  const double wn = w_norm(f, params, scheme_out);
  return num / (lp * std::pow(std::log(2.0 + wn / lp), gamma));
}

ExperimentReport interpolation_constant(const AnalyticFunction& g, double gamma,
                                        double s, double p, const Domain& dom,
                                        const SchemeSpec& spec) {
  const RadialScheme third = spec.resolve(dom, kSupportRadiusLog);
  const RadialScheme out = spec.resolve(dom, 4.0 * dom.half_width);
  const SampledFunction f = sample(g, dom);
  const double ratio = interpolation_ratio(f, gamma, s, p, third, out);

  ExperimentReport rep;
  rep.name = "interpolation";
  rep.params.gamma = gamma;
  rep.params.s = s;
  rep.params.p = p;
  rep.inputs = base_inputs(&g, dom, &third);
  rep.add("ratio", ratio);
  if (std::pow(x_seminorm(f, rep.params, third), p) < kDegenerate)
    rep.notes.push_back("numerator negligible; ratio reported as computed");

  const Domain dom2 = refined(dom);
  const double ratio2 = interpolation_ratio(
      sample(g, dom2), gamma, s, p, spec.resolve(dom2, kSupportRadiusLog),
      spec.resolve(dom2, 4.0 * dom.half_width));
  rep.convergence = {{"label", "ratio"},
                     {"value_n", ratio},
                     {"value_2n", ratio2}};
  return rep;
}

// ---- immersion monotonicity -------------------------------------------------

ExperimentReport immersion_monotonicity(const AnalyticFunction& g,
                                        const std::vector<double>& gamma_list,
                                        double s, double p, const Domain& dom,
                                        const SchemeSpec& spec) {
  if (gamma_list.size() < 2)
    throw std::invalid_argument("immersion: need >= 2 orders");
  for (std::size_t i = 1; i < gamma_list.size(); ++i)
    if (!(gamma_list[i] > gamma_list[i - 1]))
      throw std::invalid_argument("immersion: orders must be ascending");

  const RadialScheme third = spec.resolve(dom, kSupportRadiusLog);
  const RadialScheme out = spec.resolve(dom, 4.0 * dom.half_width);
  const SampledFunction f = sample(g, dom);
  SeminormParams params;
  params.s = s;
  params.p = p;
  const double wn = w_norm(f, params, out);

  ExperimentReport rep;
  rep.name = "immersion";
  rep.params = params;
  rep.inputs = base_inputs(&g, dom, &third);
  rep.inputs["gamma_list"] = gamma_list;

  bool monotone = true;
  double prev = -1.0;
  double worst_ratio = 0.0;
  PlotTable t;
  t.name = "immersion";
  t.columns = {"gamma", "x_seminorm", "x_norm_over_w_norm"};
  if (wn == 0.0) rep.notes.push_back("zero function: norm ratios reported as 0");
  for (double gamma : gamma_list) {
    SeminormParams pg = params;
    pg.gamma = gamma;
    const double sv = x_seminorm(f, pg, third);
    const double ratio = wn > 0.0 ? x_norm(f, pg, third) / wn : 0.0;
    rep.add("x_seminorm[gamma=" + std::to_string(gamma) + "]", sv);
    if (prev >= 0.0 && sv < prev * (1.0 - 1e-12)) monotone = false;
    prev = sv;
    worst_ratio = std::max(worst_ratio, ratio);
    t.rows.push_back({gamma, sv, ratio});
  }
  rep.add("monotone", monotone ? 1.0 : 0.0);
  rep.add("max_norm_ratio", worst_ratio);
  rep.add("w_norm", wn);
  rep.tables.push_back(std::move(t));
  return rep;
}

// ---- truncated immersion ----------------------------------------------------

ExperimentReport truncated_immersion_check(const AnalyticFunction& g, double s,
                                           double p, double q,
                                           const Domain& dom,
                                           const SchemeSpec& spec,
                                           std::uint64_t seed) {
  const RadialScheme third = spec.resolve(dom, kSupportRadiusLog);
  const SampledFunction f = sample(g, dom);

  // Lipschitz recipe: the constant witness log(1 + K) with K = max |grad f|
  const auto grad = analytic_gradient(g, dom);
  double lip = 0.0;
  for (std::int64_t e = 0; e < dom.node_count(); ++e)
    lip = std::max(lip, norm2(grad(dom.node(e)), dom.dim));
  CandidateWitness w;
  w.role = CandidateWitness::Role::hajlasz;
  w.g = sample(dom, [&](const Point&) { return std::log1p(lip); });

  const double dmax = 1.0 / 36.0 - 1e-9;
  const double dmin = std::min(4.0 * dom.spacing(), dmax / 4.0);
  const PairSample pairs = make_pair_sample(dom, 10000, dmin, dmax, seed);
  const PairRatio cert = hajlasz_check(f, w, s, pairs);

  SeminormParams params;
  params.s = s;
  params.p = p;
  params.q = q;
  const double trunc = truncated_q_seminorm(f, params, third);
  const double gp = std::pow(lp_norm(w.g, p), p);
  const double gq = std::pow(lp_norm(w.g, q), q);

  ExperimentReport rep;
  rep.name = "truncated-immersion";
  rep.params = params;
  rep.seed = seed;
  rep.inputs = base_inputs(&g, dom, &third);
  rep.add("hajlasz_max_ratio", cert.max_ratio);
  rep.add("certified", cert.max_ratio <= 1.0 ? 1.0 : 0.0);
  rep.add("truncated_seminorm", trunc);
  rep.add("witness_p_pth", gp);
  rep.add("witness_q_qth", gq);
  rep.add("ratio", trunc / (gp + gq));
  if (cert.max_ratio > 1.0)
    rep.notes.push_back("witness not certified on the pair sample");
  return rep;
}

// ---- weak differentiability checks ------------------------------------------

ExperimentReport gradient_log_bound(const AnalyticFunction& g, double p,
                                    const Domain& dom) {
  const auto grad = analytic_gradient(g, dom);
  const double cell = std::pow(dom.spacing(), dom.dim);
  double lip = 0.0;
  const std::int64_t count = dom.node_count();
  std::vector<double> mags(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < count; ++e)
    mags[static_cast<std::size_t>(e)] = norm2(grad(dom.node(e)), dom.dim);
  for (double m : mags) lip = std::max(lip, m);
  const double lhs =
      cell * block_sum(count, [&](std::int64_t e) {
        return std::pow(std::log1p(mags[static_cast<std::size_t>(e)]), p);
      });
  const double witness_pth =
      std::pow(std::log1p(lip), p) *
      std::pow(2.0 * dom.half_width, dom.dim);

  ExperimentReport rep;
  rep.name = "gradient-bound";
  rep.params.p = p;
  rep.inputs = base_inputs(&g, dom, nullptr);
  rep.add("lhs_integral", lhs);
  rep.add("lipschitz_constant", lip);
  rep.add("witness_pth", witness_pth);
  rep.add("ratio", witness_pth > 0.0 ? lhs / witness_pth : 0.0);
  if (witness_pth == 0.0)
    rep.notes.push_back("constant input: both sides vanish");
  return rep;
}

ExperimentReport local_diff_decay(
    const std::function<double(const Point&)>& fn,
    const std::function<Point(const Point&)>& grad, double p,
    const std::vector<double>& r_list, const Domain& dom, std::uint64_t seed,
    const std::string& label) {
  if (r_list.size() < 2)
    throw std::invalid_argument("local_diff_decay: need >= 2 radii");
  const double dx = dom.spacing();
  SplitMix64 rng(seed);
  // sample points snapped to cell centers, away from the box boundary
  auto snap = [&](double v) {
    const int i = std::clamp(
        static_cast<int>(std::floor((v + dom.half_width) / dx)),
        dom.points_per_axis / 4, 3 * dom.points_per_axis / 4 - 1);
    return dom.axis_coord(i);
  };
  std::vector<Point> points;
  for (int i = 0; i < 10; ++i) {
    Point x{snap(rng.uniform(-dom.half_width / 2, dom.half_width / 2)),
            dom.dim == 2
                ? snap(rng.uniform(-dom.half_width / 2, dom.half_width / 2))
                : 0.0};
    points.push_back(x);
  }

  ExperimentReport rep;
  rep.name = "local-diff";
  rep.params.p = p;
  rep.seed = seed;
  rep.inputs = base_inputs(nullptr, dom, nullptr);
  rep.inputs["function"] = label;
  rep.inputs["r_list"] = r_list;

  PlotTable t;
  t.name = "decay";
  t.columns = {"r", "mean_average"};
  std::vector<double> means;
  for (double r : r_list) {
    if (!(r > dx))
      throw std::invalid_argument("local_diff_decay: radius below the grid");
    const int cells = static_cast<int>(std::floor(r / dx));
    double total = 0.0;
    for (const Point& x : points) {
      const double fx = fn(x);
      const Point gx = grad(x);
      double acc = 0.0;
      std::int64_t cnt = 0;
      for (int oy = (dom.dim == 2 ? -cells : 0);
           oy <= (dom.dim == 2 ? cells : 0); ++oy)
        for (int ox = -cells; ox <= cells; ++ox) {
          if (ox == 0 && oy == 0) continue;
          const Point y{ox * dx, oy * dx};
          const double ynorm = norm2(y, dom.dim);
          if (ynorm >= r) continue;
          const Point xy{x[0] + y[0], x[1] + y[1]};
          const double lin = gx[0] * y[0] + (dom.dim == 2 ? gx[1] * y[1] : 0.0);
          acc += std::pow(
              std::log1p(std::abs(fn(xy) - fx - lin) / ynorm), p);
          ++cnt;
        }
      total += acc / static_cast<double>(cnt);
    }
    means.push_back(total / static_cast<double>(points.size()));
    rep.add("mean[r=" + std::to_string(r) + "]", means.back());
    t.rows.push_back({r, means.back()});
  }
  rep.add("initial", means.front());
  rep.add("final", means.back());
  rep.add("decay_ratio",
          means.front() > 0.0 ? means.back() / means.front() : 0.0);
  rep.tables.push_back(std::move(t));
  return rep;
}

ExperimentReport local_diff_decay(const AnalyticFunction& g, double p,
                                  const std::vector<double>& r_list,
                                  const Domain& dom, std::uint64_t seed) {
  auto rep = local_diff_decay(evaluator(g, dom), analytic_gradient(g, dom), p,
                              r_list, dom, seed, g.describe());
  rep.inputs["function"] = function_to_json(g);
  return rep;
}

// ---- counterexample suite ---------------------------------------------------

ExperimentReport counterexample_suite(const std::vector<int>& m_list, double p,
                                      const Domain& dom) {
  for (int m : m_list)
    if (m != 2 && m != 4 && m != 8 && m != 16 && m != 32)
      throw std::invalid_argument(
          "counterexample: step counts must come from {2,4,8,16,32}");
  if (m_list.size() < 2)
    throw std::invalid_argument("counterexample: need >= 2 step counts");

  // integral of log(1 + 2/|x-y|) over the unit square, by symmetry reduced
  // to one dimension
  const double square_integral = 2.0 * simpson(
      [](double t) {
        return t == 0.0 ? 0.0 : (1.0 - t) * std::log1p(2.0 / t);
      },
      0.0, 1.0, 20000);

  ExperimentReport rep;
  rep.name = "counterexample";
  rep.params.p = p;
  rep.params.s = 1.0;
  rep.params.q = 1.0;
  rep.inputs = base_inputs(nullptr, dom, nullptr);
  rep.inputs["m_list"] = m_list;

  PlotTable t;
  t.name = "growth";
  t.columns = {"M", "phi_star_l1", "lower_bound"};
  std::vector<double> log_m, log_phi, log_lower, lin_m, lin_phi;
  bool sup_ok = true;
  double phi_last = 0.0;
  for (int m : m_list) {
    const SampledFunction f = sample(AnalyticFunction::step_sum(m), dom);
    double sup = 0.0;
    for (double v : f.values) sup = std::max(sup, std::abs(v));
    if (sup != 1.0) sup_ok = false;
    const PointFunctional phi = phi_star(f, 1.0, 1.0);
    const double l1 = phi.lp_norm(1.0);
    const double lower = 0.5 * m * square_integral;
    rep.add("phi_l1[M=" + std::to_string(m) + "]", l1);
    rep.add("lower_bound[M=" + std::to_string(m) + "]", lower);
    t.rows.push_back({static_cast<double>(m), l1, lower});
    log_m.push_back(std::log(m));
    log_phi.push_back(std::log(l1));
    log_lower.push_back(std::log(lower));
    lin_m.push_back(m);
    lin_phi.push_back(l1);
    phi_last = l1;
  }
  rep.add("sup_norm_exact", sup_ok ? 1.0 : 0.0);

  const LineFit phi_fit = fit_line(log_m, log_phi);
  const LineFit lower_fit = fit_line(log_m, log_lower);
  const LineFit lin_fit = fit_line(lin_m, lin_phi);
  rep.add("phi_growth_exponent", phi_fit.slope);
  rep.add("lower_growth_exponent", lower_fit.slope);
  rep.add("linear_fit_slope", lin_fit.slope);
  rep.add("linear_fit_r2", lin_fit.r_squared);
  rep.fits.push_back({{"model", "phi_loglog"},
                      {"slope", phi_fit.slope},
                      {"intercept", phi_fit.intercept},
                      {"r_squared", phi_fit.r_squared}});
  rep.fits.push_back({{"model", "lower_loglog"},
                      {"slope", lower_fit.slope},
                      {"intercept", lower_fit.intercept},
                      {"r_squared", lower_fit.r_squared}});
  rep.fits.push_back({{"model", "phi_linear"},
                      {"slope", lin_fit.slope},
                      {"intercept", lin_fit.intercept},
                      {"r_squared", lin_fit.r_squared}});

  const Domain dom2 = refined(dom);
  const SampledFunction f2 =
      sample(AnalyticFunction::step_sum(m_list.back()), dom2);
  rep.convergence = {
      {"label", "phi_l1[M=" + std::to_string(m_list.back()) + "]"},
      {"value_n", phi_last},
      {"value_2n", phi_star(f2, 1.0, 1.0).lp_norm(1.0)}};
  rep.tables.push_back(std::move(t));
  return rep;
}

}  // namespace logsob
