#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "logsob/grid.hpp"
#include "logsob/maximal.hpp"
#include "logsob/quadrature.hpp"
#include "logsob/seminorms.hpp"
#include "logsob/spectral.hpp"

namespace logsob {

// Scheme request with grid-dependent defaulting: r_min = 0 means one grid
// spacing, n_angular = 0 means 2 (d=1) or 64 (d=2).
struct SchemeSpec {
  double r_min = 0.0;
  int n_radial = 512;
  int n_angular = 0;

  RadialScheme resolve(const Domain& dom, double outer_radius) const;
  nlohmann::ordered_json to_json() const;
  static SchemeSpec from_json(const nlohmann::ordered_json& j);
};

struct PlotTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentReport {
  std::string name;
  SeminormParams params;
  nlohmann::ordered_json inputs;   // function, domain, scheme
  std::vector<std::pair<std::string, double>> values;
  nlohmann::ordered_json fits = nlohmann::ordered_json::array();
  double band_lo = 0.0;
  double band_hi = 0.0;
  nlohmann::ordered_json convergence;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::vector<std::string> notes;
  std::vector<PlotTable> tables;

  void add(const std::string& label, double v) { values.emplace_back(label, v); }
  double get(const std::string& label) const;  // throws if absent
  nlohmann::ordered_json to_json() const;
};

struct Ball {
  Point center{0.0, 0.0};
  double radius = 0.0;
};

// ---- low-level cores (pure, take sampled data) -----------------------------

struct EmbeddingRatios {
  double pointwise_max = 0.0;
  double integrated = 0.0;
  std::int64_t skipped_nodes = 0;
};

// |f|^p log(|f|/denominator_norm + 2)^{p gamma} against |f|^p + L^p
EmbeddingRatios embedding_ratios(const SampledFunction& f, double gamma,
                                 double p, const RadialScheme& scheme,
                                 bool weak_norm_in_log);

struct FracEmbeddingRatios {
  double pointwise_max = 0.0;
  double integrated = 0.0;  // ||f||_{p*} / ||f||_{W^{s,p}}
  double p_star = 0.0;
};

FracEmbeddingRatios frac_embedding_ratios(const SampledFunction& f, double s,
                                          double p, const RadialScheme& scheme);

double interpolation_ratio(const SampledFunction& f, double gamma, double s,
                           double p, const RadialScheme& scheme_third,
                           const RadialScheme& scheme_out);

// ---- experiments ------------------------------------------------------------

ExperimentReport indicator_scaling(double gamma, double p,
                                   const std::vector<double>& r_list,
                                   const Domain& dom, const SchemeSpec& spec);

double log_perimeter(const std::vector<Ball>& balls, double gamma,
                     const Domain& dom, const SchemeSpec& spec);
ExperimentReport log_perimeter_report(const std::vector<Ball>& balls,
                                      double gamma, const Domain& dom,
                                      const SchemeSpec& spec);

ExperimentReport embedding_constant(const AnalyticFunction& g, double gamma,
                                    double p, const Domain& dom,
                                    const SchemeSpec& spec);

ExperimentReport weak_embedding_constant(const AnalyticFunction& g,
                                         double gamma, double p,
                                         const Domain& dom,
                                         const SchemeSpec& spec);

ExperimentReport frac_embedding_constant(const AnalyticFunction& g, double s,
                                         double p, const Domain& dom,
                                         const SchemeSpec& spec);

ExperimentReport interpolation_constant(const AnalyticFunction& g, double gamma,
                                        double s, double p, const Domain& dom,
                                        const SchemeSpec& spec);

ExperimentReport immersion_monotonicity(const AnalyticFunction& g,
                                        const std::vector<double>& gamma_list,
                                        double s, double p, const Domain& dom,
                                        const SchemeSpec& spec);

ExperimentReport truncated_immersion_check(const AnalyticFunction& g, double s,
                                           double p, double q,
                                           const Domain& dom,
                                           const SchemeSpec& spec,
                                           std::uint64_t seed);

ExperimentReport gradient_log_bound(const AnalyticFunction& g, double p,
                                    const Domain& dom);

ExperimentReport local_diff_decay(
    const std::function<double(const Point&)>& fn,
    const std::function<Point(const Point&)>& grad, double p,
    const std::vector<double>& r_list, const Domain& dom, std::uint64_t seed,
    const std::string& label);
ExperimentReport local_diff_decay(const AnalyticFunction& g, double p,
                                  const std::vector<double>& r_list,
                                  const Domain& dom, std::uint64_t seed);

ExperimentReport counterexample_suite(const std::vector<int>& m_list, double p,
                                      const Domain& dom);

}  // namespace logsob
