#include "logsob/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "logsob/acceptance.hpp"
#include "logsob/report.hpp"

namespace logsob {

namespace {

std::string kind_name(AnalyticFunction::Kind k) {
  using Kind = AnalyticFunction::Kind;
  switch (k) {
    case Kind::constant: return "constant";
    case Kind::gaussian: return "gaussian";
    case Kind::indicator_ball: return "indicator_ball";
    case Kind::step_sum: return "step_sum";
    case Kind::trig_poly: return "trig_poly";
  }
  return "?";
}

}  // namespace

nlohmann::ordered_json function_to_json(const AnalyticFunction& g) {
  using Kind = AnalyticFunction::Kind;
  nlohmann::ordered_json j;
  j["kind"] = kind_name(g.kind);
  switch (g.kind) {
    case Kind::constant: j["value"] = g.value; break;
    case Kind::gaussian: j["sigma"] = g.sigma; break;
    case Kind::indicator_ball: j["radius"] = g.radius; break;
    case Kind::step_sum: j["steps"] = g.steps; break;
    case Kind::trig_poly:
      j["seed"] = g.seed;
      j["degree"] = g.degree;
      break;
  }
  return j;
}

AnalyticFunction function_from_json(const nlohmann::ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant")
    return AnalyticFunction::constant(j.at("value").get<double>());
  if (kind == "gaussian")
    return AnalyticFunction::gaussian(j.at("sigma").get<double>());
  if (kind == "indicator_ball")
    return AnalyticFunction::indicator_ball(j.at("radius").get<double>());
  if (kind == "step_sum")
    return AnalyticFunction::step_sum(j.at("steps").get<int>());
  if (kind == "trig_poly")
    return AnalyticFunction::trig_poly(j.at("seed").get<std::uint64_t>(),
                                       j.at("degree").get<int>());
  throw std::invalid_argument("unknown function kind: " + kind);
}

nlohmann::ordered_json domain_to_json(const Domain& d) {
  nlohmann::ordered_json j;
  j["dim"] = d.dim;
  j["half_width"] = d.half_width;
  j["points_per_axis"] = d.points_per_axis;
  return j;
}

Domain domain_from_json(const nlohmann::ordered_json& j) {
  return Domain(j.at("dim").get<int>(), j.at("half_width").get<double>(),
                j.at("points_per_axis").get<int>());
}

nlohmann::ordered_json params_to_json(const SeminormParams& p) {
  nlohmann::ordered_json j;
  j["gamma"] = p.gamma;
  j["p"] = p.p;
  j["s"] = p.s;
  j["q"] = p.q;
  return j;
}

SeminormParams params_from_json(const nlohmann::ordered_json& j) {
  SeminormParams p;
  if (j.contains("gamma")) p.gamma = j.at("gamma").get<double>();
  if (j.contains("p")) p.p = j.at("p").get<double>();
  if (j.contains("s")) p.s = j.at("s").get<double>();
  if (j.contains("q")) p.q = j.at("q").get<double>();
  return p;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["subcommand"] = subcommand;
  j["function"] = function_to_json(function);
  j["domain"] = domain_to_json(domain);
  j["scheme"] = scheme.to_json();
  j["params"] = params_to_json(params);
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  j["threads"] = threads;
  j["deterministic"] = deterministic;
  j["allow_gamma_zero"] = allow_gamma_zero;
  j["dump_values"] = dump_values;
  j["emit_svg"] = emit_svg;
  j["extras"] = extras;
  return j;
}

RunConfig RunConfig::from_json(const nlohmann::ordered_json& j) {
  RunConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.function = function_from_json(j.at("function"));
  c.domain = domain_from_json(j.at("domain"));
  c.scheme = SchemeSpec::from_json(j.at("scheme"));
  c.params = params_from_json(j.at("params"));
  c.seed = j.at("seed").get<std::uint64_t>();
  c.output_dir = j.at("output_dir").get<std::string>();
  c.threads = j.at("threads").get<int>();
  c.deterministic = j.at("deterministic").get<bool>();
  c.allow_gamma_zero = j.at("allow_gamma_zero").get<bool>();
  c.dump_values = j.at("dump_values").get<bool>();
  if (j.contains("emit_svg")) c.emit_svg = j.at("emit_svg").get<bool>();
  if (j.contains("extras")) c.extras = j.at("extras");
  return c;
}

bool RunConfig::operator==(const RunConfig& other) const {
  return to_json() == other.to_json();
}

const std::vector<std::string>& known_experiments() {
  static const std::vector<std::string> names = {
      "indicator-scaling", "embedding",      "weak-embedding",
      "frac-embedding",    "interpolation",  "immersion",
      "truncated-immersion", "gradient-bound", "local-diff",
      "counterexample"};
  return names;
}

namespace {

std::filesystem::path out_dir(const RunConfig& c) {
  const char* env = std::getenv("LOGSOB_OUT");
  return std::filesystem::path(env != nullptr ? env : c.output_dir);
}

void finalize_report(ExperimentReport& rep, const RunConfig& c) {
  rep.seed = c.seed;
  rep.timestamp = make_timestamp(c.deterministic);
}

void write_report(const ExperimentReport& rep, const RunConfig& c,
                  const std::string& stem) {
  const auto dir = out_dir(c) / stem;
  nlohmann::ordered_json j = rep.to_json();
  j["config"] = c.to_json();
  write_json_atomic(dir / "report.json", j);
  for (const auto& t : rep.tables) {
    write_csv_atomic(dir / (t.name + ".csv"), t);
    if (c.emit_svg) write_svg_atomic(dir / (t.name + ".svg"), t);
  }
}

PlotTable sampled_values_table(const SampledFunction& f) {
  PlotTable t;
  t.name = "values";
  t.columns = f.domain.dim == 1 ? std::vector<std::string>{"x", "value"}
                                : std::vector<std::string>{"x", "y", "value"};
  for (std::int64_t e = 0; e < f.domain.node_count(); ++e) {
    const Point x = f.domain.node(e);
    if (f.domain.dim == 1)
      t.rows.push_back({x[0], f.values[static_cast<std::size_t>(e)]});
    else
      t.rows.push_back({x[0], x[1], f.values[static_cast<std::size_t>(e)]});
  }
  return t;
}

PlotTable field_table(const PointFunctional& field) {
  PlotTable t;
  t.name = "field";
  t.columns = field.domain.dim == 1
                  ? std::vector<std::string>{"x", "value"}
                  : std::vector<std::string>{"x", "y", "value"};
  for (std::int64_t e = 0; e < field.domain.node_count(); ++e) {
    const Point x = field.domain.node(e);
    if (field.domain.dim == 1)
      t.rows.push_back({x[0], field.values[static_cast<std::size_t>(e)]});
    else
      t.rows.push_back({x[0], x[1], field.values[static_cast<std::size_t>(e)]});
  }
  return t;
}

PairSample config_pairs(const RunConfig& c) {
  const double dmax_default = 1.0 / 36.0 - 1e-9;
  int count = 10000;
  double dmin = std::min(4.0 * c.domain.spacing(), dmax_default / 4.0);
  double dmax = dmax_default;
  if (c.extras.contains("pair_count"))
    count = c.extras.at("pair_count").get<int>();
  if (c.extras.contains("delta_min"))
    dmin = c.extras.at("delta_min").get<double>();
  if (c.extras.contains("delta_max"))
    dmax = c.extras.at("delta_max").get<double>();
  return make_pair_sample(c.domain, count, dmin, dmax, c.seed);
}

ExperimentReport run_seminorm(const RunConfig& c) {
  const SampledFunction f = sample(c.function, c.domain);
  const RadialScheme third = c.scheme.resolve(c.domain, kSupportRadiusLog);

  ExperimentReport rep;
  rep.name = "seminorm";
  rep.params = c.params;
  rep.inputs = nlohmann::ordered_json{
      {"function", function_to_json(c.function)},
      {"domain", domain_to_json(c.domain)},
      {"scheme", c.scheme.to_json()}};

  const double xsemi = x_seminorm(f, c.params, third, c.allow_gamma_zero);
  if (xsemi < 0.0) throw std::runtime_error("negative seminorm");
  rep.add("lp_norm", lp_norm(f, c.params.p));
  rep.add("weak_lp_quasinorm", weak_lp_quasinorm(f, c.params.p));
  rep.add("x_seminorm", xsemi);
  rep.add("x_norm", std::pow(std::pow(rep.get("lp_norm"), c.params.p) +
                                 std::pow(xsemi, c.params.p),
                             1.0 / c.params.p));
  if (c.params.s > 0.0 && c.params.s < 1.0 && c.params.p >= 1.0) {
    const RadialScheme out =
        c.scheme.resolve(c.domain, 4.0 * c.domain.half_width);
    const TailSeminorm w = w_seminorm(f, c.params, out);
    rep.add("w_seminorm", w.value);
    rep.add("w_seminorm_main", w.main_part);
    rep.add("w_tail_bound", w.tail_bound);
  }
  if (c.params.p >= 1.0 && c.params.q >= 1.0)
    rep.add("truncated_q_seminorm", truncated_q_seminorm(f, c.params, third));
  if (c.params.gamma == 0.0)
    rep.notes.push_back("gamma = 0 lies outside the defining range; "
                        "value computed on explicit request");

  // cutoff sensitivity: same value with the inner cutoff halved
  SchemeSpec half = c.scheme;
  half.r_min = (c.scheme.r_min > 0.0 ? c.scheme.r_min : c.domain.spacing()) / 2;
  rep.convergence = {
      {"label", "x_seminorm"},
      {"value_rmin", xsemi},
      {"value_rmin_half",
       x_seminorm(f, c.params, half.resolve(c.domain, kSupportRadiusLog),
                  c.allow_gamma_zero)}};
  if (c.dump_values) rep.tables.push_back(sampled_values_table(f));
  return rep;
}

ExperimentReport run_spectral(const RunConfig& c) {
  const SampledFunction f = sample(c.function, c.domain);
  const RadialScheme third = c.scheme.resolve(c.domain, kSupportRadiusLog);
  const Spectrum spec = compute_spectrum(f);

  ExperimentReport rep;
  rep.name = "spectral";
  rep.params = c.params;
  rep.inputs = nlohmann::ordered_json{
      {"function", function_to_json(c.function)},
      {"domain", domain_to_json(c.domain)},
      {"pad", spec.pad}};
  const double l2 = lp_norm(f, 2.0);
  SeminormParams p2 = c.params;
  p2.p = 2.0;
  const double direct =
      l2 * l2 + std::pow(x_seminorm(f, p2, third), 2);
  const double spectral = spectral_x_norm_squared(f, c.params.gamma);
  rep.add("l2_norm", l2);
  rep.add("direct_norm_squared", direct);
  rep.add("spectral_norm_squared", spectral);
  rep.add("equivalence_ratio", direct / spectral);

  PlotTable t;
  t.name = "spectrum";
  t.columns = {"xi", "power", "log_weight"};
  for (std::int64_t i = 0; i < spec.count(); ++i) {
    const double xi = spec.freq_norm(i);
    const double w =
        xi > 1.0 ? std::pow(std::log(xi), 2.0 * c.params.gamma) : 0.0;
    t.rows.push_back({xi, spec.power[static_cast<std::size_t>(i)], w});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

ExperimentReport run_kernel_moment(const RunConfig& c) {
  std::vector<double> xis = {0.1, 0.5, 1.0, 5.0, 10.0, 20.0, 100.0, 1000.0,
                             10000.0};
  if (c.extras.contains("xi_list"))
    xis = c.extras.at("xi_list").get<std::vector<double>>();
  SchemeSpec ms = c.scheme;
  if (ms.r_min <= 0.0) ms.r_min = 1e-6;
  if (ms.n_radial < 8192) ms.n_radial = 16384;  // resolve the fast phases
  const RadialScheme scheme =
      build_radial_scheme(ms.r_min, kSupportRadiusMoment, ms.n_radial,
                          c.domain.dim == 1 ? 2 : 128, c.domain.dim);

  ExperimentReport rep;
  rep.name = "kernel-moment";
  rep.params = c.params;
  rep.inputs = nlohmann::ordered_json{{"domain", domain_to_json(c.domain)},
                                      {"scheme", ms.to_json()},
                                      {"xi_list", xis}};
  PlotTable t;
  t.name = "moments";
  t.columns = {"xi", "moment", "over_xi_sq", "over_log_pow"};
  for (double xi : xis) {
    const double m = kernel_moment({xi, 0.0}, c.params.gamma, scheme);
    const double low = xi > 0.0 ? m / (xi * xi) : 0.0;
    const double high =
        xi > 1.0 ? m / std::pow(std::log(xi), 2.0 * c.params.gamma) : 0.0;
    rep.add("moment[xi=" + std::to_string(xi) + "]", m);
    t.rows.push_back({xi, m, low, high});
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

ExperimentReport run_lusin(const RunConfig& c) {
  const SampledFunction f = sample(c.function, c.domain);
  const RadialScheme third = c.scheme.resolve(c.domain, kSupportRadiusLog);
  const PointFunctional L = lusin_functional(f, c.params, third);
  const PairSample pairs = config_pairs(c);
  const PairRatio r = lusin_pair_ratio(f, L, c.params.gamma, pairs);

  ExperimentReport rep;
  rep.name = "lusin";
  rep.params = c.params;
  rep.inputs = nlohmann::ordered_json{
      {"function", function_to_json(c.function)},
      {"domain", domain_to_json(c.domain)},
      {"scheme", c.scheme.to_json()},
      {"pair_count", static_cast<int>(pairs.pairs.size())},
      {"delta_min", pairs.delta_min},
      {"delta_max", pairs.delta_max}};
  rep.add("field_lp_norm", L.lp_norm(c.params.p));
  rep.add("max_ratio", r.max_ratio);
  rep.add("pairs_used", static_cast<double>(r.used));
  rep.add("pairs_skipped", static_cast<double>(r.skipped));
  rep.add("violations", static_cast<double>(r.violations));
  rep.tables.push_back(field_table(L));
  return rep;
}

ExperimentReport run_phistar(const RunConfig& c) {
  const SampledFunction f = sample(c.function, c.domain);
  const PointFunctional phi = phi_star(f, c.params.s, c.params.q);

  ExperimentReport rep;
  rep.name = "phistar";
  rep.params = c.params;
  rep.inputs = nlohmann::ordered_json{
      {"function", function_to_json(c.function)},
      {"domain", domain_to_json(c.domain)}};
  rep.add("l1_norm", phi.lp_norm(1.0));
  if (c.params.p > 1.0) rep.add("lp_norm", phi.lp_norm(c.params.p));
  rep.tables.push_back(field_table(phi));
  return rep;
}

ExperimentReport run_hajlasz(const RunConfig& c) {
  const SampledFunction f = sample(c.function, c.domain);
  CandidateWitness w;
  w.role = CandidateWitness::Role::hajlasz;
  if (c.extras.contains("witness_constant")) {
    const double g0 = c.extras.at("witness_constant").get<double>();
    w.g = sample(c.domain, [g0](const Point&) { return g0; });
  } else {
    const auto grad = analytic_gradient(c.function, c.domain);
    double lip = 0.0;
    for (std::int64_t e = 0; e < c.domain.node_count(); ++e)
      lip = std::max(lip, norm2(grad(c.domain.node(e)), c.domain.dim));
    w.g = sample(c.domain, [lip](const Point&) { return std::log1p(lip); });
  }
  const PairSample pairs = config_pairs(c);
  const PairRatio r = hajlasz_check(f, w, c.params.s, pairs);

  ExperimentReport rep;
  rep.name = "hajlasz";
  rep.params = c.params;
  rep.inputs = nlohmann::ordered_json{
      {"function", function_to_json(c.function)},
      {"domain", domain_to_json(c.domain)},
      {"witness_value", w.g.values.front()},
      {"pair_count", static_cast<int>(pairs.pairs.size())}};
  rep.add("max_ratio", r.max_ratio);
  rep.add("certified", r.max_ratio <= 1.0 ? 1.0 : 0.0);
  rep.add("pairs_used", static_cast<double>(r.used));
  rep.add("pairs_skipped", static_cast<double>(r.skipped));
  rep.add("violations", static_cast<double>(r.violations));
  rep.add("clamped", static_cast<double>(r.clamped));
  return rep;
}

ExperimentReport run_experiment(const RunConfig& c) {
  const std::string name = c.extras.contains("name")
                               ? c.extras.at("name").get<std::string>()
                               : "";
  auto get_list = [&](const char* key,
                      std::vector<double> fallback) -> std::vector<double> {
    if (c.extras.contains(key))
      return c.extras.at(key).get<std::vector<double>>();
    return fallback;
  };

  if (name == "indicator-scaling") {
    return indicator_scaling(
        c.params.gamma, c.params.p,
        get_list("r_list", {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128}),
        c.domain, c.scheme);
  }
  if (name == "embedding")
    return embedding_constant(c.function, c.params.gamma, c.params.p, c.domain,
                              c.scheme);
  if (name == "weak-embedding")
    return weak_embedding_constant(c.function, c.params.gamma, c.params.p,
                                   c.domain, c.scheme);
  if (name == "frac-embedding")
    return frac_embedding_constant(c.function, c.params.s, c.params.p,
                                   c.domain, c.scheme);
  if (name == "interpolation")
    return interpolation_constant(c.function, c.params.gamma, c.params.s,
                                  c.params.p, c.domain, c.scheme);
  if (name == "immersion")
    return immersion_monotonicity(c.function,
                                  get_list("gamma_list", {0.25, 0.5, 1.0}),
                                  c.params.s, c.params.p, c.domain, c.scheme);
  if (name == "truncated-immersion")
    return truncated_immersion_check(c.function, c.params.s, c.params.p,
                                     c.params.q, c.domain, c.scheme, c.seed);
  if (name == "gradient-bound")
    return gradient_log_bound(c.function, c.params.p, c.domain);
  if (name == "local-diff")
    return local_diff_decay(
        c.function, c.params.p,
        get_list("r_list", {0.25, 0.125, 0.0625, 0.03125, 0.015625}), c.domain,
        c.seed);
  if (name == "counterexample") {
    std::vector<int> m_list = {2, 4, 8, 16, 32};
    if (c.extras.contains("m_list"))
      m_list = c.extras.at("m_list").get<std::vector<int>>();
    return counterexample_suite(m_list, c.params.p, c.domain);
  }
  throw std::invalid_argument("unknown experiment: " + name);
}

int run_verify_all(const RunConfig& c) {
  AcceptanceSettings settings;
  settings.seed = c.seed;
  settings.deterministic = c.deterministic;
  settings.output_dir = (out_dir(c) / "verify-all").string();
  if (c.extras.contains("n_override"))
    settings.n_override = c.extras.at("n_override").get<int>();
  if (c.extras.contains("quick"))
    settings.quick = c.extras.at("quick").get<bool>();
  const auto results = run_all_criteria(settings);
  const int failures = print_criteria(results);

  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["config"] = c.to_json();
  j["timestamp"] = make_timestamp(c.deterministic);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json item;
    item["id"] = r.id;
    item["name"] = r.name;
    item["status"] = r.skipped ? "skipped" : (r.pass ? "pass" : "fail");
    item["detail"] = r.detail;
    arr.push_back(item);
  }
  j["criteria"] = arr;
  write_json_atomic(out_dir(c) / "verify-all" / "summary.json", j);
  return failures > 0 ? 1 : 0;
}

}  // namespace

int run(const RunConfig& config) {
  try {
#ifdef _OPENMP
    if (config.threads > 0) omp_set_num_threads(config.threads);
#endif
    if (config.subcommand == "verify-all") return run_verify_all(config);

    ExperimentReport rep;
    std::string stem = config.subcommand;
    if (config.subcommand == "seminorm") {
      rep = run_seminorm(config);
    } else if (config.subcommand == "spectral") {
      rep = run_spectral(config);
    } else if (config.subcommand == "kernel-moment") {
      rep = run_kernel_moment(config);
    } else if (config.subcommand == "lusin") {
      rep = run_lusin(config);
    } else if (config.subcommand == "phistar") {
      rep = run_phistar(config);
    } else if (config.subcommand == "hajlasz") {
      rep = run_hajlasz(config);
    } else if (config.subcommand == "experiment") {
      rep = run_experiment(config);
      stem = rep.name;
    } else {
      throw std::invalid_argument("unknown subcommand: " + config.subcommand);
    }
    finalize_report(rep, config);
    write_report(rep, config, stem);
    return 0;
  } catch (const std::invalid_argument& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"type", "validation"}, {"message", e.what()}};
    std::cout << err.dump() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"type", "internal"}, {"message", e.what()}};
    std::cout << err.dump() << std::endl;
    return 3;
  }
}

}  // namespace logsob
