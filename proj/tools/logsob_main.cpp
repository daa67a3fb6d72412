// Command-line front end: subcommands for the seminorm, spectral, pointwise
// functional, and experiment runners, plus verify-all.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "logsob/cli.hpp"

namespace {

struct FlagState {
  std::string config_path;
  std::string kind;
  double value = 0.0, sigma = 1.0, radius = 0.125;
  int steps = 4, degree = 8;
  std::uint64_t fn_seed = 1;

  int dim = 0;
  double half_width = 0.0;
  int n = 0;

  double gamma = -1.0, p = -1.0, s = -1.0, q = -1.0;
  double r_min = -1.0;
  int n_radial = 0, n_angular = 0;

  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
  int threads = -1;
  bool deterministic = false;
  bool allow_gamma_zero = false;
  bool dump_values = false;
  bool emit_svg = false;
};

void add_common_flags(CLI::App* cmd, FlagState& fs) {
  cmd->add_option("--config", fs.config_path, "JSON config file");
  cmd->add_option("--kind", fs.kind,
                  "function kind: constant|gaussian|indicator_ball|step_sum|"
                  "trig_poly");
  cmd->add_option("--value", fs.value, "constant value");
  cmd->add_option("--sigma", fs.sigma, "gaussian width");
  cmd->add_option("--radius", fs.radius, "indicator ball radius");
  cmd->add_option("--steps", fs.steps, "step count for step_sum");
  cmd->add_option("--degree", fs.degree, "trig polynomial degree");
  cmd->add_option("--fn-seed", fs.fn_seed, "trig polynomial seed");
  cmd->add_option("--dim", fs.dim, "dimension (1 or 2)");
  cmd->add_option("--half-width", fs.half_width, "box half width");
  cmd->add_option("--n", fs.n, "grid points per axis");
  cmd->add_option("--gamma", fs.gamma, "log order");
  cmd->add_option("--p", fs.p, "integrability exponent");
  cmd->add_option("--s", fs.s, "fractional order");
  cmd->add_option("--q", fs.q, "secondary exponent");
  cmd->add_option("--r-min", fs.r_min, "inner quadrature cutoff (0 = one cell)");
  cmd->add_option("--n-radial", fs.n_radial, "radial quadrature nodes");
  cmd->add_option("--n-angular", fs.n_angular, "angular quadrature nodes");
  cmd->add_option("--seed", fs.seed, "random seed")
      ->each([&fs](const std::string&) { fs.seed_set = true; });
  cmd->add_option("--out", fs.out, "output directory");
  cmd->add_option("--threads", fs.threads, "thread count (0 = default)");
  cmd->add_flag("--deterministic", fs.deterministic,
                "fixed timestamps in artifacts");
  cmd->add_flag("--allow-gamma-zero", fs.allow_gamma_zero,
                "accept gamma = 0 (outside the defining range)");
  cmd->add_flag("--dump-values", fs.dump_values,
                "also write the sampled function as CSV");
  cmd->add_flag("--svg", fs.emit_svg, "also render plot tables as SVG");
}

logsob::RunConfig build_config(const FlagState& fs, const std::string& sub,
                               const CLI::App* cmd) {
  logsob::RunConfig c;
  if (!fs.config_path.empty()) {
    std::ifstream in(fs.config_path);
    if (!in) throw CLI::ValidationError("cannot open " + fs.config_path);
    nlohmann::ordered_json j;
    in >> j;
    c = logsob::RunConfig::from_json(j);
  }
  c.subcommand = sub;
  const auto given = [cmd](const char* name) { return cmd->count(name) > 0; };

  if (!fs.kind.empty()) {
    nlohmann::ordered_json j;
    j["kind"] = fs.kind;
    j["value"] = fs.value;
    j["sigma"] = fs.sigma;
    j["radius"] = fs.radius;
    j["steps"] = fs.steps;
    j["seed"] = fs.fn_seed;
    j["degree"] = fs.degree;
    c.function = logsob::function_from_json(j);
  }
  const int dim = fs.dim > 0 ? fs.dim : c.domain.dim;
  const double hw = fs.half_width > 0 ? fs.half_width : c.domain.half_width;
  const int n = fs.n > 0 ? fs.n : c.domain.points_per_axis;
  c.domain = logsob::Domain(dim, hw, n);
  if (given("--gamma")) c.params.gamma = fs.gamma;
  if (given("--p")) c.params.p = fs.p;
  if (given("--s")) c.params.s = fs.s;
  if (given("--q")) c.params.q = fs.q;
  if (given("--r-min")) c.scheme.r_min = fs.r_min;
  if (fs.n_radial > 0) c.scheme.n_radial = fs.n_radial;
  if (fs.n_angular > 0) c.scheme.n_angular = fs.n_angular;
  if (fs.seed_set) c.seed = fs.seed;
  if (!fs.out.empty()) c.output_dir = fs.out;
  if (fs.threads >= 0) c.threads = fs.threads;
  c.deterministic = c.deterministic || fs.deterministic;
  c.allow_gamma_zero = c.allow_gamma_zero || fs.allow_gamma_zero;
  c.dump_values = c.dump_values || fs.dump_values;
  c.emit_svg = c.emit_svg || fs.emit_svg;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for logarithmic-order seminorms"};
  app.require_subcommand(1);

  FlagState fs;
  std::string experiment_name;
  int verify_n = 0;
  bool verify_quick = false;

  for (const char* name :
       {"seminorm", "spectral", "kernel-moment", "lusin", "phistar",
        "hajlasz"}) {
    add_common_flags(app.add_subcommand(name, name), fs);
  }
  auto* exp_cmd = app.add_subcommand("experiment", "run a named experiment");
  exp_cmd->add_option("name", experiment_name, "experiment name")->required();
  add_common_flags(exp_cmd, fs);
  auto* verify_cmd =
      app.add_subcommand("verify-all", "run the acceptance criteria");
  add_common_flags(verify_cmd, fs);
  verify_cmd->add_option("--force-n", verify_n,
                         "force a grid size (coarse grids skip criteria)");
  verify_cmd->add_flag("--quick", verify_quick, "reduced problem sizes");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    logsob::RunConfig config;
    if (name == "experiment") {
      bool known = false;
      for (const auto& e : logsob::known_experiments())
        known = known || e == experiment_name;
      if (!known) {
        std::cout << R"({"error":{"type":"validation","message":"unknown experiment: )"
                  << experiment_name << R"("}})" << std::endl;
        return 2;
      }
      // per-experiment defaults for anything the user left unset
      if (fs.config_path.empty()) {
        double hw = 0.0;
        int n = 0;
        if (experiment_name == "indicator-scaling") {
          hw = 1.0;
          n = 4096;
        } else if (experiment_name == "embedding" ||
                   experiment_name == "weak-embedding" ||
                   experiment_name == "interpolation") {
          hw = 1.0;
          n = 2048;
          if (fs.kind.empty()) fs.kind = "trig_poly";
        } else if (experiment_name == "counterexample") {
          hw = 2.0;
          n = 2048;
        } else if (experiment_name == "local-diff") {
          hw = 4.0;
          n = 2048;
        }
        if (fs.half_width == 0.0 && hw > 0.0) fs.half_width = hw;
        if (fs.n == 0 && n > 0) fs.n = n;
      }
      config = build_config(fs, "experiment", sub);
      // the one-dimensional Sobolev exponent needs s p < 1
      if (experiment_name == "frac-embedding" && sub->count("--s") == 0 &&
          sub->count("--p") == 0 && config.domain.dim == 1) {
        config.params.s = 0.25;
      }
      config.extras["name"] = experiment_name;
    } else if (name == "verify-all") {
      config = build_config(fs, "verify-all", sub);
      config.deterministic = true;
      if (verify_n > 0) config.extras["n_override"] = verify_n;
      if (verify_quick) config.extras["quick"] = true;
    } else {
      config = build_config(fs, name, sub);
    }
    return logsob::run(config);
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"type", "validation"}, {"message", e.what()}};
    std::cout << err.dump() << std::endl;
    return 2;
  }
}
