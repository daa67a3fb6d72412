#include "logsob/acceptance.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "logsob/experiments.hpp"
#include "logsob/fit.hpp"
#include "logsob/report.hpp"
#include "oracles.hpp"

namespace logsob {

namespace {

struct Check {
  CriterionResult result;

  explicit Check(int id, const std::string& name) {
    result.id = id;
    result.name = name;
    result.pass = true;
  }

  void require(bool ok, const std::string& what) {
    result.pass = result.pass && ok;
    result.detail.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
  }

  void note(const std::string& what) { result.detail.push_back(what); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

int pick_n(const AcceptanceSettings& s, int desk, int quick) {
  if (s.n_override > 0) return s.n_override;
  return s.quick ? quick : desk;
}

bool too_coarse(const AcceptanceSettings& s, int min_n, Check& c) {
  if (s.n_override > 0 && s.n_override < min_n) {
    c.result.skipped = true;
    c.result.pass = true;
    c.note("skipped: forced grid of " + std::to_string(s.n_override) +
           " points is too coarse to judge this criterion (needs >= " +
           std::to_string(min_n) + ")");
    return true;
  }
  return false;
}

SchemeSpec default_scheme() {
  SchemeSpec s;
  s.n_radial = 512;
  return s;
}

// shared inputs for the brute-force and identity criteria
struct NamedFunction {
  std::string name;
  AnalyticFunction fn;
  Domain dom;
};

std::vector<NamedFunction> oracle_functions(int n) {
  return {{"indicator(1/8)", AnalyticFunction::indicator_ball(0.125),
           Domain(1, 1.0, n)},
          {"gaussian", AnalyticFunction::gaussian(1.0), Domain(1, 8.0, n)},
          {"step_sum(4)", AnalyticFunction::step_sum(4), Domain(1, 2.0, n)}};
}

// ---- criterion 1 ------------------------------------------------------------

CriterionResult criterion_kernel_mass(const AcceptanceSettings&) {
  Check c(1, "kernel-mass closed form");
  const double r_min = 1e-4;
  for (double p : {0.5, 1.0, 2.0})
    for (double gamma : {0.25, 0.5, 1.0}) {
      const auto scheme =
          build_radial_scheme(r_min, kSupportRadiusLog, 256, 2, 1);
      const auto spec = KernelSpec::log_kernel(gamma, p, kSupportRadiusLog);
      const double numeric = kernel_mass(spec, scheme);
      const double closed =
          log_kernel_mass_closed_form(1, p, gamma, r_min, kSupportRadiusLog);
      const double rel = std::abs(numeric - closed) / closed;
      c.require(rel < 0.005, "p=" + fmt(p) + " gamma=" + fmt(gamma) +
                                 " rel err " + fmt(rel) + " < 0.5%");
    }
  return c.result;
}

// ---- criterion 2 ------------------------------------------------------------

CriterionResult criterion_brute_force(const AcceptanceSettings& s) {
  Check c(2, "brute-force equivalence");
  if (too_coarse(s, 512, c)) return c.result;
  const int n = pick_n(s, 512, 256);
  SeminormParams params;
  params.gamma = 0.5;
  params.p = 1.0;
  params.s = 0.5;
  params.q = 1.0;
  for (const auto& nf : oracle_functions(n)) {
    const SampledFunction f = sample(nf.fn, nf.dom);
    const double dx = nf.dom.spacing();

    const auto third = default_scheme().resolve(nf.dom, kSupportRadiusLog);
    const double x_pth = std::pow(x_seminorm(f, params, third), params.p);
    const double x_ref = oracle::pair_sum_pth(
        f,
        [&](double r) {
          return std::pow(std::log(1.0 / r), params.p * params.gamma - 1.0) / r;
        },
        dx, kSupportRadiusLog, [](double t) { return std::abs(t); });
    c.require(within(x_pth, x_ref, 0.03),
              nf.name + " log-order seminorm vs pair sum: " + fmt(x_pth) +
                  " vs " + fmt(x_ref));

    const double r_out = 4.0 * nf.dom.half_width;
    const auto out = default_scheme().resolve(nf.dom, r_out);
    const TailSeminorm w = w_seminorm(f, params, out);
    const double w_pth = std::pow(w.main_part, params.p);
    const double w_ref = oracle::pair_sum_pth(
        f,
        [&](double r) { return std::pow(r, -1.0 - params.p * params.s); }, dx,
        r_out, [](double t) { return std::abs(t); });
    c.require(within(w_pth, w_ref, 0.03),
              nf.name + " fractional seminorm vs pair sum: " + fmt(w_pth) +
                  " vs " + fmt(w_ref));

    SeminormParams tp = params;
    tp.p = 2.0;
    const double t_val = truncated_q_seminorm(f, tp, third);
    const double t_ref = oracle::pair_sum_pth(
        f, [&](double r) { return std::pow(std::log(1.0 / r), tp.p - 1.0) / r; },
        dx, kSupportRadiusLog,
        [&](double t) { return std::min(1.0, std::abs(t)); });
    c.require(within(t_val, t_ref, 0.03),
              nf.name + " truncated seminorm vs pair sum: " + fmt(t_val) +
                  " vs " + fmt(t_ref));
  }
  return c.result;
}

// ---- criterion 3 ------------------------------------------------------------

CriterionResult criterion_fubini(const AcceptanceSettings& s) {
  Check c(3, "Fubini identities");
  if (too_coarse(s, 512, c)) return c.result;
  const int n = pick_n(s, 512, 256);
  SeminormParams params;
  params.gamma = 0.5;
  params.p = 1.0;
  params.s = 0.5;
  for (const auto& nf : oracle_functions(n)) {
    const SampledFunction f = sample(nf.fn, nf.dom);
    const auto third = default_scheme().resolve(nf.dom, kSupportRadiusLog);
    const double xs = x_seminorm(f, params, third);
    const double ln = lusin_functional(f, params, third).lp_norm(params.p);
    c.require(within(ln, xs, 0.01), nf.name + " ||L||_p vs seminorm: " +
                                        fmt(ln) + " vs " + fmt(xs));

    const auto out =
        default_scheme().resolve(nf.dom, 4.0 * nf.dom.half_width);
    const double ws = w_seminorm(f, params, out).value;
    const double dn = frac_functional(f, params, out).lp_norm(params.p);
    c.require(within(dn, ws, 0.01), nf.name + " ||D||_p vs seminorm: " +
                                        fmt(dn) + " vs " + fmt(ws));
  }
  return c.result;
}

// ---- criterion 4 ------------------------------------------------------------

CriterionResult criterion_scaling(const AcceptanceSettings& s) {
  Check c(4, "indicator sharpness scaling");
  if (too_coarse(s, 2048, c)) return c.result;
  const int n = pick_n(s, 4096, 2048);
  const Domain dom(1, 1.0, n);
  const std::vector<double> r_list = {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  for (const auto& [p, gamma] :
       std::vector<std::pair<double, double>>{{1.0, 0.5}, {2.0, 0.5}, {1.0, 1.0}}) {
    const auto rep = indicator_scaling(gamma, p, r_list, dom, default_scheme());
    const double a = rep.get("fitted_a");
    const double b = rep.get("fitted_b");
    c.require(within(a, dom.dim, 0.15), "p=" + fmt(p) + " gamma=" + fmt(gamma) +
                                            " fitted radius exponent " +
                                            fmt(a) + " within 15% of 1");
    c.require(within(b, p * gamma, 0.25),
              "p=" + fmt(p) + " gamma=" + fmt(gamma) + " fitted log exponent " +
                  fmt(b) + " within 25% of " + fmt(p * gamma));
    c.note("scaled-value band [" + fmt(rep.band_lo) + ", " + fmt(rep.band_hi) +
           "], ratio " + fmt(rep.band_hi / rep.band_lo));
  }
  return c.result;
}

// ---- criterion 5 ------------------------------------------------------------

CriterionResult criterion_kernel_moment(const AcceptanceSettings& s) {
  Check c(5, "kernel-moment asymptotics");
  const int n_radial = s.quick ? 8192 : 16384;
  const auto scheme =
      build_radial_scheme(1e-6, kSupportRadiusMoment, n_radial, 2, 1);
  for (double gamma : {0.25, 0.5, 1.0}) {
    double lo_min = 0.0, lo_max = 0.0;
    for (double xi : {0.1, 0.5, 1.0, 5.0, 10.0}) {
      const double ratio = kernel_moment({xi, 0.0}, gamma, scheme) / (xi * xi);
      lo_min = lo_min == 0.0 ? ratio : std::min(lo_min, ratio);
      lo_max = std::max(lo_max, ratio);
    }
    c.require(lo_max / lo_min < 10.0,
              "gamma=" + fmt(gamma) + " low band |xi|<=10: ratio " +
                  fmt(lo_max / lo_min) + " < 10");
    double hi_min = 0.0, hi_max = 0.0;
    for (double xi : {20.0, 100.0, 1000.0, 10000.0}) {
      const double ratio = kernel_moment({xi, 0.0}, gamma, scheme) /
                           std::pow(std::log(xi), 2.0 * gamma);
      hi_min = hi_min == 0.0 ? ratio : std::min(hi_min, ratio);
      hi_max = std::max(hi_max, ratio);
    }
    c.require(hi_max / hi_min < 10.0,
              "gamma=" + fmt(gamma) + " high band 20<=|xi|<=1e4: ratio " +
                  fmt(hi_max / hi_min) + " < 10");
  }
  return c.result;
}

// ---- criterion 6 ------------------------------------------------------------

CriterionResult criterion_equivalence(const AcceptanceSettings& s) {
  Check c(6, "Fourier-side equivalence");
  if (too_coarse(s, 512, c)) return c.result;
  int n = pick_n(s, 1024, 512);
  if ((n & (n - 1)) != 0) {
    c.result.skipped = true;
    c.note("skipped: forced grid size is not a power of two");
    return c.result;
  }
  const double gamma = 0.5;
  std::vector<NamedFunction> funcs = {
      {"gaussian", AnalyticFunction::gaussian(1.0), Domain(1, 8.0, n)},
      {"indicator(1/8)", AnalyticFunction::indicator_ball(0.125),
       Domain(1, 1.0, n)}};
  for (std::uint64_t k = 1; k <= 5; ++k)
    funcs.push_back({"trig_poly(seed=" + std::to_string(s.seed + k) + ")",
                     AnalyticFunction::trig_poly(s.seed + k, 8),
                     Domain(1, 1.0, n)});

  double band_min = 0.0, band_max = 0.0;
  for (const auto& nf : funcs) {
    const auto scheme = default_scheme().resolve(nf.dom, kSupportRadiusLog);
    const double ratio =
        equivalence_ratio(sample(nf.fn, nf.dom), gamma, scheme);
    const Domain dom2(1, nf.dom.half_width, 2 * n);
    const auto scheme2 = default_scheme().resolve(dom2, kSupportRadiusLog);
    const double ratio2 =
        equivalence_ratio(sample(nf.fn, dom2), gamma, scheme2);
    band_min = band_min == 0.0 ? ratio : std::min(band_min, ratio);
    band_max = std::max(band_max, ratio);
    c.require(std::abs(ratio2 / ratio - 1.0) <= 0.02,
              nf.name + " ratio " + fmt(ratio) + " stable under refinement (" +
                  fmt(ratio2) + ")");
  }
  c.require(band_max / band_min < 25.0,
            "equivalence band ratio " + fmt(band_max / band_min) + " < 25");
  return c.result;
}

// ---- criterion 7 ------------------------------------------------------------

CriterionResult criterion_embedding(const AcceptanceSettings& s) {
  Check c(7, "log-order embedding");
  if (too_coarse(s, 512, c)) return c.result;
  const int n = pick_n(s, 2048, 1024);
  const double gamma = 0.5, p = 1.0;
  const Domain dom(1, 1.0, n);
  const auto scheme = default_scheme().resolve(dom, kSupportRadiusLog);
  double band_min = 0.0, band_max = 0.0;
  for (double r : {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128}) {
    const auto ratios = embedding_ratios(
        sample(AnalyticFunction::indicator_ball(r), dom), gamma, p, scheme,
        false);
    band_min = band_min == 0.0 ? ratios.integrated
                               : std::min(band_min, ratios.integrated);
    band_max = std::max(band_max, ratios.integrated);
  }
  c.require(band_max / band_min < 4.0,
            "indicator family integrated band ratio " +
                fmt(band_max / band_min) + " < 4");

  const Domain gdom(1, 8.0, n / 2);
  const auto g1 = embedding_ratios(
      sample(AnalyticFunction::gaussian(1.0), gdom), gamma, p,
      default_scheme().resolve(gdom, kSupportRadiusLog), false);
  const Domain gdom2(1, 8.0, n);
  const auto g2 = embedding_ratios(
      sample(AnalyticFunction::gaussian(1.0), gdom2), gamma, p,
      default_scheme().resolve(gdom2, kSupportRadiusLog), false);
  c.require(std::abs(g2.pointwise_max / g1.pointwise_max - 1.0) <= 0.10,
            "gaussian pointwise max stable under refinement: " +
                fmt(g1.pointwise_max) + " -> " + fmt(g2.pointwise_max));
  return c.result;
}

// ---- criterion 8 ------------------------------------------------------------

CriterionResult criterion_interpolation(const AcceptanceSettings& s) {
  Check c(8, "interpolation inequality");
  if (too_coarse(s, 512, c)) return c.result;
  const int n = pick_n(s, 2048, 1024);
  const Domain dom(1, 1.0, n);
  const auto third = default_scheme().resolve(dom, kSupportRadiusLog);
  const auto out = default_scheme().resolve(dom, 4.0 * dom.half_width);
  double band_min = 0.0, band_max = 0.0;
  for (int degree : {4, 16, 64}) {
    const double ratio = interpolation_ratio(
        sample(AnalyticFunction::trig_poly(s.seed, degree), dom), 0.5, 0.5,
        2.0, third, out);
    band_min = band_min == 0.0 ? ratio : std::min(band_min, ratio);
    band_max = std::max(band_max, ratio);
    c.note("degree " + std::to_string(degree) + ": ratio " + fmt(ratio));
  }
  c.require(band_max / band_min < 3.0,
            "interpolation band ratio " + fmt(band_max / band_min) + " < 3");
  return c.result;
}

// ---- criterion 9 ------------------------------------------------------------

CriterionResult criterion_lusin(const AcceptanceSettings& s) {
  Check c(9, "Lusin pair estimate");
  if (too_coarse(s, 512, c)) return c.result;
  const int n = pick_n(s, 2048, 512);
  const int pair_count = s.quick ? 2000 : 10000;
  SeminormParams params;
  params.gamma = 0.5;
  params.p = 1.0;
  const double dmax = 1.0 / 36.0 - 1e-9;
  for (const auto& nf :
       std::vector<NamedFunction>{{"gaussian", AnalyticFunction::gaussian(1.0),
                                   Domain(1, 8.0, n)},
                                  {"indicator(1/8)",
                                   AnalyticFunction::indicator_ball(0.125),
                                   Domain(1, 1.0, n)}}) {
    const SampledFunction f = sample(nf.fn, nf.dom);
    const auto scheme = default_scheme().resolve(nf.dom, kSupportRadiusLog);
    const PointFunctional L = lusin_functional(f, params, scheme);
    const double dmin = std::min(4.0 * nf.dom.spacing(), dmax / 4.0);
    const auto pairs_a = make_pair_sample(nf.dom, pair_count, dmin, dmax, s.seed);
    const auto pairs_b =
        make_pair_sample(nf.dom, pair_count, dmin, dmax, s.seed + 101);
    const PairRatio ra = lusin_pair_ratio(f, L, params.gamma, pairs_a);
    const PairRatio rb = lusin_pair_ratio(f, L, params.gamma, pairs_b);
    c.require(std::isfinite(ra.max_ratio) && ra.violations == 0,
              nf.name + " ratio finite with zero violations (" +
                  fmt(ra.max_ratio) + ", skipped " +
                  std::to_string(ra.skipped) + ")");
    c.require(std::isfinite(rb.max_ratio) && rb.violations == 0,
              nf.name + " reseeded ratio finite with zero violations");
    c.require(std::abs(rb.max_ratio / ra.max_ratio - 1.0) <= 0.20,
              nf.name + " ratio stable under reseeding: " + fmt(ra.max_ratio) +
                  " vs " + fmt(rb.max_ratio));
  }
  return c.result;
}

// ---- criterion 10 -----------------------------------------------------------

CriterionResult criterion_converse(const AcceptanceSettings& s) {
  Check c(10, "Lusin converse blow-up shape");
  if (too_coarse(s, 256, c)) return c.result;
  const int n = pick_n(s, 1024, 512);
  const Domain dom(1, 8.0, n);
  const double gamma = 0.5, p = 1.0;
  const SampledFunction f = sample(AnalyticFunction::gaussian(1.0), dom);
  const auto scheme = default_scheme().resolve(dom, kSupportRadiusLog);

  // constant witness from the Lipschitz bound |f(x)-f(y)| <= K |x-y|:
  // g = K/2 * max_t t log(1/t)^gamma over the kernel support
  const auto grad = analytic_gradient(AnalyticFunction::gaussian(1.0), dom);
  double lip = 0.0;
  for (std::int64_t e = 0; e < dom.node_count(); ++e)
    lip = std::max(lip, norm2(grad(dom.node(e)), dom.dim));
  const double t0 = kSupportRadiusLog;
  const double g0 =
      0.5 * lip * t0 * std::pow(std::log(1.0 / t0), gamma) * (1.0 + 1e-9);
  CandidateWitness w;
  w.role = CandidateWitness::Role::lusin_converse;
  w.g = sample(dom, [g0](const Point&) { return g0; });

  const double dmax = 1.0 / 36.0 - 1e-9;
  const auto pairs = make_pair_sample(
      dom, s.quick ? 2000 : 10000, std::min(4.0 * dom.spacing(), dmax / 4.0),
      dmax, s.seed);

  SeminormParams params;
  params.gamma = gamma;
  params.p = p;
  double prod_min = 0.0, prod_max = 0.0;
  for (double alpha : {gamma / 4, gamma / 2, 3 * gamma / 4}) {
    const auto res =
        lusin_converse_seminorm(f, w, gamma, alpha, params, scheme, pairs);
    c.require(res.hypothesis_ok, "alpha=" + fmt(alpha) +
                                     " hypothesis holds on the pair sample");
    const double prod = res.seminorm_pth * (gamma - alpha);
    prod_min = prod_min == 0.0 ? prod : std::min(prod_min, prod);
    prod_max = std::max(prod_max, prod);
    c.note("alpha=" + fmt(alpha) + ": seminorm^p=" + fmt(res.seminorm_pth) +
           " bound=" + fmt(res.bound) + " product=" + fmt(prod));
  }
  c.require(prod_max / prod_min < 5.0,
            "product band ratio " + fmt(prod_max / prod_min) + " < 5");
  return c.result;
}

// ---- criterion 11 -----------------------------------------------------------

CriterionResult criterion_counterexample(const AcceptanceSettings& s) {
  Check c(11, "step-sum counterexample growth");
  if (too_coarse(s, 512, c)) return c.result;
  const int n = pick_n(s, 2048, 1024);
  const Domain dom(1, 2.0, n);
  const std::vector<int> m_list =
      s.quick ? std::vector<int>{2, 4, 8} : std::vector<int>{2, 4, 8, 16, 32};
  const auto rep = counterexample_suite(m_list, 1.0, dom);
  c.require(rep.get("sup_norm_exact") == 1.0,
            "sup norm of every step function equals 1 exactly");
  const double expo = rep.get("phi_growth_exponent");
  c.require(expo >= 0.8, "fitted growth exponent " + fmt(expo) + " >= 0.8");
  c.note("lower-bound integral growth exponent: " +
         fmt(rep.get("lower_growth_exponent")));
  c.note("linear fit slope " + fmt(rep.get("linear_fit_slope")) + ", R^2 " +
         fmt(rep.get("linear_fit_r2")));
  return c.result;
}

// ---- criterion 12 -----------------------------------------------------------

CriterionResult criterion_weak_differentiability(const AcceptanceSettings& s) {
  Check c(12, "weak differentiability statements");
  if (too_coarse(s, 256, c)) return c.result;
  const int n = pick_n(s, 1024, 512);
  const Domain dom(1, 8.0, n);

  const auto grad_rep =
      gradient_log_bound(AnalyticFunction::gaussian(1.0), 1.0, dom);
  c.require(grad_rep.get("ratio") <= 1.0 + 1e-6,
            "gradient bound ratio " + fmt(grad_rep.get("ratio")) +
                " <= 1 + 1e-6");

  const std::vector<double> r_list = {0.25, 0.125, 0.0625, 0.03125, 0.015625};
  const Domain fine_dom(1, 4.0, 2 * n);  // radii resolved by several cells
  const auto decay_rep = local_diff_decay(AnalyticFunction::gaussian(1.0), 1.0,
                                          r_list, fine_dom, s.seed);
  c.require(decay_rep.get("decay_ratio") < 0.1,
            "gaussian local-difference decay " +
                fmt(decay_rep.get("decay_ratio")) + " < 0.1");

  const auto affine_rep = local_diff_decay(
      [](const Point& x) { return 0.5 * x[0] + 0.25; },
      [](const Point&) { return Point{0.5, 0.0}; }, 1.0, r_list, fine_dom,
      s.seed, "affine");
  c.require(affine_rep.get("initial") == 0.0 &&
                affine_rep.get("final") == 0.0,
            "affine input gives exactly zero at all radii");
  return c.result;
}

// ---- criterion 13 -----------------------------------------------------------

CriterionResult criterion_determinism(const AcceptanceSettings& s) {
  Check c(13, "determinism of seeded reports");
  auto snapshot = [&](std::uint64_t seed) {
    std::ostringstream out;
    const Domain dom1(1, 1.0, 1024);
    auto rep1 = indicator_scaling(0.5, 1.0, {1.0 / 16, 1.0 / 32, 1.0 / 64},
                                  dom1, default_scheme());
    rep1.seed = seed;
    rep1.timestamp = make_timestamp(true);
    out << rep1.to_json().dump();
    for (const auto& t : rep1.tables) out << csv_text(t);

    const Domain dom2(1, 2.0, 512);
    auto rep2 = counterexample_suite({2, 4}, 1.0, dom2);
    rep2.seed = seed;
    rep2.timestamp = make_timestamp(true);
    out << rep2.to_json().dump();

    const Domain dom3(1, 8.0, 512);
    auto rep3 = truncated_immersion_check(AnalyticFunction::gaussian(1.0), 1.0,
                                          1.0, 1.0, dom3, default_scheme(),
                                          seed);
    rep3.timestamp = make_timestamp(true);
    out << rep3.to_json().dump();
    return out.str();
  };
  const std::string first = snapshot(s.seed);
  const std::string second = snapshot(s.seed);
  c.require(first == second,
            "two runs with the same seed produce byte-identical reports (" +
                std::to_string(first.size()) + " bytes)");
  if (!s.output_dir.empty()) {
    write_text_atomic(std::filesystem::path(s.output_dir) /
                          "determinism_run1.json.txt",
                      first);
    write_text_atomic(std::filesystem::path(s.output_dir) /
                          "determinism_run2.json.txt",
                      second);
  }
  return c.result;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceSettings& settings) {
  try {
    switch (id) {
      case 1: return criterion_kernel_mass(settings);
      case 2: return criterion_brute_force(settings);
      case 3: return criterion_fubini(settings);
      case 4: return criterion_scaling(settings);
      case 5: return criterion_kernel_moment(settings);
      case 6: return criterion_equivalence(settings);
      case 7: return criterion_embedding(settings);
      case 8: return criterion_interpolation(settings);
      case 9: return criterion_lusin(settings);
      case 10: return criterion_converse(settings);
      case 11: return criterion_counterexample(settings);
      case 12: return criterion_weak_differentiability(settings);
      case 13: return criterion_determinism(settings);
      default: break;
    }
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail.push_back(std::string("exception: ") + e.what());
    return r;
  }
  CriterionResult r;
  r.id = id;
  r.name = "unknown";
  r.pass = false;
  r.detail.push_back("no such criterion");
  return r;
}

std::vector<CriterionResult> run_all_criteria(
    const AcceptanceSettings& settings) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id, settings));
  return out;
}

int print_criteria(const std::vector<CriterionResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
    if (!r.skipped && !r.pass) ++failures;
    std::printf("%s criterion %2d: %s\n", status, r.id, r.name.c_str());
    for (const auto& d : r.detail) std::printf("       %s\n", d.c_str());
  }
  std::printf("summary: %zu criteria, %d failed\n", results.size(), failures);
  std::fflush(stdout);
  return failures;
}

}  // namespace logsob
