// Benchmark: OpenMP kernels against the serial reference implementations.

#include <chrono>
#include <cstdio>
#include <string>

#include "logsob/grid.hpp"
#include "logsob/maximal.hpp"
#include "logsob/seminorms.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s,
            double serial_v, double parallel_v) {
  std::printf("%-24s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  "
              "rel diff %.2e\n",
              name, serial_s, parallel_s, serial_s / parallel_s,
              std::abs(serial_v - parallel_v) / std::abs(serial_v));
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::stoi(argv[1]) : 4096;
  const logsob::Domain dom(1, 1.0, n);
  const auto f =
      logsob::sample(logsob::AnalyticFunction::indicator_ball(0.125), dom);
  const auto g = logsob::sample(logsob::AnalyticFunction::trig_poly(7, 8), dom);
  const auto scheme = logsob::build_radial_scheme(
      dom.spacing(), logsob::kSupportRadiusLog, 512, 2, 1);
  logsob::SeminormParams params;
  params.gamma = 0.5;
  params.p = 1.0;
  params.s = 0.5;
  params.q = 1.0;

  std::printf("grid: %d points, scheme: %d radial nodes\n", n, scheme.n_radial);

  {
    auto t0 = Clock::now();
    const double sv = logsob::serial::x_seminorm(f, params, scheme);
    const double st = seconds_since(t0);
    t0 = Clock::now();
    const double pv = logsob::x_seminorm(f, params, scheme);
    report("x_seminorm", st, seconds_since(t0), sv, pv);
  }
  {
    const auto out = logsob::build_radial_scheme(dom.spacing(), 4.0, 512, 2, 1);
    auto t0 = Clock::now();
    const double sv = logsob::serial::w_seminorm(f, params, out).value;
    const double st = seconds_since(t0);
    t0 = Clock::now();
    const double pv = logsob::w_seminorm(f, params, out).value;
    report("w_seminorm", st, seconds_since(t0), sv, pv);
  }
  {
    auto t0 = Clock::now();
    const double sv = logsob::serial::truncated_q_seminorm(f, params, scheme);
    const double st = seconds_since(t0);
    t0 = Clock::now();
    const double pv = logsob::truncated_q_seminorm(f, params, scheme);
    report("truncated_q_seminorm", st, seconds_since(t0), sv, pv);
  }
  {
    auto t0 = Clock::now();
    const double sv = logsob::serial::phi_star(g, 1.0, 1.0).lp_norm(1.0);
    const double st = seconds_since(t0);
    t0 = Clock::now();
    const double pv = logsob::phi_star(g, 1.0, 1.0).lp_norm(1.0);
    report("phi_star", st, seconds_since(t0), sv, pv);
  }
  {
    auto t0 = Clock::now();
    const double sv = logsob::serial::hl_maximal(g).lp_norm(2.0);
    const double st = seconds_since(t0);
    t0 = Clock::now();
    const double pv = logsob::hl_maximal(g).lp_norm(2.0);
    report("hl_maximal", st, seconds_since(t0), sv, pv);
  }
  return 0;
}
