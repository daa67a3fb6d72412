#include "logsob/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "logsob/reduce.hpp"

namespace logsob {

namespace detail {

void fft_inplace(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace detail

std::int64_t Spectrum::count() const {
  std::int64_t n = size_per_axis;
  return domain.dim == 1 ? n : n * n;
}

double Spectrum::freq_norm(std::int64_t flat) const {
  if (domain.dim == 1) return std::abs(axis_freq(static_cast<int>(flat)));
  const int ix = static_cast<int>(flat % size_per_axis);
  const int iy = static_cast<int>(flat / size_per_axis);
  return std::hypot(axis_freq(ix), axis_freq(iy));
}

double Spectrum::l2_squared() const {
  const double cell = std::pow(freq_step, domain.dim);
  return cell * block_sum(static_cast<std::int64_t>(power.size()),
                          [&](std::int64_t i) { return power[i]; });
}

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Spectrum compute_spectrum(const SampledFunction& f, int pad) {
  const Domain& dom = f.domain;
  if (!is_pow2(dom.points_per_axis))
    throw std::invalid_argument(
        "compute_spectrum: points_per_axis must be a power of two");
  if (!is_pow2(pad))
    throw std::invalid_argument("compute_spectrum: pad must be a power of two");
  const int n = dom.points_per_axis;
  const int N = pad * n;
  const double dx = dom.spacing();
  const double two_pi = 2.0 * std::numbers::pi;

  Spectrum spec;
  spec.domain = dom;
  spec.pad = pad;
  spec.size_per_axis = N;
  spec.freq_step = two_pi / (N * dx);
  // |f^|^2 with the unitary continuum normalization: f^ = dx^d F / (2 pi)^{d/2}
  const double scale =
      std::pow(dx, 2 * dom.dim) / std::pow(two_pi, dom.dim);

  if (dom.dim == 1) {
    std::vector<std::complex<double>> a(static_cast<std::size_t>(N));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = f.values[i];
    detail::fft_inplace(a);
    spec.power.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
      const int k = ((i - N / 2) % N + N) % N;  // frequency-ordered
      spec.power[static_cast<std::size_t>(i)] = std::norm(a[k]) * scale;
    }
  } else {
    std::vector<std::vector<std::complex<double>>> rows(
        static_cast<std::size_t>(N));
    for (auto& r : rows) r.assign(static_cast<std::size_t>(N), 0.0);
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix)
        rows[static_cast<std::size_t>(iy)][static_cast<std::size_t>(ix)] =
            f.values[static_cast<std::size_t>(iy) * n + ix];
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < N; ++iy) detail::fft_inplace(rows[iy]);
    std::vector<std::complex<double>> col(static_cast<std::size_t>(N));
    for (int ix = 0; ix < N; ++ix) {
      for (int iy = 0; iy < N; ++iy) col[iy] = rows[iy][ix];
      detail::fft_inplace(col);
      for (int iy = 0; iy < N; ++iy) rows[iy][ix] = col[iy];
    }
    spec.power.resize(static_cast<std::size_t>(N) * N);
    for (int iy = 0; iy < N; ++iy)
      for (int ix = 0; ix < N; ++ix) {
        const int kx = ((ix - N / 2) % N + N) % N;
        const int ky = ((iy - N / 2) % N + N) % N;
        spec.power[static_cast<std::size_t>(iy) * N + ix] =
            std::norm(rows[ky][kx]) * scale;
      }
  }

  // discrete Plancherel, exact up to rounding
  const double lhs = spec.l2_squared();
  const double rhs = std::pow(lp_norm(f, 2.0), 2);
  if (rhs > 0.0 && std::abs(lhs - rhs) > 1e-10 * rhs)
    throw std::runtime_error("compute_spectrum: Plancherel identity violated");
  return spec;
}

double spectral_x_norm_squared(const SampledFunction& f, double gamma,
                               int pad) {
  if (!(gamma > 0.0))
    throw std::invalid_argument("spectral_x_norm: need gamma > 0");
  const Spectrum spec = compute_spectrum(f, pad);
  const double cell = std::pow(spec.freq_step, spec.domain.dim);
  const double log_part =
      cell * block_sum(spec.count(), [&](std::int64_t i) {
        const double xi = spec.freq_norm(i);
        if (!(xi > 1.0)) return 0.0;
        return std::pow(std::log(xi), 2.0 * gamma) *
               spec.power[static_cast<std::size_t>(i)];
      });
  return std::pow(lp_norm(f, 2.0), 2) + log_part;
}

double cos_kernel_moment(const Point& xi, double gamma,
                         const RadialScheme& scheme) {
  const double e = 2.0 * gamma - 1.0;
  double total = 0.0;
  for (int j = 0; j < scheme.n_radial; ++j) {
    const double r = scheme.radii[static_cast<std::size_t>(j)];
    const double radial = std::pow(std::log(1.0 / r), e) * scheme.log_step;
    double ang = 0.0;
    for (int a = 0; a < scheme.n_angular; ++a) {
      const Point& u = scheme.directions[static_cast<std::size_t>(a)];
      const double phase =
          scheme.dim == 1 ? r * u[0] * xi[0]
                          : r * (u[0] * xi[0] + u[1] * xi[1]);
      const double sin_half = std::sin(0.5 * phase);
      ang += 2.0 * sin_half * sin_half *
             scheme.angular_weights[static_cast<std::size_t>(a)];
    }
    total += radial * ang;
  }
  return total;
}

double kernel_moment(const Point& xi, double gamma,
                     const RadialScheme& scheme) {
  if (std::abs(scheme.outer_radius - kSupportRadiusMoment) > 1e-12)
    throw std::invalid_argument("kernel_moment: scheme radius must be 1/2");
  if (!(gamma > 0.0)) throw std::invalid_argument("kernel_moment: gamma > 0");
  return cos_kernel_moment(xi, gamma, scheme);
}

double equivalence_ratio(const SampledFunction& f, double gamma,
                         const RadialScheme& scheme_third, int pad) {
  SeminormParams params;
  params.gamma = gamma;
  params.p = 2.0;
  const double l2 = lp_norm(f, 2.0);
  if (!(l2 > 0.0))
    throw std::invalid_argument("equivalence_ratio: zero function");
  const double s = x_seminorm(f, params, scheme_third);
  const double denom = spectral_x_norm_squared(f, gamma, pad);
  if (!(denom > 0.0))
    throw std::invalid_argument("equivalence_ratio: zero denominator");
  return (l2 * l2 + s * s) / denom;
}

}  // namespace logsob
