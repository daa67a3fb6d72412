#include "logsob/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace logsob {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 matching points");
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.residual_ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    f.residual_ss += r * r;
  }
  f.r_squared = syy == 0.0 ? 1.0 : 1.0 - f.residual_ss / syy;
  return f;
}

std::vector<double> fit_least_squares(
    const std::vector<std::vector<double>>& columns, std::span<const double> y,
    double* residual_ss) {
  const std::size_t k = columns.size();
  if (k == 0) throw std::invalid_argument("fit: no columns");
  const std::size_t n = y.size();
  for (const auto& c : columns)
    if (c.size() != n) throw std::invalid_argument("fit: ragged columns");
  if (n < k) throw std::invalid_argument("fit: underdetermined system");

  // normal equations in long double; k is tiny so this is plenty stable
  std::vector<std::vector<long double>> m(k,
                                          std::vector<long double>(k + 1, 0.0L));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      long double s = 0.0L;
      for (std::size_t i = 0; i < n; ++i)
        s += static_cast<long double>(columns[a][i]) * columns[b][i];
      m[a][b] = s;
    }
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
      s += static_cast<long double>(columns[a][i]) * y[i];
    m[a][k] = s;
  }

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(static_cast<double>(m[r][col])) >
          std::abs(static_cast<double>(m[pivot][col])))
        pivot = r;
    std::swap(m[col], m[pivot]);
    if (m[col][col] == 0.0L)
      throw std::invalid_argument("fit: singular design matrix");
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const long double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<double> coeffs(k);
  for (std::size_t a = 0; a < k; ++a)
    coeffs[a] = static_cast<double>(m[a][k] / m[a][a]);

  if (residual_ss != nullptr) {
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double fit = 0.0;
      for (std::size_t a = 0; a < k; ++a) fit += coeffs[a] * columns[a][i];
      ss += (y[i] - fit) * (y[i] - fit);
    }
    *residual_ss = ss;
  }
  return coeffs;
}

}  // namespace logsob
