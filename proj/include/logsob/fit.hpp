#pragma once

#include <span>
#include <vector>

namespace logsob {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double residual_ss = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Ordinary least squares for a handful of columns; returns coefficients in
// column order. Normal equations in long double with partial pivoting.
std::vector<double> fit_least_squares(
    const std::vector<std::vector<double>>& columns, std::span<const double> y,
    double* residual_ss = nullptr);

}  // namespace logsob
