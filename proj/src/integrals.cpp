#include "omega/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "omega/analytic.hpp"

namespace omega {

namespace {

void check_alpha_args(double alpha, double log_a, double log_x) {
  if (!(alpha > 0)) throw std::domain_error("alpha must be positive");
  if (!(log_a > 0)) throw std::domain_error("lower limit must exceed 1");
  if (!(log_x >= log_a)) throw std::domain_error("upper limit below lower limit");
}

double log_sum_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

}  // namespace

long double integral_log_bound(double log_x) {
  if (!(log_x >= std::log(1865.0))) throw std::domain_error("integral_log_bound requires x >= 1865");
  const long double L = log_x;
  return std::exp(L) * (1 / L + 1.5L / (L * L)) * (1 + static_cast<long double>(kOutwardRelative));
}

double log_power_integral_constant(double alpha, double log_a) {
  if (!(alpha > 0)) throw std::domain_error("alpha must be positive");
  if (!(log_a > 0)) throw std::domain_error("log a must be positive");
  const double inner = alpha / std::pow(std::exp(1.0) * log_a, alpha / (alpha + 1)) + std::pow(alpha, 1 / (alpha + 1));
  return round_up(std::pow(inner, alpha + 1) / alpha);
}

long double integral_log_alpha_bound(double alpha, double log_a, double log_x) {
  check_alpha_args(alpha, log_a, log_x);
  const long double L = log_x;
  return log_power_integral_constant(alpha, log_a) * std::exp(L) / std::pow(L, static_cast<long double>(alpha));
}

double log_integral_log_alpha_split(double alpha, double log_a, double log_x) {
  check_alpha_args(alpha, log_a, log_x);
  const double L = log_x;
  // g(t) with b = 1 + e^t
  auto g = [&](double t) {
    const double b = 1 + std::exp(t);
    return log_sum_exp(L / b - alpha * std::log(log_a), alpha * std::log(b) + L - alpha * std::log(L));
  };
  double lo = -40, hi = std::log(std::max(2.0, L));
  // coarse scan, then golden section around the best grid point
  constexpr int kGrid = 400;
  int best = 0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double v = g(lo + (hi - lo) * i / kGrid);
    if (v < best_v) best_v = v, best = i;
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / kGrid;
  double c = lo + (hi - lo) * std::min(kGrid, best + 1) / kGrid;
  const double phi = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 200; ++it) {
    const double x1 = c - phi * (c - a), x2 = a + phi * (c - a);
    if (g(x1) < g(x2)) c = x2; else a = x1;
  }
  // any b gives a valid bound, so the value at the located point is certified
  return std::min(best_v, g((a + c) / 2)) + kOutwardRelative;
}

double t_log_alpha_constant(double alpha, double log_a) { return round_up(log_power_integral_constant(alpha, 2 * log_a) / 2); }

long double integral_t_log_alpha_bound(double alpha, double log_a, double log_x) {
  check_alpha_args(alpha, log_a, log_x);
  const long double L = log_x;
  return t_log_alpha_constant(alpha, log_a) * std::exp(2 * L) / std::pow(L, static_cast<long double>(alpha));
}

double log_integral_t_log_alpha_split(double alpha, double log_a, double log_x) {
  return (alpha - 1) * std::log(2.0) + log_integral_log_alpha_split(alpha, 2 * log_a, 2 * log_x);
}

}  // namespace omega
