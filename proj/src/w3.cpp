#include "omega/w3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "omega/analytic.hpp"
#include "omega/sieve.hpp"
#include "omega/summatory.hpp"

namespace omega {

double v3() { return std::log2(3.0); }

namespace {
double ratio() { return std::pow(3.0, -(v3() - 1)); }
}  // namespace

KernelEval kernel_f(double theta, int terms) {
  if (terms < 1) throw std::invalid_argument("kernel_f needs at least one term");
  const double v = v3();
  KernelEval k;
  k.theta = theta;
  k.terms = terms;
  long double sum = 0;
  for (int a = 0; a < terms; ++a) {
    const double t = theta - v * a;
    const double fl = std::floor(t);
    const long double mag = std::pow(3.0L, -(v - 1) * a - (t - fl));
    const bool neg = (static_cast<long long>(fl) + a) % 2 != 0;
    sum += neg ? -mag : mag;
  }
  k.value = static_cast<double>(sum);
  const double r = ratio();
  k.truncation_error = round_up(std::pow(r, terms) / (1 - r));
  return k;
}

double kernel_bound() { return 1 / (1 - ratio()); }

int128 inner_sum_23(double z) {
  if (!(z >= 1)) throw std::domain_error("inner_sum_23 needs z >= 1");
  if (z > 1e18) throw std::domain_error("z too large");
  const auto zi = static_cast<std::uint64_t>(std::floor(z));
  int128 total = 0;
  int128 p3 = 1;  // (-3)^b
  for (std::uint64_t t = 1; t <= zi; t *= 3, p3 *= -3) {
    int128 s = p3;
    for (std::uint64_t u = t; u <= zi; u *= 2, s *= -3) {
      total += s;
      if (u > zi / 2) break;
    }
    if (t > zi / 3) break;
  }
  return total;
}

Coprime6Check coprime6_sum(std::uint64_t x) {
  if (x < 5) throw std::domain_error("coprime6_sum needs x >= 5");
  SegmentSieve sieve(x + 1);
  double pow3[64];
  pow3[0] = 1;
  for (int i = 1; i < 64; ++i) pow3[i] = pow3[i - 1] * 3;
  CompensatedSum sum;
  for (std::uint64_t lo = 1; lo <= x; lo += sieve.segment_size()) {
    const std::uint64_t hi = std::min(x + 1, lo + sieve.segment_size());
    const Segment seg = sieve.segment(lo, hi);
    for (std::uint64_t n = lo; n < hi; ++n)
      if (n % 2 != 0 && n % 3 != 0) sum.add(pow3[seg.omega_at(n)] / static_cast<double>(n));
  }
  Coprime6Check c;
  c.weighted = sum.value() + sum.error_bound();
  const double L = std::log(static_cast<double>(x));
  c.bound = 1.32 * L * L * L;
  c.ok = c.weighted <= c.bound;
  return c;
}

double tail_bound(double x, double epsilon) {
  const double v = v3();
  if (!(epsilon > 0 && epsilon < v - 1)) throw std::domain_error("epsilon must lie in (0, v3 - 1)");
  if (!(x >= 1)) throw std::domain_error("tail_bound needs x >= 1");
  const double q = std::pow(3.0, v - 1);
  const double f5 = std::pow(5.0, 1 + epsilon);
  return round_up(q / (q - 1) * (f5 - 1) / (f5 - 3) * zeta_real(1 + epsilon) * std::pow(x, 1 + epsilon - v));
}

S3Estimate estimate_s3(std::uint64_t x_lo, std::uint64_t x_hi, double epsilon) {
  if (x_lo < 2 || x_hi < x_lo) throw std::invalid_argument("estimate_s3 needs 2 <= x_lo <= x_hi");
  const double v = v3();
  S3Estimate e;
  e.x_lo = x_lo;
  e.x_hi = x_hi;
  e.epsilon = epsilon;
  e.budget.tail = tail_bound(static_cast<double>(x_lo), epsilon);

  const ExtremaRecord r = scan_extrema(SeriesKind::W(3), x_lo, x_hi, v);
  e.main_max = r.max_abs;
  e.arg_max = r.arg_max_abs;

  // 1.32 L^3 e^{(1-v3)L} increases up to L = 3/(v3-1) and decreases after
  const double La = std::log(static_cast<double>(x_lo)), Lb = std::log(static_cast<double>(x_hi));
  const double L = std::clamp(3 / (v - 1), La, Lb);
  e.budget.remainder_132 = round_up(1.32 * L * L * L * std::exp((1 - v) * L));
  e.budget.compute = 1e-3;
  e.s3_center = e.main_max;
  e.s3_halfwidth = e.budget.compute + e.budget.remainder_132 + e.budget.tail;
  return e;
}

}  // namespace omega
