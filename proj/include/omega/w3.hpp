#pragma once

#include <cstdint>

#include "omega/accumulator.hpp"

namespace omega {

// v3 = log2 3
double v3();

// f(theta) = sum_{alpha >= 0} (-1)^{alpha + floor(theta - v3 alpha)} 3^{-(v3-1) alpha - frac(theta - v3 alpha)},
// truncated to alpha < terms.
struct KernelEval {
  double theta = 0;
  int terms = 0;
  double value = 0;
  double truncation_error = 0;  // sum of the omitted term magnitudes
};
KernelEval kernel_f(double theta, int terms = 64);
// sup |f|
double kernel_bound();

// Exact sum of (-3)^{a+b} over 2^a 3^b <= z.
int128 inner_sum_23(double z);

// sum_{m <= x, (m,6)=1} 3^Omega(m)/m against 1.32 (log x)^3.
struct Coprime6Check {
  double weighted = 0;
  double bound = 0;
  bool ok = false;
};
Coprime6Check coprime6_sum(std::uint64_t x);

// Upper bound for the m > x part of the main-term series, 0 < epsilon < v3 - 1.
double tail_bound(double x, double epsilon);

struct S3Budget {
  double compute = 0;
  double remainder_132 = 0;
  double tail = 0;
};
struct S3Estimate {
  std::uint64_t x_lo = 0, x_hi = 0;
  double epsilon = 0;
  double main_max = 0;
  std::uint64_t arg_max = 0;
  S3Budget budget;
  double s3_center = 0;
  double s3_halfwidth = 0;
};
// The compute term is fixed at 1e-3, the print resolution of the center.
S3Estimate estimate_s3(std::uint64_t x_lo, std::uint64_t x_hi, double epsilon);

}  // namespace omega
