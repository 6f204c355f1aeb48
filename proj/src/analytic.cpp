#include <cmath>
#include <stdexcept>

#include "omega/analytic.hpp"
#include "omega/sieve.hpp"

namespace omega {

SeriesCoefficient coefficient_a(unsigned k) {
  BigInt sum = 0;
  BigInt pow2 = 1;  // 2^{k-j}, walking j downward
  for (unsigned i = 0; i <= k; ++i) {
    const unsigned j = k - i;
    const BigInt term = pow2 * (j + 1);
    if (i % 2) sum -= term; else sum += term;
    pow2 *= 2;
  }
  return {k, sum};
}

namespace {

const double kLog2Over3 = std::log(2.0) / std::log(3.0);

std::uint64_t nth_prime_ceiling(std::uint64_t m) {
  if (m < 6) return 15;
  const double lm = std::log(static_cast<double>(m));
  return static_cast<std::uint64_t>(static_cast<double>(m) * (lm + std::log(lm))) + 1;
}

}  // namespace

EulerProductBound fstar_bound(double theta, std::uint64_t m) {
  if (!(theta >= 0) || !(theta < 1 - kLog2Over3)) throw std::domain_error("theta must lie in [0, 1 - log2/log3)");
  if (m < 3) throw std::domain_error("truncation index m must be >= 3");
  const auto primes = primes_up_to(nth_prime_ceiling(m)).primes;
  if (primes.size() < m) throw std::logic_error("prime table too short");
  const long double sigma = 1.0L - theta;

  long double product = 1;
  for (std::uint64_t i = 1; i < m; ++i) {
    const long double p = primes[i];
    const long double ps = std::pow(p, -sigma);
    product *= 1 + 3 * ps * ps / (1 - 2 * ps);
  }
  const std::uint64_t pm = primes[m - 1];
  const long double lead = 3 / (1 - 2 * std::pow(static_cast<long double>(pm), -sigma));
  const long double tail = zeta_tail_upper(static_cast<double>(2 * sigma), pm + 1);

  EulerProductBound b;
  b.sigma = static_cast<double>(sigma);
  b.m = m;
  b.p_m = pm;
  b.finite_product = static_cast<double>(product);
  b.tail_factor = static_cast<double>(std::exp(lead * tail));
  b.total = round_up(static_cast<double>(product * std::exp(lead * tail)));
  return b;
}

double gstar_denominator(double sigma) { return 1 - std::exp2(1 - sigma) + std::exp2(-2 * sigma); }

double gstar_bound(double theta, std::uint64_t m) {
  const EulerProductBound f = fstar_bound(theta, m);
  const double den = gstar_denominator(f.sigma);
  if (!(den > 0)) throw std::domain_error("G* denominator is not positive");
  return round_up(f.total / den);
}

double positive_sum_bound(double a) {
  if (!(a > 2)) throw std::domain_error("positive_sum_bound requires a > 2");
  const double v = std::log2(a);
  const double t = std::pow(3.0, v);
  return round_up((t - 1) / (t - a) * zeta_real(v));
}

LimsupBound limsup_upper(double a) {
  if (!(a > 2)) throw std::domain_error("limsup bound requires a > 2");
  LimsupBound b;
  b.a = a;
  b.v_a = std::log2(a);
  b.r_a = a < 3 ? 0.0 : std::log(a) / std::log(3.0);
  const double t = std::pow(3.0, b.v_a);
  b.upper = round_up((a - 1) / (a + 1) * (t - 1) / (t - a) * zeta_real(b.v_a));
  b.lower = 0.5;
  return b;
}

PrimeSumCheck mertens_prime_sum_check(std::uint64_t x) {
  if (x < 5) throw std::domain_error("mertens_prime_sum_check requires x >= 5");
  PrimeSumCheck r;
  long double sum = 0;
  for (const auto p : primes_up_to(x).primes)
    if (p >= 5) sum += 1.0L / static_cast<long double>(p);
  r.sum = static_cast<double>(sum);
  r.bound = std::log(std::log(static_cast<double>(x)));
  r.ok = r.sum < r.bound;
  return r;
}

}  // namespace omega
