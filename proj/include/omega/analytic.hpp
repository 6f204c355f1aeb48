#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace omega {

using BigInt = boost::multiprecision::cpp_int;

// Certified upper bounds are inflated by this relative amount at the final
// combination step.
inline constexpr double kOutwardRelative = 1e-11;
inline double round_up(double v) { return v >= 0 ? v * (1 + kOutwardRelative) : v * (1 - kOutwardRelative); }
inline double round_down(double v) { return v >= 0 ? v * (1 - kOutwardRelative) : v * (1 + kOutwardRelative); }

// Coefficients of 1/((1+2/p^s)(1-1/p^s)^2) in powers of p^{-s}:
// a(k) = sum_{j<=k} (-1)^{k-j} 2^{k-j} (j+1).
struct SeriesCoefficient {
  unsigned k = 0;
  BigInt a_k;
};
SeriesCoefficient coefficient_a(unsigned k);

struct ZetaBracket {
  double s = 0;
  double lower = 0;
  double upper = 0;
  double width() const { return upper - lower; }
};

// Euler-Maclaurin bracket of zeta(s) for real s > 1; throws std::domain_error otherwise.
ZetaBracket zeta_bracket(double s);
// Upper bracket endpoint.
double zeta_real(double s);
// Upper bound for sum_{n >= N} n^{-s}, s > 1, N >= 1.
double zeta_tail_upper(double s, std::uint64_t N);

struct EulerProductBound {
  double sigma = 1;
  std::uint64_t m = 0;        // number of primes in the truncation (p_m is the m-th prime)
  std::uint64_t p_m = 0;
  double finite_product = 1;  // over odd primes p <= p_m
  double tail_factor = 1;
  double total = 1;           // certified upper bound on F*(sigma)
};

// Upper bound on F*(1 - theta); requires 0 <= theta < 1 - log 2 / log 3 and m >= 3.
EulerProductBound fstar_bound(double theta, std::uint64_t m = 10'000);
// 1 - 2^{1-sigma} + 2^{-2 sigma}
double gstar_denominator(double sigma);
double gstar_bound(double theta, std::uint64_t m = 10'000);

struct LimsupBound {
  double a = 0;
  double v_a = 0;
  double r_a = 0;
  double upper = 0;
  double lower = 0.5;
};
// Requires a > 2.
LimsupBound limsup_upper(double a);
// Leading coefficient of the bound on sum_{n<=x} a^Omega(n); requires a > 2.
double positive_sum_bound(double a);

struct PrimeSumCheck {
  double sum = 0;    // sum of 1/p over primes 5 <= p <= x
  double bound = 0;  // log log x
  bool ok = false;
};
PrimeSumCheck mertens_prime_sum_check(std::uint64_t x);

}  // namespace omega
