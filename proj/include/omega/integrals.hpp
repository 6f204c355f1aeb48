#pragma once

namespace omega {

// Upper bound x/log x + 3x/(2 log^2 x) for the integral of 1/log t over [2, x].
// Requires log_x >= log 1865.
long double integral_log_bound(double log_x);

// C_alpha = alpha^{-1} (alpha/(e log a)^{alpha/(alpha+1)} + alpha^{1/(alpha+1)})^{alpha+1},
// so that the integral of (log t)^{-alpha} over [a, x] is at most C_alpha x/(log x)^alpha.
double log_power_integral_constant(double alpha, double log_a);
long double integral_log_alpha_bound(double alpha, double log_a, double log_x);

// Natural log of min_{b>1} [x^{1/b}/(log a)^alpha + b^alpha x/(log x)^alpha], the
// split bound for the same integral before b is fixed. Usable far beyond
// long double range.
double log_integral_log_alpha_split(double alpha, double log_a, double log_x);

// Integral of t/(log t)^alpha over [a, x]: the substitution s = t^2 turns it into
// 2^{alpha-1} times the integral of (log s)^{-alpha} over [a^2, x^2], giving
// the coefficient C_alpha(a^2)/2 in front of x^2/(log x)^alpha.
double t_log_alpha_constant(double alpha, double log_a);
long double integral_t_log_alpha_bound(double alpha, double log_a, double log_x);
double log_integral_t_log_alpha_split(double alpha, double log_a, double log_x);

}  // namespace omega
