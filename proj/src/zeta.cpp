#include <cmath>
#include <stdexcept>

#include "omega/analytic.hpp"

namespace omega {

namespace {

// Euler-Maclaurin terms for sum_{n >= N} n^{-s}. For f(x) = x^{-s} the
// remainder after the B_4 term has the sign of the first omitted term, so
// stopping after B_2 gives an upper bound and after B_4 a lower bound.
struct TailPieces {
  long double upper = 0;
  long double b4 = 0;
};

TailPieces em_tail(long double s, long double N) {
  const long double ns = std::pow(N, -s);
  TailPieces t;
  t.upper = N * ns / (s - 1) + ns / 2 + s * ns / (12 * N);
  t.b4 = s * (s + 1) * (s + 2) * ns / (720 * N * N * N);
  return t;
}

constexpr std::uint64_t kZetaTerms = 1000;
// head sum runs in long double; this covers the final rounding to double
constexpr double kZetaSlack = 1e-14;

}  // namespace

double zeta_tail_upper(double s, std::uint64_t N) {
  if (!(s > 1)) throw std::domain_error("zeta tail requires s > 1");
  if (N < 1) throw std::domain_error("zeta tail requires N >= 1");
  return round_up(static_cast<double>(em_tail(s, static_cast<long double>(N)).upper));
}

ZetaBracket zeta_bracket(double s) {
  if (!(s > 1) || !std::isfinite(s)) throw std::domain_error("zeta_real requires real s > 1");
  long double head = 0;
  for (std::uint64_t n = kZetaTerms - 1; n >= 1; --n) head += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  const TailPieces t = em_tail(s, kZetaTerms);
  ZetaBracket b;
  b.s = s;
  b.upper = static_cast<double>(head + t.upper) * (1 + kZetaSlack);
  b.lower = static_cast<double>(head + t.upper - t.b4) * (1 - kZetaSlack);
  return b;
}

double zeta_real(double s) { return zeta_bracket(s).upper; }

}  // namespace omega
