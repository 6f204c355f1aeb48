// Independent brute-force references shared by the test files.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline int omega(std::uint64_t n) {
  int k = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) n /= p, ++k;
  return k + (n > 1);
}

inline int mu(std::uint64_t n) {
  int k = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++k;
  }
  if (n > 1) ++k;
  return k % 2 ? -1 : 1;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// prefix[x] = sum_{n<=x} (-a)^Omega(n), integer a
inline std::vector<long long> W_prefix(int a, std::uint64_t n_max) {
  std::vector<long long> w(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    long long t = 1;
    for (int i = omega(n); i > 0; --i) t *= -a;
    w[n] = w[n - 1] + t;
  }
  return w;
}

// Adaptive Simpson on [a, b].
template <class F>
long double simpson(F&& f, long double a, long double b, long double tol, int depth = 40) {
  auto step = [&](auto&& self, long double lo, long double hi, long double flo, long double fmid, long double fhi,
                  long double whole, long double eps, int d) -> long double {
    const long double mid = (lo + hi) / 2, lm = (lo + mid) / 2, rm = (mid + hi) / 2;
    const long double flm = f(lm), frm = f(rm);
    const long double left = (mid - lo) / 6 * (flo + 4 * flm + fmid);
    const long double right = (hi - mid) / 6 * (fmid + 4 * frm + fhi);
    if (d <= 0 || std::fabs(left + right - whole) <= 15 * eps) return left + right + (left + right - whole) / 15;
    return self(self, lo, mid, flo, flm, fmid, left, eps / 2, d - 1) +
           self(self, mid, hi, fmid, frm, fhi, right, eps / 2, d - 1);
  };
  const long double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  return step(step, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, depth);
}

}  // namespace oracle
