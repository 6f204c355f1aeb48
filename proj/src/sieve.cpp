#include "omega/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace omega {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

PrimeList primes_up_to(std::uint64_t limit) {
  PrimeList out{limit, {}};
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) out.primes.push_back(i);
  return out;
}

SegmentSieve::SegmentSieve(std::uint64_t hi_max, std::uint64_t segment_size)
    : hi_max_(hi_max), segment_size_(segment_size) {
  if (segment_size_ == 0) throw std::invalid_argument("segment size must be positive");
  if (hi_max_ > (std::uint64_t{1} << 63)) throw std::invalid_argument("range beyond 2^63");
  const auto base = primes_up_to(hi_max_ > 1 ? isqrt(hi_max_ - 1) : 0);
  base_primes_.assign(base.primes.begin(), base.primes.end());
}

void SegmentSieve::check_range(std::uint64_t lo, std::uint64_t hi) const {
  if (lo < 1 || lo >= hi || hi > hi_max_)
    throw std::invalid_argument("invalid sieve range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + ")");
  if (hi - lo > segment_size_) throw std::invalid_argument("sieve range exceeds segment size");
}

namespace {

std::uint64_t first_multiple(std::uint64_t q, std::uint64_t lo) { return (lo + q - 1) / q * q; }

}  // namespace

Segment SegmentSieve::segment(std::uint64_t lo, std::uint64_t hi) const {
  check_range(lo, hi);
  const std::size_t len = hi - lo;
  const std::uint64_t top = hi - 1;
  Segment s{lo, hi, std::vector<std::uint8_t>(len, 0), std::vector<std::int8_t>(len, 1)};
  // product of the prime powers found so far; a leftover > 1 is a single large prime
  std::vector<std::uint64_t> found(len, 1);

  for (const std::uint64_t p : base_primes_) {
    if (p > top / p) break;
    for (std::uint64_t j = first_multiple(p, lo) - lo; j < len; j += p) {
      found[j] *= p;
      ++s.omega[j];
      s.mu[j] = static_cast<std::int8_t>(-s.mu[j]);
    }
    for (std::uint64_t q = p * p;; q *= p) {
      for (std::uint64_t j = first_multiple(q, lo) - lo; j < len; j += q) {
        found[j] *= p;
        ++s.omega[j];
        s.mu[j] = 0;
      }
      if (q > top / p) break;
    }
  }
  for (std::size_t j = 0; j < len; ++j) {
    if (found[j] != lo + j) {
      ++s.omega[j];
      s.mu[j] = static_cast<std::int8_t>(-s.mu[j]);
    }
  }
  return s;
}

std::vector<std::int32_t> SegmentSieve::mu_mu(std::uint64_t lo, std::uint64_t hi) const {
  check_range(lo, hi);
  const std::size_t len = hi - lo;
  const std::uint64_t top = hi - 1;
  // (mu*mu) is multiplicative with values -2, 1, 0 at p, p^2, p^k (k >= 3)
  std::vector<std::uint64_t> found(len, 1);
  std::vector<std::int8_t> simple(len, 0);  // primes dividing exactly once
  std::vector<bool> zero(len, false);
  for (const std::uint64_t p : base_primes_) {
    if (p > top / p) break;
    for (std::uint64_t j = first_multiple(p, lo) - lo; j < len; j += p) {
      found[j] *= p;
      ++simple[j];
    }
    int e = 2;
    for (std::uint64_t q = p * p;; q *= p, ++e) {
      for (std::uint64_t j = first_multiple(q, lo) - lo; j < len; j += q) {
        found[j] *= p;
        if (e == 2) --simple[j];
        if (e == 3) zero[j] = true;
      }
      if (q > top / p) break;
    }
  }
  std::vector<std::int32_t> out(len);
  for (std::size_t j = 0; j < len; ++j) {
    if (zero[j]) {
      out[j] = 0;
      continue;
    }
    const int k = simple[j] + (found[j] != lo + j ? 1 : 0);
    out[j] = (k % 2 ? -1 : 1) * (std::int32_t{1} << k);
  }
  return out;
}

Segment sieve_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size) {
  if (lo < 1 || lo >= hi) throw std::invalid_argument("invalid sieve range");
  return SegmentSieve(hi, segment_size).segment(lo, hi);
}

namespace {

Segment sieve_range_impl(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size,
                         bool parallel) {
  if (lo < 1 || lo >= hi) throw std::invalid_argument("invalid sieve range");
  const SegmentSieve sieve(hi, segment_size);
  const std::uint64_t count = (hi - lo + segment_size - 1) / segment_size;
  Segment out{lo, hi, std::vector<std::uint8_t>(hi - lo), std::vector<std::int8_t>(hi - lo)};
  auto fill = [&](std::uint64_t i) {
    const std::uint64_t a = lo + i * segment_size;
    const std::uint64_t b = std::min(hi, a + segment_size);
    const Segment s = sieve.segment(a, b);
    std::copy(s.omega.begin(), s.omega.end(), out.omega.begin() + static_cast<std::ptrdiff_t>(a - lo));
    std::copy(s.mu.begin(), s.mu.end(), out.mu.begin() + static_cast<std::ptrdiff_t>(a - lo));
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) fill(static_cast<std::uint64_t>(i));
  } else {
    for (std::uint64_t i = 0; i < count; ++i) fill(i);
  }
  return out;
}

}  // namespace

Segment sieve_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size) {
  return sieve_range_impl(lo, hi, segment_size, true);
}

Segment sieve_range_serial(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size) {
  return sieve_range_impl(lo, hi, segment_size, false);
}

int omega_single(std::uint64_t n) {
  if (n == 0) throw std::domain_error("omega_single: n must be >= 1");
  int count = 0;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  return n > 1 ? count + 1 : count;
}

int mu_single(std::uint64_t n) {
  if (n == 0) throw std::domain_error("mu_single: n must be >= 1");
  int sign = 1;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

}  // namespace omega
