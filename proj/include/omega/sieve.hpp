#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace omega {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

struct PrimeList {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;  // ascending, all primes <= limit
};

// Sieve of Eratosthenes. limit < 2 gives an empty list.
PrimeList primes_up_to(std::uint64_t limit);

// Omega(n) and mu(n) for every n in [lo, hi).
struct Segment {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::vector<std::uint8_t> omega;
  std::vector<std::int8_t> mu;

  std::size_t size() const { return omega.size(); }
  int omega_at(std::uint64_t n) const { return omega[n - lo]; }
  int mu_at(std::uint64_t n) const { return mu[n - lo]; }
};

// Segmented sieve holding the base primes up to sqrt(hi_max). Read-only after
// construction, so one instance can be shared by all worker threads.
class SegmentSieve {
 public:
  explicit SegmentSieve(std::uint64_t hi_max, std::uint64_t segment_size = kDefaultSegmentSize);

  std::uint64_t hi_max() const { return hi_max_; }
  std::uint64_t segment_size() const { return segment_size_; }

  // Requires 1 <= lo < hi <= hi_max and hi - lo <= segment_size.
  Segment segment(std::uint64_t lo, std::uint64_t hi) const;

  // (mu*mu)(n) for n in [lo, hi); same preconditions as segment().
  std::vector<std::int32_t> mu_mu(std::uint64_t lo, std::uint64_t hi) const;

 private:
  void check_range(std::uint64_t lo, std::uint64_t hi) const;

  std::uint64_t hi_max_;
  std::uint64_t segment_size_;
  std::vector<std::uint32_t> base_primes_;
};

// One-shot segment; throws std::invalid_argument on an empty/invalid range or a
// range longer than segment_size.
Segment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                      std::uint64_t segment_size = kDefaultSegmentSize);

// Whole-range sieving over [lo, hi), split into segments. The parallel kernel
// distributes segments over OpenMP threads; the serial one is the reference.
Segment sieve_range(std::uint64_t lo, std::uint64_t hi,
                    std::uint64_t segment_size = kDefaultSegmentSize);
Segment sieve_range_serial(std::uint64_t lo, std::uint64_t hi,
                           std::uint64_t segment_size = kDefaultSegmentSize);

// Trial-division oracles. Throw std::domain_error for n == 0.
int omega_single(std::uint64_t n);
int mu_single(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace omega
