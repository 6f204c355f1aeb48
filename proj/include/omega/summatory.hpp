#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omega/accumulator.hpp"
#include "omega/sieve.hpp"

namespace omega {

// Summatory functions over n <= x:
//   W(a): (-a)^Omega(n)        T(a): a^Omega(n)       U: (-2)^Omega(n), n odd
//   u:    (-2)^Omega(n)/n, n odd                    M: mu(n)   m: mu(n)/n
//   m2:   (mu*mu)(n)/n         L: (-1)^Omega(n)      G: 2^Omega(n)
enum class SeriesTag { W, T, U, u, M, m, m2, L, G };

struct SeriesKind {
  SeriesTag tag = SeriesTag::W;
  double a = 2;  // only meaningful for W and T

  static SeriesKind W(double a) { return {SeriesTag::W, a}; }
  static SeriesKind T(double a) { return {SeriesTag::T, a}; }
  static SeriesKind U() { return {SeriesTag::U, 2}; }
  static SeriesKind u() { return {SeriesTag::u, 2}; }
  static SeriesKind M() { return {SeriesTag::M, 0}; }
  static SeriesKind m() { return {SeriesTag::m, 0}; }
  static SeriesKind m2() { return {SeriesTag::m2, 0}; }
  static SeriesKind L() { return {SeriesTag::L, 1}; }
  static SeriesKind G() { return {SeriesTag::G, 2}; }

  bool has_parameter() const { return tag == SeriesTag::W || tag == SeriesTag::T; }
  bool weighted() const { return tag == SeriesTag::u || tag == SeriesTag::m || tag == SeriesTag::m2; }
  // Integer-valued series; W/T only when a is a whole number.
  bool integer_valued() const;
  // Exponent used for the normalized column when none is given: log2(a) for
  // W/T, 1 for the other unweighted series, 0 for the weighted ones.
  double default_exponent() const;
  std::string name() const;
};

// Accepts W, T, U, u, M, m, m2, L, G (case-sensitive for u/U and m/M).
SeriesKind parse_series_kind(const std::string& tag, std::optional<double> a = std::nullopt);

struct SeriesValue {
  bool exact = true;
  int128 integer = 0;      // valid when exact
  double real = 0;         // always set
  double error_bound = 0;  // accumulated rounding bound; 0 when exact

  static SeriesValue from_exact(int128 v) { return {true, v, static_cast<double>(v), 0}; }
  static SeriesValue from_sum(const CompensatedSum& s) { return {false, 0, s.value(), s.error_bound()}; }
  std::string str() const;  // exact integers in full, reals with 12 significant digits
};

struct SummatoryCheckpoint {
  std::uint64_t x = 0;
  SeriesValue value;
};

enum class Arithmetic {
  Strict,  // integer-valued series in exact 128-bit (overflow throws OverflowError),
           // weighted and non-integer-a series in compensated double
  Auto,    // exact only when every partial sum provably fits in 128 bits
  Float,   // compensated double for everything
};

struct EvalOptions {
  std::uint64_t segment_size = kDefaultSegmentSize;
  Arithmetic arithmetic = Arithmetic::Strict;
  bool include_first = false;  // also emit a checkpoint at x = 1
};

using CheckpointSink = std::function<void(const SummatoryCheckpoint&)>;

// Checkpoints at every multiple of stride plus x_max, in ascending order.
// Segments are processed in parallel batches and folded in order.
void evaluate_stream(const SeriesKind& kind, std::uint64_t x_max, std::uint64_t stride,
                     const CheckpointSink& sink, const EvalOptions& opts = {});
std::vector<SummatoryCheckpoint> evaluate(const SeriesKind& kind, std::uint64_t x_max,
                                          std::uint64_t stride = 10'000,
                                          const EvalOptions& opts = {});
// Single-threaded reference with the same contract.
std::vector<SummatoryCheckpoint> evaluate_serial(const SeriesKind& kind, std::uint64_t x_max,
                                                 std::uint64_t stride = 10'000,
                                                 const EvalOptions& opts = {});

SeriesValue value_at(const SeriesKind& kind, std::uint64_t x, const EvalOptions& opts = {});

// Exact prefix values F(0..x_max), F(0) = 0. Integer-valued series only.
std::vector<int128> exact_prefix_table(const SeriesKind& kind, std::uint64_t x_max);

struct MuMuTable {
  std::uint64_t limit = 0;
  std::vector<std::int32_t> values;  // values[n] = (mu*mu)(n), values[0] = 0
};
MuMuTable mu_mu_table(std::uint64_t limit);

struct ExtremaRecord {
  std::uint64_t lo = 0, hi = 0;
  double exponent = 0;
  std::string normalizer;  // e.g. "x^0.81"
  std::uint64_t arg_max = 0;
  double max = 0;  // signed maximum of F(x)/x^e
  std::uint64_t arg_min = 0;
  double min = 0;  // signed minimum
  std::uint64_t arg_max_abs = 0;
  double max_abs = 0;
};

// Extrema of F(x)/x^exponent over the integers of [lo, hi]. With a
// non-increasing normalizer the step function attains its extrema at integers.
// Uses Arithmetic::Auto unless opts says otherwise.
ExtremaRecord scan_extrema(const SeriesKind& kind, std::uint64_t lo, std::uint64_t hi,
                           double exponent, std::optional<EvalOptions> opts = std::nullopt);
ExtremaRecord scan_extrema_serial(const SeriesKind& kind, std::uint64_t lo, std::uint64_t hi,
                                  double exponent, std::optional<EvalOptions> opts = std::nullopt);

struct BoundCheck {
  bool pass = true;
  std::optional<std::uint64_t> first_violation;
  SeriesValue value_at_violation;
  std::uint64_t checked = 0;
};

// Checks |F(x)| < c x^exponent for every integer x in [lo, hi].
BoundCheck verify_linear_bound(const SeriesKind& kind, double c, double exponent,
                               std::uint64_t lo, std::uint64_t hi,
                               std::optional<EvalOptions> opts = std::nullopt);

// Smallest x in [lo, hi] with F(x) > 0, if any.
std::optional<std::uint64_t> first_positive(const SeriesKind& kind, std::uint64_t lo,
                                            std::uint64_t hi,
                                            std::optional<EvalOptions> opts = std::nullopt);

// U(x) - 2U(x/2) + ... + (-2)^{k-1} U(x/2^{k-1}) + (-2)^k W(x/2^k), with U and W
// evaluated independently.
int128 dyadic_decompose(std::uint64_t x, unsigned k);

}  // namespace omega
