#include "omega/summatory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <type_traits>

#include <omp.h>

namespace omega {

std::string to_string(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // work with the negative value so that INT128_MIN is representable
  int128 n = neg ? v : -v;
  std::string out;
  while (n != 0) {
    out.push_back(static_cast<char>('0' - static_cast<int>(n % 10)));
    n /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

std::string fmt_g(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string SeriesValue::str() const { return exact ? to_string(integer) : fmt_g(real); }

bool SeriesKind::integer_valued() const {
  if (weighted()) return false;
  if (has_parameter()) return a == std::floor(a);
  return true;
}

double SeriesKind::default_exponent() const {
  if (has_parameter()) return std::log2(a);
  return weighted() ? 0.0 : 1.0;
}

std::string SeriesKind::name() const {
  switch (tag) {
    case SeriesTag::W: return "W(" + fmt_g(a) + ")";
    case SeriesTag::T: return "T(" + fmt_g(a) + ")";
    case SeriesTag::U: return "U";
    case SeriesTag::u: return "u";
    case SeriesTag::M: return "M";
    case SeriesTag::m: return "m";
    case SeriesTag::m2: return "m2";
    case SeriesTag::L: return "L";
    case SeriesTag::G: return "G";
  }
  return "?";
}

SeriesKind parse_series_kind(const std::string& tag, std::optional<double> a) {
  SeriesKind k;
  if (tag == "W") k = SeriesKind::W(a.value_or(2));
  else if (tag == "T") k = SeriesKind::T(a.value_or(2));
  else if (tag == "U") k = SeriesKind::U();
  else if (tag == "u") k = SeriesKind::u();
  else if (tag == "M") k = SeriesKind::M();
  else if (tag == "m") k = SeriesKind::m();
  else if (tag == "m2") k = SeriesKind::m2();
  else if (tag == "L") k = SeriesKind::L();
  else if (tag == "G") k = SeriesKind::G();
  else throw std::invalid_argument("unknown series '" + tag + "'");
  if (k.has_parameter()) {
    if (!(k.a > 0) || !std::isfinite(k.a)) throw std::invalid_argument("parameter a must be positive");
  } else if (a) {
    throw std::invalid_argument("series " + tag + " takes no parameter");
  }
  return k;
}

namespace {

constexpr int kMaxOmega = 64;

// Per-n terms of a series, generated one sieve segment at a time.
class TermSource {
 public:
  TermSource(const SeriesKind& kind, std::uint64_t x_max, std::uint64_t segment_size)
      : kind_(kind), sieve_(x_max + 1, segment_size) {
    double base = 0;
    int sign = 1;
    switch (kind.tag) {
      case SeriesTag::W: base = kind.a; sign = -1; break;
      case SeriesTag::T: base = kind.a; break;
      case SeriesTag::U:
      case SeriesTag::u: base = 2; sign = -1; break;
      case SeriesTag::L: base = 1; sign = -1; break;
      case SeriesTag::G: base = 2; break;
      default: break;
    }
    const bool whole = base == std::floor(base);
    int128 e = 1;
    bool ok = whole;
    for (int k = 0; k < kMaxOmega; ++k) {
      real_[k] = (sign < 0 && k % 2 ? -1.0 : 1.0) * std::pow(base, k);
      exact_ok_[k] = ok;
      exact_[k] = ok ? e : 0;
      if (ok) {
        int128 next;
        if (__builtin_mul_overflow(e, static_cast<int128>(sign) * static_cast<int128>(base), &next))
          ok = false;
        else
          e = next;
      }
    }
    // magnitude bound used by the Auto policy
    log2_base_ = base > 0 ? std::log2(base) : 0;
  }

  const SeriesKind& kind() const { return kind_; }
  double log2_base() const { return log2_base_; }

  // f(n, term) for n in [lo, hi), ascending.
  template <class Term, class F>
  void for_each(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    if (kind_.tag == SeriesTag::m2) {
      const auto mm = sieve_.mu_mu(lo, hi);
      for (std::uint64_t n = lo; n < hi; ++n) {
        if constexpr (std::is_same_v<Term, int128>)
          throw std::logic_error("m2 has no exact terms");
        else
          f(n, static_cast<double>(mm[n - lo]) / static_cast<double>(n));
      }
      return;
    }
    const Segment s = sieve_.segment(lo, hi);
    const bool odd_only = kind_.tag == SeriesTag::U || kind_.tag == SeriesTag::u;
    const bool use_mu = kind_.tag == SeriesTag::M || kind_.tag == SeriesTag::m;
    for (std::uint64_t n = lo; n < hi; ++n) {
      const std::size_t j = n - lo;
      if constexpr (std::is_same_v<Term, int128>) {
        int128 t;
        if (use_mu) {
          t = s.mu[j];
        } else if (odd_only && n % 2 == 0) {
          t = 0;
        } else {
          const int k = s.omega[j];
          if (!exact_ok_[k]) throw OverflowError("term " + kind_.name() + " at n=" + std::to_string(n) +
                                                 " exceeds 128 bits");
          t = exact_[k];
        }
        f(n, t);
      } else {
        double t;
        if (use_mu)
          t = s.mu[j];
        else if (odd_only && n % 2 == 0)
          t = 0;
        else
          t = real_[s.omega[j]];
        if (kind_.weighted()) t /= static_cast<double>(n);
        f(n, t);
      }
    }
  }

 private:
  SeriesKind kind_;
  SegmentSieve sieve_;
  std::array<int128, kMaxOmega> exact_{};
  std::array<bool, kMaxOmega> exact_ok_{};
  std::array<double, kMaxOmega> real_{};
  double log2_base_ = 0;
};

bool use_exact(const SeriesKind& kind, std::uint64_t x_max, Arithmetic mode) {
  if (!kind.integer_valued() || mode == Arithmetic::Float) return false;
  if (mode == Arithmetic::Strict) return true;
  // |F(x)| <= x * base^Omega_max with Omega_max <= log2 x
  const double lx = std::log2(static_cast<double>(std::max<std::uint64_t>(x_max, 2)));
  const double base = kind.tag == SeriesTag::W || kind.tag == SeriesTag::T ? kind.a
                      : kind.tag == SeriesTag::U || kind.tag == SeriesTag::G ? 2.0
                                                                               : 1.0;
  return lx + std::floor(lx) * std::log2(std::max(base, 1.0)) < 125.0;
}

template <class Acc>
using TermOf = std::conditional_t<std::is_same_v<Acc, ExactSum>, int128, double>;

template <class Acc>
SeriesValue to_value(const Acc& acc) {
  if constexpr (std::is_same_v<Acc, ExactSum>)
    return SeriesValue::from_exact(acc.value());
  else
    return SeriesValue::from_sum(acc);
}

template <class Acc>
double real_of(const Acc& acc) {
  return static_cast<double>(acc.value());
}

// Splits [lo, hi] into segments, evaluates seg_fn on batches of them in
// parallel and folds the results in ascending order. fold returns false to stop.
template <class Result, class SegFn, class Fold>
void run_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t seg, bool parallel, SegFn seg_fn,
                  Fold fold) {
  if (lo > hi) return;
  const std::uint64_t count = (hi - lo) / seg + 1;
  const std::uint64_t batch =
      parallel ? static_cast<std::uint64_t>(std::max(1, 4 * omp_get_max_threads())) : 1;
  for (std::uint64_t start = 0; start < count; start += batch) {
    const std::uint64_t n = std::min(batch, count - start);
    std::vector<Result> results(n);
    std::exception_ptr err;
    auto run_one = [&](std::uint64_t i) {
      const std::uint64_t a = lo + (start + i) * seg;
      const std::uint64_t b = std::min(hi, a + seg - 1);
      try {
        results[i] = seg_fn(start + i, a, b + 1);
      } catch (...) {
#pragma omp critical(omega_segment_error)
        if (!err) err = std::current_exception();
      }
    };
    if (parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) run_one(static_cast<std::uint64_t>(i));
    } else {
      for (std::uint64_t i = 0; i < n; ++i) run_one(i);
    }
    if (err) std::rethrow_exception(err);
    for (std::uint64_t i = 0; i < n; ++i)
      if (!fold(start + i, std::move(results[i]))) return;
  }
}

template <class Acc>
struct Partial {
  std::vector<std::pair<std::uint64_t, Acc>> marks;
  Acc total;
};

template <class Acc>
void evaluate_impl(const TermSource& src, std::uint64_t x_max, std::uint64_t stride,
                   const CheckpointSink& sink, const EvalOptions& opts, bool parallel) {
  using Term = TermOf<Acc>;
  auto is_mark = [&](std::uint64_t n) {
    return n % stride == 0 || n == x_max || (opts.include_first && n == 1);
  };
  Acc running;
  run_segments<Partial<Acc>>(
      1, x_max, opts.segment_size, parallel,
      [&](std::uint64_t, std::uint64_t a, std::uint64_t b) {
        Partial<Acc> p;
        src.for_each<Term>(a, b, [&](std::uint64_t n, Term t) {
          p.total.add(t);
          if (is_mark(n)) p.marks.emplace_back(n, p.total);
        });
        return p;
      },
      [&](std::uint64_t, Partial<Acc>&& p) {
        for (const auto& [x, acc] : p.marks) {
          Acc v = running;
          v.merge(acc);
          sink({x, to_value(v)});
        }
        running.merge(p.total);
        return true;
      });
}

void evaluate_dispatch(const SeriesKind& kind, std::uint64_t x_max, std::uint64_t stride,
                       const CheckpointSink& sink, const EvalOptions& opts, bool parallel) {
  if (x_max < 1) throw std::invalid_argument("x_max must be >= 1");
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  if (opts.segment_size < 1) throw std::invalid_argument("segment size must be positive");
  const TermSource src(kind, x_max, opts.segment_size);
  if (use_exact(kind, x_max, opts.arithmetic))
    evaluate_impl<ExactSum>(src, x_max, stride, sink, opts, parallel);
  else
    evaluate_impl<CompensatedSum>(src, x_max, stride, sink, opts, parallel);
}

// Visits F(n) for every n in [lo, hi]. Pass one folds per-segment totals into
// entry offsets; pass two rescans the segments meeting [lo, hi] from those
// offsets. visit(local, n, acc) accumulates into a Local per segment; fold
// consumes them in order and may stop early.
template <class Acc, class Local, class Visit, class Fold>
void scan_impl(const TermSource& src, std::uint64_t lo, std::uint64_t hi, std::uint64_t seg,
               bool parallel, Visit visit, Fold fold) {
  using Term = TermOf<Acc>;
  const std::uint64_t first = (lo - 1) / seg;
  std::vector<Acc> offsets(first + 1);
  if (first > 0) {
    Acc running;
    run_segments<Acc>(
        1, first * seg, seg, parallel,
        [&](std::uint64_t, std::uint64_t a, std::uint64_t b) {
          Acc t;
          src.for_each<Term>(a, b, [&](std::uint64_t, Term v) { t.add(v); });
          return t;
        },
        [&](std::uint64_t i, Acc&& t) {
          running.merge(t);
          offsets[i + 1] = running;
          return true;
        });
  }
  // segments after the first are entered from the previous segment's exit, so
  // pass two carries offsets forward between batches
  Acc carry = offsets[first];
  const std::uint64_t start = 1 + first * seg;
  struct Out {
    Local local;
    Acc total;
  };
  // totals of the scanned segments are needed before they can be scanned in
  // parallel, so each batch is done in two steps
  const std::uint64_t count = (hi - start) / seg + 1;
  // one thread gains nothing from the extra totals pass
  const int threads = parallel ? omp_get_max_threads() : 1;
  const std::uint64_t batch = threads > 1 ? static_cast<std::uint64_t>(4 * threads) : 1;
  for (std::uint64_t b0 = 0; b0 < count; b0 += batch) {
    const std::uint64_t n = std::min(batch, count - b0);
    const std::uint64_t a0 = start + b0 * seg;
    const std::uint64_t a1 = std::min(hi, a0 + n * seg - 1);
    std::vector<Acc> entry(n);
    if (n > 1) {
      std::vector<Acc> totals;
      totals.reserve(n);
      run_segments<Acc>(
          a0, a1, seg, parallel,
          [&](std::uint64_t, std::uint64_t a, std::uint64_t b) {
            Acc t;
            src.for_each<Term>(a, b, [&](std::uint64_t, Term v) { t.add(v); });
            return t;
          },
          [&](std::uint64_t, Acc&& t) {
            totals.push_back(std::move(t));
            return true;
          });
      Acc running = carry;
      for (std::uint64_t i = 0; i < n; ++i) {
        entry[i] = running;
        running.merge(totals[i]);
      }
    } else {
      entry[0] = carry;
    }
    bool stop = false;
    run_segments<Out>(
        a0, a1, seg, parallel,
        [&](std::uint64_t i, std::uint64_t a, std::uint64_t b) {
          Out o;
          Acc acc = entry[i];
          src.for_each<Term>(a, b, [&](std::uint64_t x, Term v) {
            acc.add(v);
            o.total.add(v);
            if (x >= lo) visit(o.local, x, acc);
          });
          return o;
        },
        [&](std::uint64_t, Out&& o) {
          carry.merge(o.total);
          if (!fold(std::move(o.local))) {
            stop = true;
            return false;
          }
          return true;
        });
    if (stop) return;
  }
}

template <class Acc, class Local, class Visit, class Fold>
void scan_serial_impl(const TermSource& src, std::uint64_t lo, std::uint64_t hi, std::uint64_t seg,
                      Visit visit, Fold fold) {
  using Term = TermOf<Acc>;
  Acc acc;
  for (std::uint64_t a = 1; a <= hi; a += seg) {
    const std::uint64_t b = std::min(hi, a + seg - 1) + 1;
    Local local;
    src.for_each<Term>(a, b, [&](std::uint64_t x, Term v) {
      acc.add(v);
      if (x >= lo) visit(local, x, acc);
    });
    if (b > lo && !fold(std::move(local))) return;
  }
}

struct ExtremaLocal {
  bool any = false;
  std::uint64_t arg_max = 0, arg_min = 0, arg_abs = 0;
  double max = 0, min = 0, abs = 0;

  void see(std::uint64_t x, double v) {
    if (!any || v > max) { max = v; arg_max = x; }
    if (!any || v < min) { min = v; arg_min = x; }
    if (!any || std::fabs(v) > abs) { abs = std::fabs(v); arg_abs = x; }
    any = true;
  }
  // o covers later x; ties keep the earlier point
  void absorb(const ExtremaLocal& o) {
    if (!o.any) return;
    if (!any) { *this = o; return; }
    if (o.max > max) { max = o.max; arg_max = o.arg_max; }
    if (o.min < min) { min = o.min; arg_min = o.arg_min; }
    if (o.abs > abs) { abs = o.abs; arg_abs = o.arg_abs; }
  }
};

void check_scan_range(std::uint64_t lo, std::uint64_t hi, const EvalOptions& o) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("scan range must satisfy 1 <= lo <= hi");
  if (o.segment_size < 1) throw std::invalid_argument("segment size must be positive");
}

EvalOptions scan_options(const std::optional<EvalOptions>& opts) {
  if (opts) return *opts;
  EvalOptions o;
  o.arithmetic = Arithmetic::Auto;
  return o;
}

ExtremaRecord extrema_dispatch(const SeriesKind& kind, std::uint64_t lo, std::uint64_t hi, double e,
                               const std::optional<EvalOptions>& opts_in, bool parallel) {
  const EvalOptions o = scan_options(opts_in);
  check_scan_range(lo, hi, o);
  const TermSource src(kind, hi, o.segment_size);
  ExtremaLocal best;
  auto run = [&](auto tag) {
    using Acc = decltype(tag);
    auto visit = [&](ExtremaLocal& l, std::uint64_t x, const Acc& acc) {
      l.see(x, real_of(acc) / std::pow(static_cast<double>(x), e));
    };
    auto fold = [&](ExtremaLocal&& l) {
      best.absorb(l);
      return true;
    };
    if (parallel)
      scan_impl<Acc, ExtremaLocal>(src, lo, hi, o.segment_size, true, visit, fold);
    else
      scan_serial_impl<Acc, ExtremaLocal>(src, lo, hi, o.segment_size, visit, fold);
  };
  if (use_exact(kind, hi, o.arithmetic))
    run(ExactSum{});
  else
    run(CompensatedSum{});
  ExtremaRecord r;
  r.lo = lo;
  r.hi = hi;
  r.exponent = e;
  r.normalizer = "x^" + fmt_g(e, 6);
  r.arg_max = best.arg_max;
  r.max = best.max;
  r.arg_min = best.arg_min;
  r.min = best.min;
  r.arg_max_abs = best.arg_abs;
  r.max_abs = best.abs;
  return r;
}

}  // namespace

void evaluate_stream(const SeriesKind& kind, std::uint64_t x_max, std::uint64_t stride,
                     const CheckpointSink& sink, const EvalOptions& opts) {
  evaluate_dispatch(kind, x_max, stride, sink, opts, true);
}

std::vector<SummatoryCheckpoint> evaluate(const SeriesKind& kind, std::uint64_t x_max,
                                          std::uint64_t stride, const EvalOptions& opts) {
  std::vector<SummatoryCheckpoint> out;
  evaluate_dispatch(kind, x_max, stride, [&](const SummatoryCheckpoint& c) { out.push_back(c); }, opts,
                    true);
  return out;
}

std::vector<SummatoryCheckpoint> evaluate_serial(const SeriesKind& kind, std::uint64_t x_max,
                                                 std::uint64_t stride, const EvalOptions& opts) {
  std::vector<SummatoryCheckpoint> out;
  evaluate_dispatch(kind, x_max, stride, [&](const SummatoryCheckpoint& c) { out.push_back(c); }, opts,
                    false);
  return out;
}

SeriesValue value_at(const SeriesKind& kind, std::uint64_t x, const EvalOptions& opts) {
  if (x == 0) return kind.integer_valued() && opts.arithmetic != Arithmetic::Float
                         ? SeriesValue::from_exact(0)
                         : SeriesValue::from_sum(CompensatedSum{});
  EvalOptions o = opts;
  o.include_first = false;
  SeriesValue v;
  evaluate_dispatch(kind, x, x, [&](const SummatoryCheckpoint& c) { v = c.value; }, o, true);
  return v;
}

std::vector<int128> exact_prefix_table(const SeriesKind& kind, std::uint64_t x_max) {
  if (!kind.integer_valued()) throw std::invalid_argument(kind.name() + " is not integer-valued");
  std::vector<int128> out(x_max + 1, 0);
  if (x_max == 0) return out;
  const TermSource src(kind, x_max, kDefaultSegmentSize);
  ExactSum acc;
  for (std::uint64_t a = 1; a <= x_max; a += kDefaultSegmentSize) {
    const std::uint64_t b = std::min(x_max, a + kDefaultSegmentSize - 1) + 1;
    src.for_each<int128>(a, b, [&](std::uint64_t n, int128 t) {
      acc.add(t);
      out[n] = acc.value();
    });
  }
  return out;
}

MuMuTable mu_mu_table(std::uint64_t limit) {
  MuMuTable t{limit, std::vector<std::int32_t>(limit + 1, 0)};
  if (limit == 0) return t;
  const SegmentSieve sieve(limit + 1);
  for (std::uint64_t a = 1; a <= limit; a += kDefaultSegmentSize) {
    const std::uint64_t b = std::min(limit, a + kDefaultSegmentSize - 1) + 1;
    const auto v = sieve.mu_mu(a, b);
    std::copy(v.begin(), v.end(), t.values.begin() + static_cast<std::ptrdiff_t>(a));
  }
  return t;
}

ExtremaRecord scan_extrema(const SeriesKind& kind, std::uint64_t lo, std::uint64_t hi, double exponent,
                           std::optional<EvalOptions> opts) {
  return extrema_dispatch(kind, lo, hi, exponent, opts, true);
}

ExtremaRecord scan_extrema_serial(const SeriesKind& kind, std::uint64_t lo, std::uint64_t hi,
                                  double exponent, std::optional<EvalOptions> opts) {
  return extrema_dispatch(kind, lo, hi, exponent, opts, false);
}

namespace {

struct FirstHit {
  std::optional<std::uint64_t> x;
  SeriesValue value;
  std::uint64_t checked = 0;
};

template <class Pred>
FirstHit first_hit(const SeriesKind& kind, std::uint64_t lo, std::uint64_t hi,
                   const std::optional<EvalOptions>& opts_in, Pred pred) {
  const EvalOptions o = scan_options(opts_in);
  check_scan_range(lo, hi, o);
  const TermSource src(kind, hi, o.segment_size);
  FirstHit out;
  auto run = [&](auto tag) {
    using Acc = decltype(tag);
    auto visit = [&](FirstHit& l, std::uint64_t x, const Acc& acc) {
      if (l.x) return;
      ++l.checked;
      if (pred(x, to_value(acc))) {
        l.x = x;
        l.value = to_value(acc);
      }
    };
    auto fold = [&](FirstHit&& l) {
      out.checked += l.checked;
      if (l.x) {
        out.x = l.x;
        out.value = l.value;
        return false;
      }
      return true;
    };
    scan_impl<Acc, FirstHit>(src, lo, hi, o.segment_size, true, visit, fold);
  };
  if (use_exact(kind, hi, o.arithmetic))
    run(ExactSum{});
  else
    run(CompensatedSum{});
  return out;
}

}  // namespace

BoundCheck verify_linear_bound(const SeriesKind& kind, double c, double exponent, std::uint64_t lo,
                               std::uint64_t hi, std::optional<EvalOptions> opts) {
  if (!(c > 0)) throw std::invalid_argument("bound constant must be positive");
  const auto hit = first_hit(kind, lo, hi, opts, [&](std::uint64_t x, const SeriesValue& v) {
    const double bound = c * std::pow(static_cast<double>(x), exponent);
    // a float sum only counts as a violation when it exceeds the bound by more
    // than its rounding error
    return std::fabs(v.real) - v.error_bound >= bound;
  });
  BoundCheck r;
  r.pass = !hit.x.has_value();
  r.first_violation = hit.x;
  r.value_at_violation = hit.value;
  r.checked = hit.checked;
  return r;
}

std::optional<std::uint64_t> first_positive(const SeriesKind& kind, std::uint64_t lo, std::uint64_t hi,
                                            std::optional<EvalOptions> opts) {
  return first_hit(kind, lo, hi, opts, [](std::uint64_t, const SeriesValue& v) {
           return v.exact ? v.integer > 0 : v.real - v.error_bound > 0;
         })
      .x;
}

int128 dyadic_decompose(std::uint64_t x, unsigned k) {
  if (x == 0) return 0;
  const auto U = exact_prefix_table(SeriesKind::U(), x);
  const auto W = exact_prefix_table(SeriesKind::W(2), x);
  int128 total = 0;
  int128 coef = 1;
  for (unsigned j = 0; j < k; ++j) {
    const std::uint64_t y = j < 64 ? x >> j : 0;
    if (y == 0) return total;
    total = checked_add(total, checked_mul(coef, U[y]));
    coef = checked_mul(coef, -2);
  }
  const std::uint64_t y = k < 64 ? x >> k : 0;
  return y == 0 ? total : checked_add(total, checked_mul(coef, W[y]));
}

}  // namespace omega
