#include <doctest.h>

#include <cmath>
#include <random>

#include "omega/summatory.hpp"
#include "oracle.hpp"

using namespace omega;

namespace {

double brute(const SeriesKind& k, std::uint64_t x) {
  long double s = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    const int om = oracle::omega(n), mu = oracle::mu(n);
    switch (k.tag) {
      case SeriesTag::W: s += std::pow(-k.a, om); break;
      case SeriesTag::T: s += std::pow(k.a, om); break;
      case SeriesTag::U: s += n % 2 ? std::pow(-2.0, om) : 0; break;
      case SeriesTag::u: s += n % 2 ? std::pow(-2.0, om) / n : 0; break;
      case SeriesTag::M: s += mu; break;
      case SeriesTag::m: s += static_cast<long double>(mu) / n; break;
      case SeriesTag::L: s += om % 2 ? -1 : 1; break;
      case SeriesTag::G: s += std::pow(2.0, om); break;
      case SeriesTag::m2: {
        long double c = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
          if (n % d == 0) c += oracle::mu(d) * oracle::mu(n / d);
        s += c / n;
        break;
      }
    }
  }
  return static_cast<double>(s);
}

double at(const SeriesKind& k, std::uint64_t x) { return value_at(k, x).real; }

}  // namespace

TEST_CASE("worked values") {
  CHECK(value_at(SeriesKind::W(2), 10).integer == 1);
  CHECK(value_at(SeriesKind::W(2), 1).integer == 1);
  CHECK(value_at(SeriesKind::M(), 10).integer == -1);
  CHECK(value_at(SeriesKind::U(), 7).integer == -5);
  CHECK(at(SeriesKind::u(), 3) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(at(SeriesKind::m(), 4) == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(at(SeriesKind::m2(), 4) == doctest::Approx(-5.0 / 12).epsilon(1e-15));
  CHECK(value_at(SeriesKind::W(2), 10).exact);
  CHECK_FALSE(value_at(SeriesKind::m(), 10).exact);
}

TEST_CASE("every kind agrees with brute force") {
  const std::vector<SeriesKind> kinds{SeriesKind::W(2), SeriesKind::W(3),  SeriesKind::W(1.5), SeriesKind::T(3),
                                      SeriesKind::U(),  SeriesKind::u(),   SeriesKind::M(),    SeriesKind::m(),
                                      SeriesKind::m2(), SeriesKind::L(),   SeriesKind::G(),    SeriesKind::W(10)};
  for (const auto& k : kinds) {
    for (std::uint64_t x : {1ULL, 2ULL, 17ULL, 360ULL, 2048ULL}) {
      CAPTURE(k.name());
      CAPTURE(x);
      const double ref = brute(k, x);
      CHECK(at(k, x) == doctest::Approx(ref).epsilon(1e-12).scale(1));
    }
  }
}

TEST_CASE("kind aliases") {
  for (std::uint64_t x : {1ULL, 99ULL, 5000ULL}) {
    CHECK(value_at(SeriesKind::W(1), x).integer == value_at(SeriesKind::L(), x).integer);
    CHECK(value_at(SeriesKind::T(2), x).integer == value_at(SeriesKind::G(), x).integer);
  }
  CHECK(parse_series_kind("W").a == 2);
  CHECK(parse_series_kind("W", 3).a == 3);
  CHECK_THROWS_AS(parse_series_kind("M", 2.0), std::invalid_argument);
  CHECK_THROWS_AS(parse_series_kind("X"), std::invalid_argument);
  CHECK_THROWS_AS(parse_series_kind("W", -1.0), std::invalid_argument);
}

TEST_CASE("checkpoint placement") {
  const auto cps = evaluate(SeriesKind::W(2), 1'000'000, 10'000);
  REQUIRE(cps.size() == 100);
  CHECK(cps.front().x == 10'000);
  CHECK(cps.back().x == 1'000'000);
  EvalOptions o;
  o.include_first = true;
  const auto with1 = evaluate(SeriesKind::W(2), 1'000'000, 10'000, o);
  REQUIRE(with1.size() == 101);
  CHECK(with1.front().x == 1);
  const auto odd = evaluate(SeriesKind::M(), 25, 10);
  REQUIRE(odd.size() == 3);
  CHECK(odd[2].x == 25);
  CHECK_THROWS_AS(evaluate(SeriesKind::M(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(SeriesKind::M(), 10, 0), std::invalid_argument);
}

TEST_CASE("parallel kernel equals the serial reference") {
  const auto oW = oracle::W_prefix(2, 300'000);
  for (std::uint64_t seg : {std::uint64_t{1000}, std::uint64_t{65536}, kDefaultSegmentSize}) {
    EvalOptions o;
    o.segment_size = seg;
    const auto p = evaluate(SeriesKind::W(2), 300'000, 777, o);
    const auto s = evaluate_serial(SeriesKind::W(2), 300'000, 777, o);
    REQUIRE(p.size() == s.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      REQUIRE(p[i].x == s[i].x);
      REQUIRE(p[i].value.integer == s[i].value.integer);
      REQUIRE(p[i].value.integer == oW[p[i].x]);
    }
    const auto pm = evaluate(SeriesKind::m(), 300'000, 50'000, o);
    const auto sm = evaluate_serial(SeriesKind::m(), 300'000, 50'000, o);
    for (std::size_t i = 0; i < pm.size(); ++i) REQUIRE(pm[i].value.real == doctest::Approx(sm[i].value.real).epsilon(1e-13));
  }
}

TEST_CASE("overflow of the exact accumulator is reported") {
  CHECK_THROWS_AS(evaluate(SeriesKind::W(1000), 10'000, 100), OverflowError);
  EvalOptions f;
  f.arithmetic = Arithmetic::Float;
  CHECK_NOTHROW(evaluate(SeriesKind::W(1000), 10'000, 100, f));
  // Auto falls back to compensated floats instead of throwing
  CHECK(scan_extrema(SeriesKind::W(1000), 1, 10'000, std::log2(1000.0)).max_abs > 0.9);
}

TEST_CASE("mu*mu table against the divisor loop") {
  const auto t = mu_mu_table(1000);
  CHECK(t.values[1] == 1);
  CHECK(t.values[2] == -2);
  CHECK(t.values[4] == 1);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    int c = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) c += oracle::mu(d) * oracle::mu(n / d);
    REQUIRE(t.values[n] == c);
  }
}

TEST_CASE("extrema against a prefix-table scan") {
  const std::uint64_t lo = 500, hi = 200'000;
  for (int a : {2, 3}) {
    const auto w = oracle::W_prefix(a, hi);
    const double e = std::log2(static_cast<double>(a));
    double best = -1;
    std::uint64_t arg = 0;
    for (std::uint64_t x = lo; x <= hi; ++x) {
      const double v = std::fabs(static_cast<double>(w[x])) / std::pow(static_cast<double>(x), e);
      if (v > best) best = v, arg = x;
    }
    const auto r = scan_extrema(SeriesKind::W(a), lo, hi, e);
    const auto s = scan_extrema_serial(SeriesKind::W(a), lo, hi, e);
    CHECK(r.max_abs == doctest::Approx(best).epsilon(1e-14));
    CHECK(r.arg_max_abs == arg);
    CHECK(s.arg_max_abs == arg);
    CHECK(s.max == r.max);
    CHECK(s.min == r.min);
  }
}

TEST_CASE("U normalized by x^0.81 peaks at 1 and bottoms at 7") {
  const auto r = scan_extrema(SeriesKind::U(), 1, 1'000'000, 0.81);
  CHECK(r.arg_max == 1);
  CHECK(r.arg_min == 7);
}

TEST_CASE("linear bounds on small ranges") {
  const auto below = verify_linear_bound(SeriesKind::W(2), 1, 1, 1, 3077);
  CHECK_FALSE(below.pass);
  REQUIRE(below.first_violation);
  CHECK(*below.first_violation < 3078);
  const auto w = oracle::W_prefix(2, 3077);
  std::uint64_t first = 0;
  for (std::uint64_t x = 1; x <= 3077 && !first; ++x)
    if (std::llabs(w[x]) >= static_cast<long long>(x)) first = x;
  CHECK(*below.first_violation == first);
  CHECK(verify_linear_bound(SeriesKind::W(2), 2, 1, 1, 3077).pass);
  CHECK(verify_linear_bound(SeriesKind::W(2), 1, 1, 3078, 2'000'000).pass);
  const auto half = verify_linear_bound(SeriesKind::W(2), 0.5, 1, 2, 1024);
  CHECK_FALSE(half.pass);
  CHECK(verify_linear_bound(SeriesKind::W(3), 1, std::log2(3.0), 10'000, 1'000'000).pass);
}

TEST_CASE("dyadic identity for 1000 random (x, k)") {
  const auto w = oracle::W_prefix(2, 100'000);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> dx(0, 100'000);
  std::uniform_int_distribution<unsigned> dk(1, 10);
  CHECK(dyadic_decompose(10, 1) == 1);
  CHECK(dyadic_decompose(0, 5) == 0);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t x = dx(rng);
    const unsigned k = dk(rng);
    REQUIRE(dyadic_decompose(x, k) == w[x]);
  }
}

TEST_CASE("jumps at powers of two") {
  for (int a : {2, 3, 10}) {
    for (int m = 1; m <= 25; ++m) {
      const std::uint64_t x = std::uint64_t{1} << m;
      const int128 jump = value_at(SeriesKind::W(a), x).integer - value_at(SeriesKind::W(a), x - 1).integer;
      int128 expect = 1;
      for (int i = 0; i < m; ++i) expect *= -a;
      REQUIRE(jump == expect);
    }
  }
}

TEST_CASE("|m2(x)| <= 2.06 on [1, 10^6]") {
  double worst = 0;
  evaluate_stream(SeriesKind::m2(), 1'000'000, 1, [&](const SummatoryCheckpoint& cp) {
    worst = std::max(worst, std::fabs(cp.value.real) + cp.value.error_bound);
  });
  CHECK(worst <= 2.06);
  CHECK(worst >= 1);  // m2(1) = 1
}

TEST_CASE("compensated error bound stays below 1e-9") {
  const auto v = value_at(SeriesKind::m(), 10'000'000);
  CHECK(v.error_bound < 1e-9);
  const auto u = value_at(SeriesKind::u(), 10'000'000);
  CHECK(u.error_bound < 1e-9);
}

TEST_CASE("prefix tables") {
  const auto M = exact_prefix_table(SeriesKind::M(), 32);
  REQUIRE(M.size() == 33);
  CHECK(M[0] == 0);
  CHECK(M[10] == -1);
  CHECK_THROWS_AS(exact_prefix_table(SeriesKind::m(), 10), std::invalid_argument);
}

TEST_CASE("sign of the Liouville sum, long") {
  if (!std::getenv("OMEGA_LONG_TESTS")) return;
  const auto x = first_positive(SeriesKind::L(), 2, 906'200'000);
  REQUIRE(x);
  CHECK(*x == 906150257);
}
