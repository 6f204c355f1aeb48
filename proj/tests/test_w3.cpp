#include <doctest.h>

#include <cmath>
#include <random>

#include "omega/summatory.hpp"
#include "omega/w3.hpp"
#include "oracle.hpp"

using namespace omega;

TEST_CASE("kernel single term") {
  for (double th : {0.0, 0.3, 1.7, -2.25}) {
    const auto k = kernel_f(th, 1);
    const double fl = std::floor(th);
    CHECK(k.value == doctest::Approx((static_cast<long long>(fl) % 2 ? -1.0 : 1.0) * std::pow(3.0, -(th - fl))));
  }
  CHECK_THROWS_AS(kernel_f(0, 0), std::invalid_argument);
}

TEST_CASE("kernel antiperiodicity and size") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-20, 20);
  const double bound = kernel_bound();
  const double r = std::pow(3.0, -(v3() - 1));
  CHECK(bound == doctest::Approx(1 / (1 - r)));
  CHECK(bound == doctest::Approx(2.109).epsilon(1e-3));
  for (int i = 0; i < 100; ++i) {
    const double th = d(rng);
    const auto a = kernel_f(th), b = kernel_f(th + 1);
    CHECK(std::fabs(a.value + b.value) <= 2 * a.truncation_error + 1e-12);
    CHECK(std::fabs(a.value) <= bound + a.truncation_error);
  }
  // omitted terms against a much longer sum
  const auto k = kernel_f(0.37, 10), ref = kernel_f(0.37, 400);
  CHECK(std::fabs(k.value - ref.value) <= k.truncation_error);
}

TEST_CASE("3-smooth double sum") {
  CHECK(inner_sum_23(1) == 1);
  CHECK(inner_sum_23(6) == 13);
  for (double z : {10.0, 100.0, 1000.0, 123456.7}) {
    int128 s = 0;
    const auto zi = static_cast<std::uint64_t>(z);
    for (std::uint64_t n = 1; n <= zi; ++n) {
      std::uint64_t m = n;
      int e = 0;
      while (m % 2 == 0) m /= 2, ++e;
      while (m % 3 == 0) m /= 3, ++e;
      if (m == 1) s += (e % 2 ? -1 : 1) * static_cast<int128>(std::pow(3.0, e));
    }
    CHECK(inner_sum_23(z) == s);
  }
  CHECK_THROWS_AS(inner_sum_23(0.5), std::domain_error);
}

TEST_CASE("3-smooth sum stays within z of its main term for z <= 10^5") {
  const double v = v3();
  auto gap = [&](double z) {
    return std::fabs(static_cast<double>(inner_sum_23(z)) - 0.75 * std::pow(z, v) * kernel_f(std::log2(z)).value);
  };
  double worst = 0;
  for (std::uint64_t z = 1; z <= 100'000; ++z) {
    // constant sum on [z, z+1); probe both ends, the left limit far enough
    // below z+1 that log2 does not round onto a jump of f
    const double left = (z + 1) * (1 - 1e-9);
    worst = std::max(worst, gap(static_cast<double>(z)) - z);
    worst = std::max(worst, gap(left) - left);
  }
  CHECK(worst <= 0);
}

TEST_CASE("powers of -3 up to z") {
  for (std::uint64_t z = 1; z <= 100'000; ++z) {
    long long s = 0, p = 1;
    for (std::uint64_t t = 1; t <= z; t *= 3, p *= -3) s += p;
    REQUIRE(static_cast<std::uint64_t>(std::llabs(s)) <= z);
  }
}

TEST_CASE("sum over m coprime to 6") {
  const auto c5 = coprime6_sum(5);
  CHECK(c5.weighted == doctest::Approx(1.6));
  CHECK(c5.bound == doctest::Approx(1.32 * std::pow(std::log(5.0), 3)));
  CHECK(c5.ok);
  double s = 0;
  for (std::uint64_t m = 1; m <= 1000; ++m)
    if (m % 2 && m % 3) s += std::pow(3.0, oracle::omega(m)) / m;
  CHECK(coprime6_sum(1000).weighted == doctest::Approx(s).epsilon(1e-12));
  CHECK(coprime6_sum(1000).ok);
  CHECK(coprime6_sum(1'000'000).ok);
  CHECK_THROWS_AS(coprime6_sum(4), std::domain_error);
}

TEST_CASE("tail bound") {
  const double t = tail_bound(std::pow(2.0, 27), 0.1);
  CHECK(t == doctest::Approx(4.3e-3).epsilon(0.02));
  CHECK(tail_bound(1e12, 0.1) < t);
  CHECK(tail_bound(std::pow(2.0, 27), 0.5) > tail_bound(std::pow(2.0, 27), 0.4));
  CHECK_THROWS_AS(tail_bound(1e6, 0), std::domain_error);
  CHECK_THROWS_AS(tail_bound(1e6, v3() - 1), std::domain_error);
}

TEST_CASE("s3 estimate on a small range matches exact W3 values") {
  const auto e = estimate_s3(1 << 15, 1 << 16, 0.1);
  CHECK(e.s3_center >= 0.5);
  CHECK(e.s3_center <= 1.2);
  CHECK(e.s3_halfwidth == doctest::Approx(e.budget.compute + e.budget.remainder_132 + e.budget.tail));
  const auto w = oracle::W_prefix(3, 1 << 16);
  double best = 0;
  std::uint64_t arg = 0;
  for (std::uint64_t x = 1 << 15; x <= (1 << 16); ++x) {
    const double v = std::fabs(static_cast<double>(w[x])) / std::pow(static_cast<double>(x), v3());
    if (v > best) best = v, arg = x;
  }
  CHECK(e.main_max == doctest::Approx(best).epsilon(1e-14));
  CHECK(e.arg_max == arg);
  CHECK(value_at(SeriesKind::W(3), arg).integer == w[arg]);
  const double La = std::log(32768.0), Lb = std::log(65536.0);
  double rem = 0;
  for (int i = 0; i <= 1000; ++i) {
    const double L = La + (Lb - La) * i / 1000;
    rem = std::max(rem, 1.32 * L * L * L * std::exp((1 - v3()) * L));
  }
  CHECK(e.budget.remainder_132 >= rem);
  CHECK(e.budget.remainder_132 == doctest::Approx(rem).epsilon(1e-6));
}
