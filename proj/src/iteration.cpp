#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "omega/analytic.hpp"
#include "omega/pipeline.hpp"

namespace omega {

double published_B(int beta) {
  switch (beta) {
    case 1: return 8.96237e-4;
    case 2: return 1.88209e-2;
    case 3: return 3.95239e-1;
    case 4: return 7.51090e1;
    default: throw std::domain_error("no published B for beta = " + std::to_string(beta));
  }
}

IterationResult iterate_bounds(double A, Rational alpha, double B, int beta, double u0_log, double v0_log,
                                    double c0, double x0, std::uint64_t budget) {
  using LD = long double;
  const LD al = alpha.value();
  if (!(A > 0) || !(B > 0)) throw std::domain_error("A and B must be positive");
  if (!(al >= 0) || !(al < beta)) throw std::domain_error("need 0 <= alpha < beta");

  IterationResult r;
  r.A = A;
  r.B = B;
  r.alpha = alpha;
  r.beta = beta;
  r.u0_log = u0_log;
  r.v0_log = v0_log;

  const LD pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
  const LD D = std::pow(3 * B * beta / (pi2 * A), 1.0L / (beta + 1));
  r.D = static_cast<double>(D);
  if (!(D > 1)) throw InfeasibleError("D <= 1: no admissible lambda");
  const LD lower = std::pow(0.8L * B / (A * std::pow(D, static_cast<LD>(beta)) * std::log(D)),
                            static_cast<LD>(beta + 1) / (beta - al));
  r.lambda_lower = static_cast<double>(lower);

  const LD rr = (al + 1) / (beta + 1);
  const LD floor1 = beta * (al + 1) / (beta + 1);
  const LD floor2 = std::pow(D * (al + 1) / (beta + 1), 1 / (1 - rr));
  auto lambda1_of = [&](LD l) { return std::max({l, floor1, floor2}); };

  struct Audit {
    std::array<bool, 5> ok{};
    std::array<double, 5> margin{};
    LD log_y = 0;
  };
  auto audit = [&](LD l1) {
    Audit a;
    a.log_y = D * std::pow(l1, rr);
    const LD gap = l1 - a.log_y;
    a.margin[0] = static_cast<double>(gap - u0_log);
    a.margin[1] = static_cast<double>(a.log_y - v0_log);
    a.margin[2] = static_cast<double>(D - 1);
    a.margin[3] = static_cast<double>(std::log(0.017L * B) + l1 - beta * std::log(a.log_y) - std::log(0.5L));
    a.margin[4] = gap > 0 ? static_cast<double>(al * std::log(gap) - std::log(2.5L * A))
                          : -std::numeric_limits<double>::infinity();
    a.ok = {a.margin[0] >= 0, a.margin[1] >= 0, a.margin[2] > 0, a.margin[3] > 0, a.margin[4] >= 0};
    return a;
  };

  LD lam = std::max<LD>(1, std::ceil(lower));
  std::uint64_t steps = 0;
  Audit au = audit(lambda1_of(lam));
  while (!std::all_of(au.ok.begin(), au.ok.end(), [](bool b) { return b; })) {
    if (++steps > budget) throw InfeasibleError("no feasible lambda within the search budget");
    lam += 1;
    au = audit(lambda1_of(lam));
  }
  const LD l1 = lambda1_of(lam);
  r.lambda = static_cast<double>(lam);
  r.lambda1 = static_cast<double>(l1);
  r.log_y = static_cast<double>(au.log_y);
  r.conditions = au.ok;
  r.margins = au.margin;
  r.steps = steps;

  auto f = [&](LD q) { return 2 * A * D / std::pow(1 - q, al) + 6 * B / (pi2 * std::pow(D, static_cast<LD>(beta))) * (1 - q); };
  const LD q0 = D * std::pow(l1, (al - beta) / (beta + 1));
  r.q0 = static_cast<double>(q0);
  r.f0 = static_cast<double>(f(0));
  r.fq0 = q0 < 1 ? static_cast<double>(f(q0)) : std::numeric_limits<double>::infinity();
  r.c_N = std::max(r.f0, r.fq0);

  r.a = Rational(alpha.num() * beta - alpha.den(), alpha.den() * (beta + 1));
  r.k = r.a + Rational(1);
  const LD k = r.k.value();
  const LD cN = r.c_N;
  const LD lx0 = std::log(static_cast<LD>(x0));
  const LD cM = cN + (c0 + cN / std::pow(lx0, k)) * x0 * std::pow(l1, k) / std::exp(l1) +
                cN * std::pow(l1, k) / (std::pow(lx0, k + 1) * std::exp(l1 / 10)) +
                cN / (std::pow(0.9L, k + 1) * l1);
  r.c_M = round_up(static_cast<double>(cM));
  r.log_x_M = static_cast<double>(std::max(l1, lx0 * 10 / 9));
  return r;
}

Table1 run_table1() {
  struct Target {
    Rational k;
    double c_M, log_x_M;
  };
  const std::vector<std::pair<std::vector<int>, std::vector<Target>>> chains{
      {{4, 3}, {{Rational(4, 5), 7.80973e-3, 43}, {Rational(27, 20), 6.09073e-2, 93}}},
      {{2, 2, 3, 3, 4},
       {{Rational(2, 3), 2.55758e-3, 161},
        {Rational(10, 9), 1.30895e-2, 192},
        {Rational(19, 12), 9.12303e-2, 233},
        {Rational(31, 16), 4.30429e-1, 288},
        {Rational(47, 20), 4.88346, 385}}}};
  const double c0 = 1.0 / 4345, x0 = 2160535;
  Table1 t;
  t.all_met = true;
  for (const auto& [betas, targets] : chains) {
    double A = c0;
    Rational alpha(0);
    double u0 = std::log(x0);
    for (std::size_t i = 0; i < betas.size(); ++i) {
      Table1Row row;
      row.result = iterate_bounds(A, alpha, published_B(betas[i]), betas[i], u0, 20, c0, x0);
      row.printed_k = targets[i].k;
      row.printed_c_M = targets[i].c_M;
      row.printed_log_x_M = targets[i].log_x_M;
      row.k_met = row.result.k == row.printed_k;
      row.c_met = std::fabs(row.result.c_M / row.printed_c_M - 1) <= 0.01;
      row.x_met = std::fabs(row.result.log_x_M - row.printed_log_x_M) <= 2;
      t.all_met = t.all_met && row.met();
      A = row.result.c_M;
      alpha = row.result.k;
      u0 = row.result.log_x_M;
      t.rows.push_back(row);
    }
  }
  return t;
}

}  // namespace omega
