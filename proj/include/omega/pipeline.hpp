#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omega/rational.hpp"

namespace omega {

// |f(x)| <= c x^p / (log x)^k for x >= e^{log_x0}.
struct BoundSpec {
  std::string name;
  double c = 0;
  double p = 0;
  double k = 0;
  double log_x0 = 0;
};

// |psi(x) - x| <= omega1 x (log x)^omega2 exp(-omega3 sqrt(log x)) for x >= e^{log_x_omega}.
struct PsiErrorModel {
  double omega1 = 0, omega2 = 0, omega3 = 0, log_x_omega = 0;
  static PsiErrorModel standard();
};

struct UPieceConfig {
  double eta = 0;
  bool eta_auto = false;  // eta = 1 - log x0(m2)/log_x0, the largest eta the m2 range allows
  double theta = 0;
  double log_x0 = 0;
};

struct M2Input {
  double C1 = 0, alpha = 0, C2 = 0, log_x0 = 0;
};

struct PipelineConfig {
  M2Input m2_small{18.364, 2, 0.38, 13.815510557964274};  // log 10^6
  M2Input m2_large{37.712, 2.35, 0.306, 780};
  double m2_sup = 2.06;  // sup |m2(x)|, x >= 1
  std::array<UPieceConfig, 3> u{{{0.33, false, 0.12, 0.6931471805599453},
                                 {0.16, false, 0.3, 195},
                                 {0.20603015075376885, false, 0.3, 995}}};  // eta3 = 1 - 790/995
  std::uint64_t fstar_m = 10'000;
  double epsilon = 0.35;
  // x >= 2.5e14, e^200, e^1000
  std::array<double, 3> cut_logs{33.1524820337908, 200, 1000};
  double base_constant = 0.979;

  // key = value lines, '#' starts a comment. Throws ConfigError.
  static PipelineConfig parse(const std::string& text);
  static PipelineConfig load(const std::string& path);
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-term m2 bound c/(log x)^{alpha-1} at the validity threshold.
BoundSpec derive_m2(double C1, double alpha, double C2, double log_x0);

// u bound from the m2 bound K and the G* values G*(1), G*(1-theta); sup_abs_m2 is
// the uniform bound on |m2|.
BoundSpec derive_u(double eta, double theta, const BoundSpec& K, double gstar1, double gstar_theta,
                   double log_x0, double sup_abs_m2 = 2.06);

struct UPiece {
  BoundSpec spec;
  double log_absorbed = 0;  // log of the constant collected below the last u range
  double integral_coefficient = 0;
};
// Partial summation U(x) = x u(x) - int_1^x u(t) dt over contiguous u ranges.
// u_specs[i] must start at or below cut_logs[i].
std::vector<UPiece> derive_U(const std::vector<BoundSpec>& u_specs, const std::vector<double>& cut_logs);

struct WBound {
  int ell1_max = 0, ell2_max = 0;
  double h1 = 0, h2 = 0;  // harmonic-sum constants
  double T = 0;           // lower bound for log(x/2^j)/log 2 in the last range
  std::array<double, 3> pieces{};
};
WBound derive_W(double C1, double C2, double C3, double epsilon, double base_constant = 0.979,
                double verified_log = 33.1524820337908, double cut2_log = 200, double cut3_log = 1000);
// Final constant under a hypothetical |U(x)| <= x^alpha above the verified range.
double what_if_W(double alpha, double base_constant = 0.979, double verified_log = 33.1524820337908);

BoundSpec degrade_psi(const PsiErrorModel& model, double beta, std::optional<double> forced_log_xh = std::nullopt);
// eps b'^beta + b^beta / e^b
double interval_convert(double b, double b_prime, double eps, double beta);

// Published rho(x) constants B_beta for beta = 1..4, x >= e^20.
double published_B(int beta);

struct IterationResult {
  double A = 0, B = 0;
  Rational alpha, a, k;
  int beta = 0;
  double u0_log = 0, v0_log = 0;
  double D = 0;
  double lambda_lower = 0;
  double lambda = 0;
  double lambda1 = 0;
  double log_y = 0;
  double q0 = 0, f0 = 0, fq0 = 0, c_N = 0;
  double c_M = 0;
  double log_x_M = 0;
  std::array<bool, 5> conditions{};
  std::array<double, 5> margins{};  // left side minus right side, in log form where natural
  std::uint64_t steps = 0;
};
inline constexpr std::array<const char*, 5> kSideConditionNames{
    "x1/y(x1) >= u0", "y(x1) >= v0", "D > 1", "0.017 B x1/(log y)^beta > 1/2", "(log(x1/y))^alpha >= 2.5 A"};

// Integer lambda search from the lower bound upward. Throws InfeasibleError.
IterationResult iterate_bounds(double A, Rational alpha, double B, int beta, double u0_log, double v0_log,
                                    double c0 = 1.0 / 4345, double x0 = 2160535, std::uint64_t budget = 1'000'000);

struct Table1Row {
  IterationResult result;
  Rational printed_k;
  double printed_c_M = 0;
  double printed_log_x_M = 0;
  bool k_met = false, c_met = false, x_met = false;
  bool met() const { return k_met && c_met && x_met; }
};
struct Table1 {
  std::vector<Table1Row> rows;
  bool all_met = false;
};
Table1 run_table1();

struct NamedValue {
  std::string name;
  double value = 0;
};

struct MBounds {
  double c_2 = 0;    // |M(x)| <= c_2 x/(log x)^2, x > 1
  double c_235 = 0;  // |M(x)| <= c_235 x/(log x)^{2.35}, x >= e^{log_x_M}
  double log_x_M = 0;
  double max_abs_M_small = 0;
  std::vector<NamedValue> pieces;
};
MBounds assemble_M_bounds(const Table1& table);

struct SmallMBounds {
  double c_2 = 0;    // |m(x)| <= c_2/(log x)^2, x > 1
  double c_235 = 0;  // |m(x)| <= c_235/(log x)^{2.35}, x >= e^{log_x0}
  double log_x0 = 390;
  std::vector<NamedValue> pieces;
};
SmallMBounds assemble_m_bounds(const MBounds& M);

struct ReportNode {
  std::string name;
  std::string formula;
  std::vector<NamedValue> inputs;
  BoundSpec spec;
  std::optional<double> target;
  std::optional<bool> met;
};

// derived within [0.90, 1.005] x target
bool within_target(double derived, double target);

struct PipelineReport {
  std::vector<ReportNode> nodes;
  bool all_met = true;
  const ReportNode* find(const std::string& name) const;
};

PipelineReport run_pipeline(const PipelineConfig& cfg);

}  // namespace omega
