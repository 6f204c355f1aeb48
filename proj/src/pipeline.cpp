#include "omega/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "omega/analytic.hpp"
#include "omega/integrals.hpp"
#include "omega/summatory.hpp"

namespace omega {

PsiErrorModel PsiErrorModel::standard() { return {9.22022, 1.5, 0.8476836, std::log(2.0)}; }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad number for '" + key + "': " + v);
  }
  if (used != v.size() || !std::isfinite(d)) throw ConfigError("bad number for '" + key + "': " + v);
  return d;
}

}  // namespace

PipelineConfig PipelineConfig::parse(const std::string& text) {
  PipelineConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    auto num = [&] { return parse_number(key, val); };

    if (key == "epsilon") c.epsilon = num();
    else if (key == "base_constant") c.base_constant = num();
    else if (key == "m2_sup") c.m2_sup = num();
    else if (key == "fstar_m") {
      const double m = num();
      if (m < 3 || m != std::floor(m)) throw ConfigError("fstar_m must be an integer >= 3");
      c.fstar_m = static_cast<std::uint64_t>(m);
    } else if (key == "cut_logs") {
      std::istringstream parts(val);
      std::string item;
      std::vector<double> v;
      while (std::getline(parts, item, ',')) v.push_back(parse_number(key, trim(item)));
      if (v.size() != 3) throw ConfigError("cut_logs needs three comma-separated values");
      std::copy(v.begin(), v.end(), c.cut_logs.begin());
    } else if (key.rfind("m2_small.", 0) == 0 || key.rfind("m2_large.", 0) == 0) {
      M2Input& m = key[3] == 's' ? c.m2_small : c.m2_large;
      const std::string f = key.substr(key.find('.') + 1);
      if (f == "C1") m.C1 = num();
      else if (f == "alpha") m.alpha = num();
      else if (f == "C2") m.C2 = num();
      else if (f == "log_x0") m.log_x0 = num();
      else throw ConfigError("unknown key '" + key + "'");
    } else if (key.size() > 3 && key[0] == 'u' && key[1] >= '1' && key[1] <= '3' && key[2] == '.') {
      UPieceConfig& u = c.u[key[1] - '1'];
      const std::string f = key.substr(3);
      if (f == "eta") {
        u.eta_auto = val == "auto";
        if (!u.eta_auto) u.eta = num();
      } else if (f == "theta") u.theta = num();
      else if (f == "log_x0") u.log_x0 = num();
      else throw ConfigError("unknown key '" + key + "'");
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  if (!(c.cut_logs[0] < c.cut_logs[1] && c.cut_logs[1] < c.cut_logs[2]))
    throw ConfigError("cut_logs must be ascending");
  if (!(c.epsilon > 0)) throw ConfigError("epsilon must be positive");
  return c;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

BoundSpec derive_m2(double C1, double alpha, double C2, double log_x0) {
  if (!(alpha > 1)) throw std::domain_error("derive_m2 requires alpha > 1");
  if (!(C1 > 0) || !(C2 >= 0) || !(log_x0 > 0)) throw std::domain_error("derive_m2: invalid inputs");
  BoundSpec b;
  b.name = "m2";
  b.c = round_up(std::pow(2.0, alpha + 1) * C1 * C2 + std::pow(2.0, 2 * alpha) * C1 * C1 / std::pow(log_x0, alpha + 1));
  b.p = 0;
  b.k = alpha - 1;
  b.log_x0 = log_x0;
  return b;
}

BoundSpec derive_u(double eta, double theta, const BoundSpec& K, double gstar1, double gstar_theta, double log_x0,
                   double sup_abs_m2) {
  if (!(eta > 0 && eta < 1)) throw std::domain_error("eta must lie in (0, 1)");
  if (!(theta > 0 && theta < 1 - std::log(2.0) / std::log(3.0))) throw std::domain_error("theta out of range");
  if ((1 - eta) * log_x0 < K.log_x0 * (1 - 1e-12))
    throw std::domain_error("x^{1-eta} falls below the range of the m2 bound");
  const double k = K.k;
  const double first = K.c * gstar1 / std::pow(1 - eta, k);
  // L^k e^{-eta theta L} peaks at L = k/(eta theta)
  const double L = std::max(k / (eta * theta), log_x0);
  const double second = sup_abs_m2 * gstar_theta * std::pow(L, k) * std::exp(-eta * theta * L);
  BoundSpec b;
  b.name = "u";
  b.c = round_up(first + second);
  b.p = 0;
  b.k = k;
  b.log_x0 = log_x0;
  return b;
}

namespace {

// lower bound for the integral of 1/log t over [2, e^L]: e^L/L - 2/log 2
long double li_lower(long double L) { return std::max(0.0L, std::exp(L) / L - 2 / std::log(2.0L)); }

// upper bound for c * integral of (log t)^{-k} over [e^a, e^b], a < b
long double segment_integral(double c, double k, double a, double b) {
  const double la = std::max(a, std::log(2.0));
  long double best = std::exp(static_cast<long double>(log_integral_log_alpha_split(k, la, b)));
  if (k == 1 && b >= std::log(1865.0)) best = std::min(best, integral_log_bound(b) - li_lower(la));
  return c * best;
}

}  // namespace

std::vector<UPiece> derive_U(const std::vector<BoundSpec>& u, const std::vector<double>& cuts) {
  if (u.empty() || u.size() != cuts.size()) throw std::invalid_argument("derive_U: need one u bound per range");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].log_x0 > cuts[i] + 1e-12) throw std::invalid_argument("derive_U: coverage gap below cut " + std::to_string(i));
    if (i > 0 && !(cuts[i - 1] < cuts[i])) throw std::invalid_argument("derive_U: cut points must ascend");
    if (i > 0 && !(u[i - 1].log_x0 < u[i].log_x0)) throw std::invalid_argument("derive_U: u ranges must ascend");
  }
  if (u[0].log_x0 > std::log(2.0) + 1e-12) throw std::invalid_argument("derive_U: first u bound must hold from x = 2");

  std::vector<UPiece> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const BoundSpec& ui = u[i];
    const double Lc = cuts[i];
    // integral of |u| over [1, 2] is 1 since u(t) = 1 there
    long double absorbed = 1;
    for (std::size_t j = 0; j < i; ++j) absorbed += segment_integral(u[j].c, u[j].k, u[j].log_x0, u[j + 1].log_x0);
    double coef;
    if (ui.k == 1) {
      if (!(Lc >= std::log(1865.0))) throw std::invalid_argument("derive_U: cut below 1865");
      // int_{e^a}^x <= (x/L + 1.5 x/L^2) - li_lower(a)
      coef = ui.c * (1 + 1.5 / Lc);
      absorbed -= ui.c * li_lower(std::max(ui.log_x0, std::log(2.0)));
    } else {
      coef = ui.c * log_power_integral_constant(ui.k, ui.log_x0);
    }
    absorbed = std::max(absorbed, 0.0L);
    // absorbed (log x)^k / x decreases for log x > k
    if (Lc < ui.k) throw std::invalid_argument("derive_U: cut below the turning point");
    const long double tail = absorbed * std::pow(static_cast<long double>(Lc), static_cast<long double>(ui.k)) /
                             std::exp(static_cast<long double>(Lc));
    UPiece p;
    p.spec.name = "U";
    p.spec.p = 1;
    p.spec.k = ui.k;
    p.spec.log_x0 = Lc;
    p.spec.c = round_up(static_cast<double>(ui.c + coef + tail));
    p.log_absorbed = static_cast<double>(std::log(absorbed));
    p.integral_coefficient = coef;
    out.push_back(p);
  }
  return out;
}

WBound derive_W(double C1, double C2, double C3, double epsilon, double base_constant, double verified_log,
                double cut2_log, double cut3_log) {
  if (!(epsilon > 0)) throw std::domain_error("epsilon must be positive");
  if (!(C1 > 0 && C2 > 0 && C3 > 0)) throw std::domain_error("C_i must be positive");
  const long double ln2 = std::log(2.0L);
  const long double log2X = verified_log / ln2;
  WBound w;
  // the number of dyadic steps from x down into (X/2, X] that stay above e^cut
  w.ell1_max = static_cast<int>(std::floor(cut2_log / ln2 - log2X + 1));
  w.ell2_max = static_cast<int>(std::floor(cut3_log / ln2 - log2X + 1));
  const long double denom = ln2 * (verified_log - ln2);  // log 2 * log(X/2)
  long double H1 = 0, H2 = 0;
  for (int r = 1; r <= w.ell1_max; ++r) H1 += 1.0L / r;
  for (int r = w.ell1_max; r <= w.ell2_max; ++r) H2 += 1.0L / r;
  w.h1 = round_up(static_cast<double>(H1 / denom));
  w.h2 = round_up(static_cast<double>(H2 / denom));
  w.T = static_cast<double>(log2X + w.ell2_max - 1);
  const double third = C3 / static_cast<double>(ln2) / (epsilon * std::pow(w.T * static_cast<double>(ln2), epsilon));
  w.pieces[0] = round_up(base_constant + w.h1 * C1);
  w.pieces[1] = round_up(w.pieces[0] + w.h2 * C2);
  w.pieces[2] = round_up(w.pieces[1] + third);
  return w;
}

double what_if_W(double alpha, double base_constant, double verified_log) {
  if (!(alpha > 0 && alpha < 1)) throw std::domain_error("alpha must lie in (0, 1)");
  const double r = std::exp2(1 - alpha);
  return round_up(base_constant + r * std::exp((alpha - 1) * verified_log) / (r - 1));
}

BoundSpec degrade_psi(const PsiErrorModel& m, double beta, std::optional<double> forced_log_xh) {
  if (!(beta >= 0)) throw std::domain_error("beta must be non-negative");
  const double lambda_h = 4 * (m.omega2 + beta) * (m.omega2 + beta) / (m.omega3 * m.omega3);
  double L = std::max(lambda_h, m.log_x_omega);
  if (forced_log_xh) L = std::max(L, *forced_log_xh);
  BoundSpec b;
  b.name = "rho";
  b.c = round_up(m.omega1 * std::pow(L, m.omega2 + beta) * std::exp(-m.omega3 * std::sqrt(L)) +
                 std::pow(L, beta) * std::exp(-L));
  b.p = 1;
  b.k = beta;
  b.log_x0 = L;
  return b;
}

double interval_convert(double b, double b_prime, double eps, double beta) {
  if (!(b_prime > b) || !(b > beta)) throw std::domain_error("interval_convert needs beta < b < b'");
  return round_up(eps * std::pow(b_prime, beta) + std::pow(b, beta) * std::exp(-b));
}

namespace {

const Table1Row& row_ending_at(const Table1& t, Rational k) {
  for (const auto& r : t.rows)
    if (r.result.k == k) return r;
  throw std::invalid_argument("the reference table lacks a row with k = " + k.str());
}

}  // namespace

MBounds assemble_M_bounds(const Table1& t) {
  const Table1Row& short_end = row_ending_at(t, Rational(27, 20));
  const Table1Row& long_end = row_ending_at(t, Rational(47, 20));
  const double c0 = 1.0 / 4345;
  const double verified_ratio = 0.571;

  MBounds m;
  const auto M = exact_prefix_table(SeriesKind::M(), 32);
  for (std::size_t n = 1; n < M.size(); ++n) m.max_abs_M_small = std::max(m.max_abs_M_small, std::fabs(static_cast<double>(M[n])));
  const double e2 = std::exp(2.0);
  // (log x)^2/x peaks at x = e^2; (log x)^2/sqrt(x) at x = e^4
  m.pieces.push_back({"1<x<=32", round_up(m.max_abs_M_small * 4 / e2)});
  m.pieces.push_back({"33<=x<=1e16", round_up(verified_ratio * 16 / e2)});
  m.pieces.push_back({"1e16<=x<=e^" + std::to_string(static_cast<int>(short_end.result.log_x_M)),
                      round_up(c0 * short_end.result.log_x_M * short_end.result.log_x_M)});
  const double k1 = static_cast<double>(short_end.result.k.value());
  const double k2 = static_cast<double>(long_end.result.k.value());
  m.pieces.push_back({"middle", round_up(short_end.result.c_M * std::pow(long_end.result.log_x_M, 2 - k1))});
  m.pieces.push_back({"x>=e^" + std::to_string(static_cast<int>(long_end.result.log_x_M)),
                      round_up(long_end.result.c_M / std::pow(long_end.result.log_x_M, k2 - 2))});
  m.c_2 = 0;
  for (const auto& p : m.pieces) m.c_2 = std::max(m.c_2, p.value);
  m.c_235 = long_end.result.c_M;
  m.log_x_M = long_end.result.log_x_M;
  return m;
}

SmallMBounds assemble_m_bounds(const MBounds& M) {
  const double verified_ratio = 0.571;
  const double L16 = 16 * std::log(10.0);
  SmallMBounds out;

  // 1 < x <= 33: m is constant on [n, n+1) and (log x)^2 increases
  double small = 0;
  const auto mv = evaluate(SeriesKind::m(), 33, 1);
  const auto Mv = exact_prefix_table(SeriesKind::M(), 33);
  for (const auto& cp : mv) {
    const double right = std::log(static_cast<double>(std::min<std::uint64_t>(cp.x + 1, 33)));
    small = std::max(small, (std::fabs(cp.value.real) + cp.value.error_bound) * right * right);
  }
  out.pieces.push_back({"1<x<=33", round_up(small)});

  // 33 < x <= 1e16 from |M(t)| <= 0.571 sqrt(t)
  auto mid = [&](double L) {
    const double x = std::exp(L);
    const double v = verified_ratio / std::sqrt(x) + verified_ratio / (x * x) * (2 * std::pow(x, 1.5) / 3 - 1) + 8 / (3 * x);
    return v * L * L;
  };
  double mid_max = 0;
  const double La = std::log(33.0);
  constexpr int kGrid = 200'000;
  for (int i = 0; i <= kGrid; ++i) mid_max = std::max(mid_max, mid(La + (L16 - La) * i / kGrid));
  out.pieces.push_back({"33<x<=1e16", round_up(mid_max)});

  // x > 1e16: integral of |M| split at 33 and 1e16
  long double int_small = 0;
  for (std::size_t n = 1; n < 33; ++n) int_small += std::fabs(static_cast<long double>(Mv[n]));
  const long double absorbed = int_small + verified_ratio * (2.0L / 3) * (std::exp(1.5L * L16) - std::pow(33.0L, 1.5L));
  const double t_coef = M.c_2 * t_log_alpha_constant(2, L16);
  const long double x16 = std::exp(static_cast<long double>(L16));
  const double large = static_cast<double>(M.c_2 + t_coef + absorbed * L16 * L16 / (x16 * x16) + 8 * L16 * L16 / (3 * x16));
  out.pieces.push_back({"x>1e16", round_up(large)});
  out.pieces.push_back({"int_1^33|M|", static_cast<double>(int_small)});
  out.pieces.push_back({"t/(log t)^2 coefficient", t_coef});
  out.c_2 = std::max({out.pieces[0].value, out.pieces[1].value, out.pieces[2].value});

  // x >= e^390
  const double k = 2.35;
  const double L = out.log_x0;
  const double t_coef2 = M.c_235 * t_log_alpha_constant(k, M.log_x_M);
  const double log_abs2 = std::log(M.c_2) + log_integral_t_log_alpha_split(2, std::log(2.0), M.log_x_M);
  // int_1^2 |M| = 1 plus the bound from 2 upward
  const double log_absorbed2 = log_abs2 + std::log1p(std::exp(-log_abs2));
  const double rest = std::exp(log_absorbed2 + k * std::log(L) - 2 * L) + 8 * std::pow(L, k) * std::exp(-L) / 3;
  out.c_235 = round_up(M.c_235 + t_coef2 + rest);
  out.pieces.push_back({"x>=e^390", out.c_235});
  out.pieces.push_back({"t/(log t)^2.35 coefficient", t_coef2});
  out.pieces.push_back({"log int_1^{e^385}|M|", log_absorbed2});
  return out;
}

bool within_target(double derived, double target) { return derived <= target * 1.005 && derived >= target * 0.90; }

const ReportNode* PipelineReport::find(const std::string& name) const {
  for (const auto& n : nodes)
    if (n.name == name) return &n;
  return nullptr;
}

namespace {

void add_node(PipelineReport& r, ReportNode n) {
  if (n.target && !n.met) n.met = within_target(n.spec.c, *n.target);
  if (n.met && !*n.met) r.all_met = false;
  r.nodes.push_back(std::move(n));
}

BoundSpec named(BoundSpec b, std::string name) {
  b.name = std::move(name);
  return b;
}

BoundSpec scalar(const std::string& name, double c, double log_x0 = 0) { return {name, c, 0, 0, log_x0}; }

}  // namespace

namespace {

PipelineReport run_pipeline_unchecked(const PipelineConfig& cfg) {
  PipelineReport r;

  // Euler products
  const std::array<double, 3> thetas{0.0, cfg.u[0].theta, cfg.u[1].theta};
  const std::array<double, 3> fstar_targets{2.8917, 5.4772, 66.568};
  std::array<double, 3> g{};
  for (int i = 0; i < 3; ++i) {
    // thetas may repeat across pieces; the targets refer to the default thetas
    const auto f = fstar_bound(thetas[i], cfg.fstar_m);
    g[i] = gstar_bound(thetas[i], cfg.fstar_m);
    ReportNode n{"fstar(" + std::to_string(thetas[i]).substr(0, 4) + ")",
                 "truncated Euler product times exponential tail",
                 {{"theta", thetas[i]}, {"m", static_cast<double>(cfg.fstar_m)}, {"p_m", static_cast<double>(f.p_m)},
                  {"finite_product", f.finite_product}, {"tail_factor", f.tail_factor}},
                 scalar("F*", f.total), std::nullopt, std::nullopt};
    const PipelineConfig def;
    if (cfg.fstar_m == def.fstar_m && (i == 0 || thetas[i] == std::array<double, 3>{0.0, 0.12, 0.3}[i]))
      n.target = fstar_targets[i];
    add_node(r, n);
    add_node(r, {"gstar(" + std::to_string(thetas[i]).substr(0, 4) + ")", "F*(sigma)/(1-2^{1-sigma}+2^{-2 sigma})",
                 {{"denominator", gstar_denominator(1 - thetas[i])}}, scalar("G*", g[i]), std::nullopt, std::nullopt});
  }
  const double g1 = g[0];
  const double g_theta1 = gstar_bound(cfg.u[0].theta, cfg.fstar_m);
  const double g_theta2 = gstar_bound(cfg.u[1].theta, cfg.fstar_m);
  const double g_theta3 = gstar_bound(cfg.u[2].theta, cfg.fstar_m);

  // m2
  const auto& ms = cfg.m2_small;
  const auto& ml = cfg.m2_large;
  const BoundSpec K1 = named(derive_m2(ms.C1, ms.alpha, ms.C2, ms.log_x0), "m2.small");
  const BoundSpec K2 = named(derive_m2(ml.C1, ml.alpha, ml.C2, ml.log_x0), "m2.large");
  // the small-x range of the first m2 bound is covered by the uniform bound
  BoundSpec K1_all = K1;
  K1_all.log_x0 = 0;
  add_node(r, {"m2.small", "2^{a+1}C1C2 + 2^{2a}C1^2/(log x0)^{a+1}",
               {{"C1", ms.C1}, {"alpha", ms.alpha}, {"C2", ms.C2}, {"log_x0", ms.log_x0}}, K1, 57.88, std::nullopt});
  add_node(r, {"m2.large", "2^{a+1}C1C2 + 2^{2a}C1^2/(log x0)^{a+1}",
               {{"C1", ml.C1}, {"alpha", ml.alpha}, {"C2", ml.C2}, {"log_x0", ml.log_x0}}, K2, 117.67, std::nullopt});

  // u
  const std::array<double, 3> u_targets{1501.93, 812.59, 1714.26};
  const std::array<double, 3> g_th{g_theta1, g_theta2, g_theta3};
  std::vector<BoundSpec> us;
  for (int i = 0; i < 3; ++i) {
    const BoundSpec& K = i < 2 ? K1_all : K2;
    const UPieceConfig& uc = cfg.u[i];
    const double eta = uc.eta_auto ? 1 - K.log_x0 / uc.log_x0 : uc.eta;
    BoundSpec b = named(derive_u(eta, uc.theta, K, g1, g_th[i], uc.log_x0, cfg.m2_sup), "u" + std::to_string(i + 1));
    us.push_back(b);
    add_node(r, {b.name, "K.c G*(1)/(1-eta)^k + 2.06 G*(1-theta) sup L^k e^{-eta theta L}",
                 {{"eta", eta}, {"theta", uc.theta}, {"K.c", K.c}, {"K.k", K.k}, {"G*(1)", g1}, {"G*(1-theta)", g_th[i]}},
                 b, u_targets[i], std::nullopt});
  }

  // U, chained from the derived u bounds
  const std::vector<double> cuts(cfg.cut_logs.begin(), cfg.cut_logs.end());
  const std::array<double, 3> U_targets{3071.82, 1636.07, 3541.86};
  const auto Us = derive_U(us, cuts);
  for (int i = 0; i < 3; ++i)
    add_node(r, {"U" + std::to_string(i + 1), "x|u(x)| + int_1^x |u(t)| dt",
                 {{"u.c", us[i].c}, {"log_absorbed", Us[i].log_absorbed}, {"integral_coefficient", Us[i].integral_coefficient}},
                 named(Us[i].spec, "U" + std::to_string(i + 1)), U_targets[i], std::nullopt});

  // W, chained and from the published U constants
  const std::array<double, 3> W_targets{831, 959, 2260};
  auto add_W = [&](const std::string& tag, double C1, double C2, double C3) {
    const WBound w = derive_W(C1, C2, C3, cfg.epsilon, cfg.base_constant, cfg.cut_logs[0], cfg.cut_logs[1], cfg.cut_logs[2]);
    if (tag.empty()) {
      add_node(r, {"W.h1", "H(ell1)/(log 2 log(X/2))", {{"ell1_max", static_cast<double>(w.ell1_max)}},
                   scalar("h1", w.h1), 0.27, std::nullopt});
      add_node(r, {"W.h2", "sum_{ell1}^{ell2} 1/r /(log 2 log(X/2))", {{"ell2_max", static_cast<double>(w.ell2_max)}},
                   scalar("h2", w.h2), 0.0782, std::nullopt});
    }
    for (int i = 0; i < 3; ++i)
      add_node(r, {"W" + std::to_string(i + 1) + tag, "0.979 + h1 C1 [+ h2 C2 [+ C3/(eps log2 (T log2)^eps)]]",
                   {{"C1", C1}, {"C2", C2}, {"C3", C3}, {"epsilon", cfg.epsilon}, {"T", w.T}},
                   {"W", w.pieces[i], 1, 0, cfg.cut_logs[i]}, W_targets[i], std::nullopt});
  };
  add_W("", Us[0].spec.c, Us[1].spec.c, Us[2].spec.c);
  add_W(".published_U", 3071.82, 1636.07, 3541.86);
  add_node(r, {"W.what_if(0.9)", "0.979 + 2^{1-a} X^{a-1}/(2^{1-a}-1)", {{"alpha", 0.9}},
               scalar("W", what_if_W(0.9, cfg.base_constant, cfg.cut_logs[0])), 1.53, std::nullopt});
  add_node(r, {"W.what_if(0.81)", "0.979 + 2^{1-a} X^{a-1}/(2^{1-a}-1)", {{"alpha", 0.81}},
               scalar("W", what_if_W(0.81, cfg.base_constant, cfg.cut_logs[0])), 0.994, std::nullopt});

  // rho(x) constants
  add_node(r, {"rho.default", "degrade_psi(beta=1, log x_h=3000)", {{"beta", 1}},
               degrade_psi(PsiErrorModel::standard(), 1, 3000.0), 3.2e-11, std::nullopt});
  add_node(r, {"rho.interval(20,21)", "eps b' + b/e^b", {{"eps", 4.26760e-5}},
               {"rho", interval_convert(20, 21, 4.26760e-5, 1), 1, 1, 20}, 8.96237e-4, std::nullopt});

  // iteration table and the M, m assembly
  const Table1 t = run_table1();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const auto& s = row.result;
    std::vector<NamedValue> in{{"A", s.A}, {"alpha", static_cast<double>(s.alpha.value())}, {"B", s.B},
                               {"beta", static_cast<double>(s.beta)}, {"lambda1", s.lambda1}, {"c_N", s.c_N}};
    for (int c = 0; c < 5; ++c) in.push_back({std::string("condition: ") + kSideConditionNames[c], s.conditions[c] ? 1.0 : 0.0});
    add_node(r, {"table1.row" + std::to_string(i + 1), "k = " + s.k.str(), in,
                 {"M", s.c_M, 1, static_cast<double>(s.k.value()), s.log_x_M}, row.printed_c_M, row.met()});
  }
  const MBounds Mb = assemble_M_bounds(t);
  add_node(r, {"M.c2", "max of the piecewise constants", {}, {"M", Mb.c_2, 1, 2, 0}, 2.91890, std::nullopt});
  add_node(r, {"M.c235", "last iteration row", {}, {"M", Mb.c_235, 1, 2.35, Mb.log_x_M}, 4.88346, std::nullopt});
  const SmallMBounds mb = assemble_m_bounds(Mb);
  add_node(r, {"m.c2", "|M|/x + x^{-2} int|M| + 8/(3x)", {}, {"m", mb.c_2, 0, 2, 0}, 4.591, std::nullopt});
  add_node(r, {"m.c235", "|M|/x + x^{-2} int|M| + 8/(3x)", {}, {"m", mb.c_235, 0, 2.35, mb.log_x0}, 7.397, std::nullopt});
  return r;
}

}  // namespace

// parameters outside a derivation's range make the chain infeasible
PipelineReport run_pipeline(const PipelineConfig& cfg) {
  try {
    return run_pipeline_unchecked(cfg);
  } catch (const std::domain_error& e) {
    throw InfeasibleError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InfeasibleError(e.what());
  }
}

}  // namespace omega
