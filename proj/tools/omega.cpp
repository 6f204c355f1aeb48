#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "omega/analytic.hpp"
#include "omega/csv.hpp"
#include "omega/pipeline.hpp"
#include "omega/report.hpp"
#include "omega/summatory.hpp"
#include "omega/w3.hpp"

using namespace omega;

namespace {

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kOverflow = 3, kInfeasible = 4 };

struct Output {
  std::string path;
  std::ofstream file;
  std::ostream& stream() { return path.empty() || path == "-" ? std::cout : file; }
  void open() {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  }
};

void write_manifest(const RunManifest& m, const std::string& out) {
  if (out.empty() || out == "-") return;
  std::ofstream f(out + ".manifest.json");
  f << dump(to_json(m));
}

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("OMEGA_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Summatory functions of (-a)^Omega(n) and the explicit-constant pipeline"};
  app.require_subcommand(1);

  std::string kind_tag = "W", out;
  std::optional<double> a, exponent;
  std::uint64_t x_max = 1'000'000, stride = 10'000, lo = 1, hi = 1'000'000;
  double c = 1, eps = 0.1, alpha = 0.9;
  bool log_x = false, float_arith = false;
  std::string config;

  auto kind_opts = [&](CLI::App* s) {
    s->add_option("--kind", kind_tag, "W, T, U, u, M, m, m2, L or G")->required();
    s->add_option("--a", a, "parameter for W and T (default 2)");
  };

  auto* summ = app.add_subcommand("summatory", "checkpointed values as CSV");
  kind_opts(summ);
  summ->add_option("--xmax", x_max)->required();
  summ->add_option("--stride", stride);
  summ->add_option("--exponent", exponent, "normalizer exponent (default per kind)");
  summ->add_flag("--log-x", log_x, "append a u = log x column");
  summ->add_flag("--float", float_arith, "compensated double instead of exact integers");
  summ->add_option("--out", out, "CSV path (default stdout)");

  double e_flag = 1;
  auto* ver = app.add_subcommand("verify", "check |F(x)| < c x^e on [lo, hi]");
  kind_opts(ver);
  ver->add_option("--c", c)->required();
  ver->add_option("--e", e_flag)->required();
  ver->add_option("--lo", lo)->required();
  ver->add_option("--hi", hi)->required();

  auto* ext = app.add_subcommand("extrema", "extrema of F(x)/x^e on [lo, hi]");
  kind_opts(ext);
  ext->add_option("--lo", lo)->required();
  ext->add_option("--hi", hi)->required();
  ext->add_option("--exponent", exponent, "normalizer exponent (default per kind)");
  ext->add_option("--out", out);

  auto* pipe = app.add_subcommand("pipeline", "derive every constant of the bound chain");
  pipe->add_option("--config", config, "key = value file (defaults built in)");
  pipe->add_option("--out", out);

  auto* t1 = app.add_subcommand("table1", "iteration rows for the M bounds");
  t1->add_option("--out", out);

  auto* s3 = app.add_subcommand("s3", "estimate of limsup |W_3(x)|/x^{log2 3}");
  s3->add_option("--lo", lo)->required();
  s3->add_option("--hi", hi)->required();
  s3->add_option("--eps", eps);
  s3->add_option("--out", out);

  auto* wif = app.add_subcommand("what-if", "final W constant if |U(x)| <= x^alpha");
  wif->add_option("--alpha", alpha)->required();

  auto* liou = app.add_subcommand("liouville", "first x >= 2 with L(x) > 0");
  liou->add_option("--hi", hi)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  RunManifest manifest;
  manifest.tool_version = kToolVersion;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](const std::string& cmd) {
    manifest.command = cmd;
    manifest.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.empty() && out != "-") manifest.outputs.push_back(out);
    write_manifest(manifest, out);
  };

  try {
    if (*summ) {
      const SeriesKind kind = parse_series_kind(kind_tag, a);
      const double e = exponent.value_or(kind.default_exponent());
      if (stride < 1 || x_max < 1) throw std::invalid_argument("xmax and stride must be at least 1");
      Output o{out, {}};
      o.open();
      CsvWriter w(o.stream(), e, log_x);
      EvalOptions opts;
      opts.include_first = true;
      if (float_arith) opts.arithmetic = Arithmetic::Float;
      evaluate_stream(kind, x_max, stride, [&](const SummatoryCheckpoint& cp) { w.row(cp); }, opts);
      manifest.parameters = {{"kind", kind.name()}, {"xmax", std::to_string(x_max)}, {"stride", std::to_string(stride)},
                             {"exponent", g(e)}, {"threads", std::to_string(omp_get_max_threads())}};
      finish("summatory");
      return kOk;
    }
    if (*ver) {
      const SeriesKind kind = parse_series_kind(kind_tag, a);
      const BoundCheck r = verify_linear_bound(kind, c, e_flag, lo, hi);
      if (r.pass) {
        std::cout << "pass: |" << kind.name() << "(x)| < " << g(c) << " x^" << g(e_flag) << " for " << lo
                  << " <= x <= " << hi << " (" << r.checked << " values)\n";
        return kOk;
      }
      std::cout << "fail: x = " << *r.first_violation << ", " << kind.name() << "(x) = " << r.value_at_violation.str()
                << ", bound " << g(c * std::pow(static_cast<double>(*r.first_violation), e_flag)) << "\n";
      return kViolation;
    }
    if (*ext) {
      const SeriesKind kind = parse_series_kind(kind_tag, a);
      const ExtremaRecord r = scan_extrema(kind, lo, hi, exponent.value_or(kind.default_exponent()));
      Json j = to_json(r);
      j["kind"] = kind.name();
      Output o{out, {}};
      o.open();
      o.stream() << dump(j);
      finish("extrema");
      return kOk;
    }
    if (*pipe) {
      const PipelineConfig cfg = config.empty() ? PipelineConfig{} : PipelineConfig::load(config);
      const PipelineReport r = run_pipeline(cfg);
      Output o{out, {}};
      o.open();
      o.stream() << dump(to_json(r));
      manifest.parameters = {{"config", config.empty() ? "(built-in)" : config}};
      finish("pipeline");
      return kOk;
    }
    if (*t1) {
      const Table1 t = run_table1();
      const MBounds M = assemble_M_bounds(t);
      const SmallMBounds m = assemble_m_bounds(M);
      Json j = to_json(t);
      j["M_bounds"] = to_json(M);
      j["m_bounds"] = to_json(m);
      Output o{out, {}};
      o.open();
      o.stream() << dump(j);
      finish("table1");
      return t.all_met ? kOk : kViolation;
    }
    if (*s3) {
      const S3Estimate e = estimate_s3(lo, hi, eps);
      Output o{out, {}};
      o.open();
      o.stream() << dump(to_json(e));
      manifest.parameters = {{"lo", std::to_string(lo)}, {"hi", std::to_string(hi)}, {"eps", g(eps)}};
      finish("s3");
      return kOk;
    }
    if (*wif) {
      std::cout << g(what_if_W(alpha)) << "\n";
      return kOk;
    }
    if (*liou) {
      if (hi < 2) throw std::invalid_argument("hi must be at least 2");
      const auto x = first_positive(SeriesKind::L(), 2, hi);
      if (x) std::cout << "L(x) > 0 first at x = " << *x << "\n";
      else std::cout << "L(x) <= 0 for 2 <= x <= " << hi << "\n";
      return kOk;
    }
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ConfigError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
