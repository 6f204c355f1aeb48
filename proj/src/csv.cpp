#include "omega/csv.hpp"

#include <cmath>
#include <cstdio>

namespace omega {

namespace {
std::string g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace

CsvWriter::CsvWriter(std::ostream& out, double exponent, bool with_log_x)
    : out_(out), exponent_(exponent), with_log_x_(with_log_x) {
  out_ << "x,value,normalized" << (with_log_x_ ? ",u" : "") << '\n';
}

void CsvWriter::row(const SummatoryCheckpoint& cp) {
  const double x = static_cast<double>(cp.x);
  out_ << cp.x << ',' << cp.value.str() << ',' << g12(cp.value.real / std::pow(x, exponent_));
  if (with_log_x_) out_ << ',' << g12(std::log(x));
  out_ << '\n';
  ++rows_;
}

}  // namespace omega
