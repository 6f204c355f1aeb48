#pragma once

#include <ostream>

#include "omega/summatory.hpp"

namespace omega {

// Rows "x,value,normalized" with normalized = value/x^exponent, plus a trailing
// "u" column (log x) when with_log_x is set.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, double exponent, bool with_log_x = false);
  void row(const SummatoryCheckpoint& cp);
  std::uint64_t rows() const { return rows_; }

 private:
  std::ostream& out_;
  double exponent_;
  bool with_log_x_;
  std::uint64_t rows_ = 0;
};

}  // namespace omega
