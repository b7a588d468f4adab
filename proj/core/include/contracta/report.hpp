#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "contracta/stability.hpp"

namespace contracta {

/// One simplification run, in the shape of a results-table row.
struct RunReport {
  std::string dataset;
  std::size_t init_simplices = 0;
  std::size_t contractions = 0;
  std::size_t iterations = 0;  // number of stages
  std::size_t remaining_simplices = 0;
  double pct_reduction = 0.0;
  double d_b = 0.0;
  double epsilon = 0.0;
  int p = 0;
  std::optional<std::uint64_t> seed;  // set when the input was generated
  SimplificationLog log;
};

RunReport make_run_report(std::string dataset, std::size_t init_simplices,
                          std::size_t remaining_simplices, double d_b,
                          const SimplificationLog& log);

void write_report_json(const RunReport& r, const std::filesystem::path& path);

}  // namespace contracta
