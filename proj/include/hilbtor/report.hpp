#pragma once

#include "hilbtor/checks.hpp"

namespace hilbtor {

enum class ReportFormat { JsonFormat, Csv, Text };

struct ReportMeta {
  std::string version = "0.1.0";
  std::uint64_t seed = 0;
  std::uint32_t characteristic = 32003;
};

// Stable key order; one outcome object per check run.
Json report_json(const ReportMeta& meta, const std::vector<CheckOutcome>& outcomes);
std::string emit_report(const ReportMeta& meta, const std::vector<CheckOutcome>& outcomes,
                        ReportFormat format);

}  // namespace hilbtor
