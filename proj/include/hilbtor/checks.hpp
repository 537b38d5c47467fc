#pragma once

#include <chrono>

#include "hilbtor/scenario.hpp"

namespace hilbtor {

enum class CheckStatus { Pass, Fail, Skipped, TimedOutStatus };

std::string to_string(CheckStatus s);

struct CheckOutcome {
  std::string check;
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<FitResult> fitted;
  std::optional<std::int64_t> predicted;
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;
  std::vector<std::int64_t> samples;
  std::int64_t millis = 0;
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::optional<int> n_max_override;
  std::optional<int> window_override;
  std::optional<std::uint32_t> char_override;
  std::chrono::milliseconds budget{120000};  // per check
};

// Runs every requested check of the scenario; engine errors become fail
// outcomes, hypothesis violations become skips, and nothing aborts the suite.
std::vector<CheckOutcome> run_checks(const Scenario& s, const RunOptions& opt = {});

bool any_failure(const std::vector<CheckOutcome>& outcomes);

}  // namespace hilbtor
