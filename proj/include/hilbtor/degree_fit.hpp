#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbtor/errors.hpp"

namespace hilbtor {

struct Samples {
  int n_min = 1;
  std::vector<std::int64_t> values;
};

enum class FitStatus { Stabilized, IdenticallyZero, NotStabilized };

std::string to_string(FitStatus s);

struct FitResult {
  FitStatus status = FitStatus::NotStabilized;
  int degree = -1;           // defined when Stabilized
  std::int64_t leading_diff = 0;  // stable degree-th difference = degree! * leading coefficient
  int stable_from = -1;      // first n where the constant window begins
};

// Iterated finite differences. Stabilized reports the least r whose r-th
// differences are constant and positive over the trailing window entries;
// an all-zero trailing window reports IdenticallyZero.
FitResult fit_degree(const Samples& s, int window);

// The normalized limit against reference degree c: leading_diff when the fit
// has degree exactly c, zero for lower degree. Degrees above c are a corpus
// inconsistency and throw DegreeExceedsC.
std::int64_t eta_value(const FitResult& f, int c);

}  // namespace hilbtor
