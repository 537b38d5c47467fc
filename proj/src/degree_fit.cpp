#include "hilbtor/degree_fit.hpp"

namespace hilbtor {

std::string to_string(FitStatus s) {
  switch (s) {
    case FitStatus::Stabilized: return "stabilized";
    case FitStatus::IdenticallyZero: return "identically_zero";
    case FitStatus::NotStabilized: return "not_stabilized";
  }
  return "?";
}

FitResult fit_degree(const Samples& s, int window) {
  if (window < 2) throw ValidationError("window must be >= 2");
  if (static_cast<int>(s.values.size()) < window) throw TooFewSamples();
  for (auto v : s.values)
    if (v < 0) throw ValidationError("samples must be non-negative");

  const int len = static_cast<int>(s.values.size());
  {
    bool all_zero = true;
    for (int j = len - window; j < len; ++j)
      if (s.values[static_cast<std::size_t>(j)] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      FitResult r;
      r.status = FitStatus::IdenticallyZero;
      return r;
    }
  }

  std::vector<std::int64_t> diff(s.values.begin(), s.values.end());
  for (int r = 0; r + window <= len; ++r) {
    // diff currently holds the r-th differences, length len - r.
    const int dl = len - r;
    std::int64_t last = diff[static_cast<std::size_t>(dl - 1)];
    bool constant = true;
    for (int j = dl - window; j < dl; ++j)
      if (diff[static_cast<std::size_t>(j)] != last) {
        constant = false;
        break;
      }
    if (constant && last > 0) {
      int from = dl - 1;
      while (from > 0 && diff[static_cast<std::size_t>(from - 1)] == last) --from;
      FitResult out;
      out.status = FitStatus::Stabilized;
      out.degree = r;
      out.leading_diff = last;
      out.stable_from = s.n_min + from;
      return out;
    }
    for (int j = 0; j + 1 < dl; ++j)
      diff[static_cast<std::size_t>(j)] = diff[static_cast<std::size_t>(j + 1)] - diff[static_cast<std::size_t>(j)];
    diff.pop_back();
  }
  FitResult out;
  out.status = FitStatus::NotStabilized;
  return out;
}

std::int64_t eta_value(const FitResult& f, int c) {
  if (f.status == FitStatus::IdenticallyZero) return 0;
  if (f.status != FitStatus::Stabilized) throw ValidationError("eta needs a stabilized fit");
  if (f.degree > c) throw DegreeExceedsC("fitted degree " + std::to_string(f.degree) +
                                         " exceeds reference degree " + std::to_string(c));
  return f.degree == c ? f.leading_diff : 0;
}

}  // namespace hilbtor
