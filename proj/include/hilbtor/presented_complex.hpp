#pragma once

#include "hilbtor/complex.hpp"
#include "hilbtor/presented.hpp"

namespace hilbtor {

// Complex of presented modules, given by induced maps between ambients.
struct PresentedComplex {
  RingPtr ring;
  int lo = 0;
  std::vector<PresentedModule> terms;
  std::vector<GradedMap> maps;  // maps[k] : terms[k].ambient -> terms[k+1].ambient

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int i) const { return !terms.empty() && i >= lo && i <= hi(); }
};

PresentedComplex tensor_complex_module(const FreeComplex& x, const PresentedModule& m);

// H^i = ker / im as a presented module (presentation unnormalized; compare via
// invariants, not presentations).
PresentedModule homology(const PresentedComplex& c, int i);
PresentedModule homology_free(const FreeComplex& x, int i);

// max_i krull_dim H^i(X tensor M); -1 when all homology vanishes.
int dim_total_homology(const FreeComplex& x, const PresentedModule& m);

// True iff every H^i(X) has finite length.
bool in_Kbf(const FreeComplex& x);
// True iff H^*(X) = 0.
bool is_zero_object(const FreeComplex& x);

}  // namespace hilbtor
