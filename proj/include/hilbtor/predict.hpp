#pragma once

#include <optional>

#include "hilbtor/samplers.hpp"

namespace hilbtor {

struct DegreeReport {
  FitResult fitted;
  Samples samples;
  int dim_M = -1;
  int dim_H = -1;                     // dim H^*(X tensor M)
  std::optional<int> analytic_spread; // = dim M for ideals primary to the maximal ideal
  int predicted = -1;
  bool pass = false;
};

// True when A/I has dimension zero (I proper and primary to the irrelevant
// maximal ideal).
bool is_m_primary(const std::vector<Polynomial>& ideal_gens, const RingPtr& ring);

// Fits the length-function degree of X against (M, I) and predicts it as
// max{dim H^*(X tensor M), dim M - 1}. Requires I primary to the maximal
// ideal and dim M > 0.
DegreeReport predict_degrees(const FreeComplex& x, QuotientCache& q, const SampleOptions& opt);

// Tor/Ext flavor: the complex is a resolution of L (or its dual).
DegreeReport predict_degrees_for_module(const PresentedModule& l, QuotientCache& q,
                                        const SampleOptions& opt, bool ext_route);

}  // namespace hilbtor
