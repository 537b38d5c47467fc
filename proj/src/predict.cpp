#include "hilbtor/predict.hpp"

#include <algorithm>

namespace hilbtor {

bool is_m_primary(const std::vector<Polynomial>& ideal_gens, const RingPtr& ring) {
  return krull_dim(PresentedModule::quotient_ring(ring, ideal_gens)) == 0;
}

namespace {

DegreeReport report_for(const FreeComplex& x, QuotientCache& q, const SampleOptions& opt) {
  if (!is_m_primary(q.ideal(), q.ring()))
    throw HypothesisViolation("I is not primary to the maximal ideal");
  int dim_m = krull_dim(q.module());
  if (dim_m <= 0) throw HypothesisViolation("dim M must be positive");
  if (is_zero_object(x)) throw HypothesisViolation("X must be nonzero in the homotopy category");

  DegreeReport r;
  r.dim_M = dim_m;
  r.analytic_spread = dim_m;
  r.dim_H = dim_total_homology(x, q.module());
  r.predicted = std::max(r.dim_H, dim_m - 1);
  AdaptiveFit af = adaptive_fit_psi(x, q, opt);
  r.fitted = af.fit;
  r.samples = std::move(af.samples);
  r.pass = r.fitted.status == FitStatus::Stabilized && r.fitted.degree == r.predicted;
  return r;
}

}  // namespace

DegreeReport predict_degrees(const FreeComplex& x, QuotientCache& q, const SampleOptions& opt) {
  return report_for(x, q, opt);
}

DegreeReport predict_degrees_for_module(const PresentedModule& l, QuotientCache& q,
                                        const SampleOptions& opt, bool ext_route) {
  if (is_zero_module(l)) throw HypothesisViolation("L must be nonzero");
  FreeComplex res = resolution_of(l);
  FreeComplex x = ext_route ? hom_dual(res) : res;
  return report_for(x, q, opt);
}

}  // namespace hilbtor
