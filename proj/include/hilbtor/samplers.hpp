#pragma once

#include <chrono>
#include <memory>
#include <optional>

#include "hilbtor/degree_fit.hpp"
#include "hilbtor/finite_quotient.hpp"
#include "hilbtor/presented_complex.hpp"
#include "hilbtor/resolution.hpp"

namespace hilbtor {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline void check_deadline(const Deadline& d) {
  if (d && std::chrono::steady_clock::now() > *d) throw TimedOut();
}

// Shared store of quotients M/I^nM for one (M, I) pair. Finite quotients are
// built when the support allows it; presented quotients back the slow path.
class QuotientCache {
 public:
  QuotientCache(PresentedModule m, std::vector<Polynomial> ideal_gens);

  const PresentedModule& module() const { return m_; }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const RingPtr& ring() const { return m_.ring(); }
  // True when M/IM (hence every M/I^nM) has finite length.
  bool finite_route() const { return finite_; }

  std::shared_ptr<const FiniteQuotient> finite_at(int n);
  std::shared_ptr<const PresentedModule> presented_at(int n);

 private:
  PresentedModule m_;
  std::vector<Polynomial> ideal_;
  bool finite_ = false;
  std::mutex mu_;
  std::map<int, std::shared_ptr<const FiniteQuotient>> fq_;
  std::map<int, std::shared_ptr<const PresentedModule>> pq_;
};

struct SampleOptions {
  int n_min = 1;
  int n_max = 8;
  int window = 4;
  int adaptive_cap = 64;
  Deadline deadline;
};

// Values of n -> sum_i l(H^i(X tensor M/I^nM)). Uses the dense fast path when
// the quotients have finite length, otherwise presented homology (which needs
// X to have finite-length cohomology).
Samples sample_psi(const FreeComplex& x, QuotientCache& q, int n_min, int n_max,
                   const Deadline& deadline = {});

// Tor and Ext length sums against a resolution of L.
Samples sample_t(const PresentedModule& l, QuotientCache& q, int n_min, int n_max,
                 const Deadline& deadline = {});
Samples sample_e(const PresentedModule& l, QuotientCache& q, int n_min, int n_max,
                 const Deadline& deadline = {});

struct AdaptiveFit {
  FitResult fit;
  Samples samples;
};

// Samples with n_max doubling (up to the cap) until the fit stabilizes.
AdaptiveFit adaptive_fit_psi(const FreeComplex& x, QuotientCache& q, const SampleOptions& opt);

// Resolution used by the Tor/Ext samplers (pruned, cap = number of variables).
FreeComplex resolution_of(const PresentedModule& l);

}  // namespace hilbtor
