#include "hilbtor/samplers.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

namespace hilbtor {

QuotientCache::QuotientCache(PresentedModule m, std::vector<Polynomial> ideal_gens)
    : m_(std::move(m)), ideal_(std::move(ideal_gens)) {
  for (const auto& f : ideal_)
    if (!f.is_homogeneous()) throw InhomogeneousInput("ideal generators must be homogeneous");
  finite_ = krull_dim(quotient_mod_power(m_, ideal_, 1)) <= 0;
}

std::shared_ptr<const FiniteQuotient> QuotientCache::finite_at(int n) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fq_.find(n);
    if (it != fq_.end()) return it->second;
  }
  auto built = std::make_shared<const FiniteQuotient>(m_, ideal_, n);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = fq_.emplace(n, std::move(built));
  (void)inserted;
  return it->second;
}

std::shared_ptr<const PresentedModule> QuotientCache::presented_at(int n) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pq_.find(n);
    if (it != pq_.end()) return it->second;
  }
  auto built = std::make_shared<const PresentedModule>(quotient_mod_power(m_, ideal_, n));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = pq_.emplace(n, std::move(built));
  (void)inserted;
  return it->second;
}

namespace {

std::int64_t psi_value_fast(const FreeComplex& x, QuotientCache& q, int n) {
  return complex_homology_lengths(x, *q.finite_at(n)).total();
}

std::int64_t psi_value_slow(const FreeComplex& x, QuotientCache& q, int n) {
  PresentedComplex c = tensor_complex_module(x, *q.presented_at(n));
  std::int64_t total = 0;
  for (int i = x.lo(); i <= x.hi(); ++i) total += length_of_quotient(homology(c, i));
  return total;
}

}  // namespace

Samples sample_psi(const FreeComplex& x, QuotientCache& q, int n_min, int n_max,
                   const Deadline& deadline) {
  if (!same_ring(x.ring(), q.ring())) throw RingMismatch();
  if (n_min < 1 || n_max < n_min) throw ValidationError("bad sample range");
  Samples s;
  s.n_min = n_min;
  s.values.assign(static_cast<std::size_t>(n_max - n_min + 1), 0);
  if (q.finite_route()) {
    // Evaluations at distinct n are independent.
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; ++n) ns.push_back(n);
    std::atomic<bool> failed{false};
    std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (ns.size() > 1)
#endif
    for (std::size_t k = 0; k < ns.size(); ++k) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        check_deadline(deadline);
        s.values[static_cast<std::size_t>(ns[k] - n_min)] = psi_value_fast(x, q, ns[k]);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return s;
  }
  if (!in_Kbf(x)) throw NotFiniteValue("neither finite quotients nor finite-length cohomology");
  for (int n = n_min; n <= n_max; ++n) {
    check_deadline(deadline);
    s.values[static_cast<std::size_t>(n - n_min)] = psi_value_slow(x, q, n);
  }
  return s;
}

FreeComplex resolution_of(const PresentedModule& l) {
  return free_resolution(l, static_cast<int>(l.ring()->num_vars()));
}

Samples sample_t(const PresentedModule& l, QuotientCache& q, int n_min, int n_max,
                 const Deadline& deadline) {
  if (is_zero_module(l)) throw HypothesisViolation("L must be nonzero");
  return sample_psi(resolution_of(l), q, n_min, n_max, deadline);
}

Samples sample_e(const PresentedModule& l, QuotientCache& q, int n_min, int n_max,
                 const Deadline& deadline) {
  if (is_zero_module(l)) throw HypothesisViolation("L must be nonzero");
  return sample_psi(hom_dual(resolution_of(l)), q, n_min, n_max, deadline);
}

AdaptiveFit adaptive_fit_psi(const FreeComplex& x, QuotientCache& q, const SampleOptions& opt) {
  int n_max = opt.n_max;
  while (true) {
    Samples s = sample_psi(x, q, opt.n_min, n_max, opt.deadline);
    FitResult f = fit_degree(s, opt.window);
    if (f.status != FitStatus::NotStabilized || n_max >= opt.adaptive_cap)
      return AdaptiveFit{f, std::move(s)};
    n_max = std::min(opt.adaptive_cap, n_max * 2);
  }
}

}  // namespace hilbtor
