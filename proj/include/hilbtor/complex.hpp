#pragma once

#include <vector>

#include "hilbtor/free_module.hpp"

namespace hilbtor {

// Degree-zero map of graded free modules: entry (i,j) is zero or homogeneous
// of degree source.twists[j] - target.twists[i].
struct GradedMap {
  RingPtr ring;
  FreeModuleSpec source, target;
  std::vector<Polynomial> entries;  // row-major, target.rank x source.rank

  static GradedMap zero(const RingPtr& ring, FreeModuleSpec src, FreeModuleSpec tgt);
  const Polynomial& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i * source.rank + j)];
  }
  Polynomial& at(int i, int j) { return entries[static_cast<std::size_t>(i * source.rank + j)]; }
  bool is_zero() const;
  ModVector column(int j) const;
  ModVector apply(const ModVector& v) const;
  GradedMap compose_after(const GradedMap& first) const;  // this o first
  GradedMap scaled(std::uint32_t c) const;
  void validate() const;  // shape + homogeneity degrees
};

// Bounded cohomological complex of graded free modules; d^i : term(i) -> term(i+1),
// with d o d = 0 enforced at construction.
class FreeComplex {
 public:
  FreeComplex(RingPtr ring, int lo, std::vector<FreeModuleSpec> terms, std::vector<GradedMap> diffs);
  static FreeComplex zero(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty_range() const { return terms_.empty(); }
  FreeModuleSpec term(int i) const;
  GradedMap diff(int i) const;  // zero map outside the stored range
  int total_rank() const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<FreeModuleSpec> terms_;
  std::vector<GradedMap> diffs_;  // diffs_[k] : terms_[k] -> terms_[k+1]
};

// Exterior algebra complex on homogeneous nonzero elements, in indices [-c, 0];
// H^0 = A/(elems).
FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& elems);

// Taylor resolution of A/<monomial gens>, indices [-m, 0].
FreeComplex taylor_complex(const RingPtr& ring, const std::vector<Polynomial>& monomial_gens);

// Reindex by k; differentials pick up the sign (-1)^k.
FreeComplex shift(const FreeComplex& x, int k);
FreeComplex direct_sum(const FreeComplex& x, const FreeComplex& y);

struct ChainMap {
  FreeComplex source, target;
  std::vector<GradedMap> comps;  // from index min(source.lo, target.lo) upward

  ChainMap(FreeComplex src, FreeComplex tgt)
      : source(std::move(src)), target(std::move(tgt)) {}
  GradedMap at(int i) const;
  void validate() const;  // commutation with differentials, exactly
};

// Componentwise multiplication by a homogeneous f; the target twists drop by deg f.
ChainMap mult_chain_map(const FreeComplex& x, const Polynomial& f);
ChainMap zero_chain_map(const FreeComplex& x, const FreeComplex& y);

// cone(f)^i = target^i + source^{i+1}, differential [[d_Y, f], [0, -d_X]].
FreeComplex cone(const ChainMap& f);

// (X*)^i = dual of X^{-i}, transposed differentials with sign (-1)^{i+1}.
FreeComplex hom_dual(const FreeComplex& x);

// Homotopy-equivalent complex with no degree-zero differential entries
// (Gaussian cancellation of unit entries).
FreeComplex minimize(const FreeComplex& x);

bool has_unit_entries(const FreeComplex& x);

}  // namespace hilbtor
