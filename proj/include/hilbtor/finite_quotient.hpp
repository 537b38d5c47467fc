#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hilbtor/complex.hpp"
#include "hilbtor/fp_matrix.hpp"
#include "hilbtor/presented.hpp"

namespace hilbtor {

struct LengthTable {
  int lo = 0;
  std::vector<std::int64_t> entries;

  int hi() const { return lo + static_cast<int>(entries.size()) - 1; }
  std::int64_t at(int i) const {
    if (entries.empty() || i < lo || i > hi()) return 0;
    return entries[static_cast<std::size_t>(i - lo)];
  }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto e : entries) t += e;
    return t;
  }
};

// Explicit finite-dimensional expansion of M/I^nM over k, with cached
// multiplication matrices for ring elements.
class FiniteQuotient {
 public:
  // Throws NotFiniteLength when M/I^nM has positive dimension.
  FiniteQuotient(const PresentedModule& m, std::vector<Polynomial> ideal_gens, int n);

  const RingPtr& ring() const { return ring_; }
  std::int64_t dimension() const { return static_cast<std::int64_t>(basis_.size()); }
  int power() const { return n_; }
  const std::vector<std::pair<Monomial, int>>& basis() const { return basis_; }
  const std::vector<Polynomial>& ideal() const { return ideal_; }

  // Matrix of multiplication by f on the basis; cached, thread-safe. The
  // reference stays valid for the lifetime of the quotient.
  const FpMatrix& mult_matrix(const Polynomial& f) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> ideal_;
  int n_ = 1;
  int ambient_rank_ = 0;
  GroebnerBasis gb_;
  std::vector<std::pair<Monomial, int>> basis_;
  std::map<std::pair<std::vector<std::uint16_t>, int>, int> index_;
  mutable std::mutex mu_;
  mutable std::map<Polynomial, FpMatrix, PolyLess> cache_;
};

// Per-index lengths of H^i(X tensor N) via dense rank computations; total is
// the sample value of the length function at this N.
LengthTable complex_homology_lengths(const FreeComplex& x, const FiniteQuotient& n);

// Ext lengths via the dual-tensor route.
LengthTable hom_homology_lengths(const FreeComplex& x, const FiniteQuotient& n);
// Direct expansion of the Hom complex; must agree with the dual-tensor route.
LengthTable hom_homology_lengths_direct(const FreeComplex& x, const FiniteQuotient& n);

// Dimension of the simultaneous kernel of multiplication by elems on N; the
// empty list yields dim N.
std::int64_t annihilator_dim(const FiniteQuotient& n, const std::vector<Polynomial>& elems);

}  // namespace hilbtor
