#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hilbtor/groebner.hpp"

namespace hilbtor {

// Finitely presented graded module: ambient / <relations>. The reduced basis
// of the relation submodule is computed at construction and shared.
class PresentedModule {
 public:
  PresentedModule(RingPtr ring, FreeModuleSpec ambient, std::vector<ModVector> relations);

  static PresentedModule free_module(const RingPtr& ring, FreeModuleSpec ambient);
  static PresentedModule ring_itself(const RingPtr& ring);
  // A / <gens>.
  static PresentedModule quotient_ring(const RingPtr& ring, const std::vector<Polynomial>& gens);

  const RingPtr& ring() const { return ring_; }
  const FreeModuleSpec& ambient() const { return ambient_; }
  const std::vector<ModVector>& relations() const { return relations_; }
  const GroebnerBasis& gb() const { return *gb_; }

 private:
  RingPtr ring_;
  FreeModuleSpec ambient_;
  std::vector<ModVector> relations_;
  std::shared_ptr<const GroebnerBasis> gb_;
};

// Krull dimension read off the initial module; -1 for the zero module.
int krull_dim(const PresentedModule& m);
bool is_zero_module(const PresentedModule& m);

// Exact length when finite; throws InfiniteLength otherwise.
std::int64_t length_of_quotient(const PresentedModule& m);

// Standard (monomial, position) pairs, sorted grevlex-then-position ascending.
// Throws InfiniteLength when the set is infinite.
std::vector<std::pair<Monomial, int>> standard_monomials(const PresentedModule& m);

// Dimension over k of the graded piece in internal degree d.
std::int64_t hilbert_function(const PresentedModule& m, int degree);

PresentedModule tensor_modules(const PresentedModule& a, const PresentedModule& b);

// M / I^n M as a presented module.
PresentedModule quotient_mod_power(const PresentedModule& m, const std::vector<Polynomial>& ideal_gens,
                                   int n);

// Gaussian cancellation of degree-zero relation entries; returns an isomorphic
// module whose relations all have entries of positive degree.
PresentedModule prune_presentation(const PresentedModule& m);

}  // namespace hilbtor
