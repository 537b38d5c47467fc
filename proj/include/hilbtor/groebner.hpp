#pragma once

#include <optional>
#include <vector>

#include "hilbtor/free_module.hpp"

namespace hilbtor {

// Reduced Groebner basis of a submodule of a graded free module. Generators
// are monic, fully interreduced and sorted ascending by leading term.
struct GroebnerBasis {
  RingPtr ring;
  FreeModuleSpec ambient;
  ModOrder order;
  std::vector<ModVector> gens;
  std::vector<ModTerm> leads;  // cached, parallel to gens

  bool empty() const { return gens.empty(); }
};

GroebnerBasis buchberger(std::vector<ModVector> gens, FreeModuleSpec ambient, RingPtr ring,
                         ModOrder order = {});

// Full normal form: the result has no term divisible by a leading term of gb.
ModVector normal_form(const ModVector& v, const GroebnerBasis& gb);
bool is_member(const ModVector& v, const GroebnerBasis& gb);

// Re-checks the Buchberger criterion on a finished basis (test hook).
bool all_spairs_reduce_to_zero(const GroebnerBasis& gb);

// Generators of the syzygy module of gens, living in a free module whose
// twists are the degrees of gens. Computed by eliminating the graph module
// generated by (g_i, e_i).
std::vector<ModVector> syzygy_basis(const std::vector<ModVector>& gens,
                                    const FreeModuleSpec& ambient, const RingPtr& ring,
                                    FreeModuleSpec* syz_ambient_out = nullptr);

// Graph-basis toolkit for one generator list: membership with coefficients
// plus syzygies, sharing a single elimination basis.
class SubmoduleOps {
 public:
  SubmoduleOps(std::vector<ModVector> gens, FreeModuleSpec ambient, RingPtr ring);

  int num_gens() const { return static_cast<int>(gen_degrees_.size()); }
  FreeModuleSpec syzygy_ambient() const;
  const std::vector<ModVector>& syzygies() const { return syzygies_; }
  // Coefficients w with v = sum w_i * gens_i, or nullopt if v is not a member.
  std::optional<ModVector> lift(const ModVector& v) const;

 private:
  RingPtr ring_;
  FreeModuleSpec ambient_;
  std::vector<int> gen_degrees_;
  GroebnerBasis graph_;
  std::vector<ModVector> syzygies_;
};

// Rank-1 conveniences for ideals.
GroebnerBasis ideal_groebner(const std::vector<Polynomial>& gens, const RingPtr& ring);
// Interreduced generating set (the reduced basis) of I^n, n >= 1.
std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, int n,
                                    const RingPtr& ring);

ModVector to_modvector(const Polynomial& f);
Polynomial from_rank1(const ModVector& v);

}  // namespace hilbtor
