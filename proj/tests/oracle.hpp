// Brute-force reference computations for the test suites. Everything here
// works degree by degree with dense linear algebra and stays independent of
// the basis/normal-form machinery it cross-checks.
#pragma once

#include <cstdint>
#include <vector>

#include "hilbtor/free_module.hpp"

namespace oracle {

// Row-echelon rank of an integer matrix mod p (self-contained Gauss).
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::uint32_t p);

// All monomials of the given total degree in nvars variables.
std::vector<hilbtor::Monomial> monomials_of_degree(int nvars, int degree);

// dim_k of the degree-d piece of the submodule generated by gens inside the
// free module with the given twists.
std::int64_t submodule_piece_dim(const std::vector<hilbtor::ModVector>& gens,
                                 const hilbtor::FreeModuleSpec& ambient,
                                 const hilbtor::RingPtr& ring, int degree);

// dim_k of the degree-d piece of ambient/<gens>.
std::int64_t quotient_piece_dim(const std::vector<hilbtor::ModVector>& gens,
                                const hilbtor::FreeModuleSpec& ambient,
                                const hilbtor::RingPtr& ring, int degree);

// dim_k of the degree-d piece of the syzygy module of gens (kernel of the
// evaluation map from the twisted free module onto the span of gens).
std::int64_t syzygy_piece_dim(const std::vector<hilbtor::ModVector>& gens,
                              const hilbtor::FreeModuleSpec& ambient,
                              const hilbtor::RingPtr& ring, int degree);

// Standalone Tor/Ext length sums for the Koszul complex on (x, y) against
// k[x,y]/m^n, built directly on the monomial basis (used to freeze the
// worked 2n+2 instance). Returns the total over all homological indices.
std::int64_t tor_total_koszul2(int n, std::uint32_t p);
std::int64_t ext_total_koszul2(int n, std::uint32_t p);

}  // namespace oracle
