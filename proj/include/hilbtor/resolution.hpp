#pragma once

#include "hilbtor/complex.hpp"
#include "hilbtor/presented.hpp"

namespace hilbtor {

// Minimal graded free resolution of L in indices [-len, 0]: H^0 = L, no unit
// entries in any differential. Throws CapExceeded when more than cap syzygy
// steps would be needed.
FreeComplex free_resolution(const PresentedModule& l, int cap);

// A minimal homogeneous generating set, extracted greedily by ascending degree.
std::vector<ModVector> minimal_generators(std::vector<ModVector> gens,
                                          const FreeModuleSpec& ambient, const RingPtr& ring);

}  // namespace hilbtor
