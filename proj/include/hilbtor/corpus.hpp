#pragma once

#include "hilbtor/scenario.hpp"

namespace hilbtor {

// Deterministic built-in corpus: fixed desk-scale scenarios plus seeded random
// ones. dense_ideals lifts the monomial/binomial restriction on random ideals.
std::vector<Scenario> generate_corpus(std::uint64_t seed, bool dense_ideals = false);

}  // namespace hilbtor
