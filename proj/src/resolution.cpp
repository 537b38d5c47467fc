#include "hilbtor/resolution.hpp"

#include <algorithm>

namespace hilbtor {

std::vector<ModVector> minimal_generators(std::vector<ModVector> gens,
                                          const FreeModuleSpec& ambient, const RingPtr& ring) {
  std::vector<ModVector> in;
  for (auto& g : gens)
    if (!g.is_zero()) in.push_back(std::move(g));
  ModOrder ord;
  std::stable_sort(in.begin(), in.end(), [&](const ModVector& a, const ModVector& b) {
    int da = a.degree(ambient), db = b.degree(ambient);
    if (da != db) return da < db;
    return ord.compare(lead_term(a, ord), lead_term(b, ord)) < 0;
  });
  std::vector<ModVector> kept;
  GroebnerBasis gb = buchberger({}, ambient, ring);
  for (auto& g : in) {
    if (!kept.empty() && is_member(g, gb)) continue;
    kept.push_back(std::move(g));
    gb = buchberger(kept, ambient, ring);
  }
  return kept;
}

FreeComplex free_resolution(const PresentedModule& l, int cap) {
  if (cap < 1) throw ValidationError("resolution cap must be positive");
  const RingPtr& ring = l.ring();
  PresentedModule pruned = prune_presentation(l);
  if (pruned.ambient().rank == 0) return FreeComplex::zero(ring);

  std::vector<FreeModuleSpec> terms{pruned.ambient()};
  std::vector<GradedMap> diffs;

  FreeModuleSpec cur_ambient = pruned.ambient();
  std::vector<ModVector> cur = minimal_generators(pruned.relations(), cur_ambient, ring);
  int steps = 0;
  while (!cur.empty()) {
    ++steps;
    if (steps > cap) throw CapExceeded("resolution did not terminate within cap " + std::to_string(cap));
    FreeModuleSpec next;
    next.rank = static_cast<int>(cur.size());
    for (const auto& g : cur) next.twists.push_back(g.degree(cur_ambient));
    GradedMap d = GradedMap::zero(ring, next, cur_ambient);
    for (int j = 0; j < next.rank; ++j)
      for (int i = 0; i < cur_ambient.rank; ++i)
        d.at(i, j) = cur[static_cast<std::size_t>(j)].comps[static_cast<std::size_t>(i)];
    terms.insert(terms.begin(), next);
    diffs.insert(diffs.begin(), std::move(d));

    std::vector<ModVector> syz = syzygy_basis(cur, cur_ambient, ring);
    cur_ambient = next;
    cur = minimal_generators(std::move(syz), cur_ambient, ring);
  }
  int lo = -static_cast<int>(diffs.size());
  return FreeComplex(ring, lo, std::move(terms), std::move(diffs));
}

}  // namespace hilbtor
