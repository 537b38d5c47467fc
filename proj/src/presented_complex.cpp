#include "hilbtor/presented_complex.hpp"

#include <algorithm>

namespace hilbtor {

PresentedComplex tensor_complex_module(const FreeComplex& x, const PresentedModule& m) {
  if (!same_ring(x.ring(), m.ring())) throw RingMismatch();
  const RingPtr& ring = x.ring();
  PresentedComplex out;
  out.ring = ring;
  out.lo = x.lo();
  if (x.empty_range() || m.ambient().rank == 0) {
    out.terms.clear();
    out.lo = 0;
    return out;
  }
  const int q = m.ambient().rank;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    FreeModuleSpec xt = x.term(i);
    FreeModuleSpec amb;
    amb.rank = xt.rank * q;
    for (int a = 0; a < xt.rank; ++a)
      for (int b = 0; b < q; ++b)
        amb.twists.push_back(xt.twists[static_cast<std::size_t>(a)] +
                             m.ambient().twists[static_cast<std::size_t>(b)]);
    std::vector<ModVector> rels;
    for (int a = 0; a < xt.rank; ++a)
      for (const auto& rho : m.relations()) {
        ModVector v = ModVector::zero(ring, amb.rank);
        for (int b = 0; b < q; ++b) v.comps[static_cast<std::size_t>(a * q + b)] = rho.comps[static_cast<std::size_t>(b)];
        rels.push_back(std::move(v));
      }
    out.terms.emplace_back(ring, std::move(amb), std::move(rels));
  }
  for (int i = x.lo(); i < x.hi(); ++i) {
    GradedMap d = x.diff(i);
    GradedMap big = GradedMap::zero(ring, out.terms[static_cast<std::size_t>(i - x.lo())].ambient(),
                                    out.terms[static_cast<std::size_t>(i - x.lo() + 1)].ambient());
    for (int r = 0; r < d.target.rank; ++r)
      for (int c = 0; c < d.source.rank; ++c) {
        const Polynomial& e = d.at(r, c);
        if (e.is_zero()) continue;
        for (int b = 0; b < q; ++b) big.at(r * q + b, c * q + b) = e;
      }
    out.maps.push_back(std::move(big));
  }
  return out;
}

namespace {

PresentedModule zero_module_of(const RingPtr& ring) {
  return PresentedModule(ring, FreeModuleSpec::zero(), {});
}

}  // namespace

PresentedModule homology(const PresentedComplex& c, int i) {
  const RingPtr& ring = c.ring;
  if (!c.in_range(i)) return zero_module_of(ring);
  const PresentedModule& ti = c.terms[static_cast<std::size_t>(i - c.lo)];
  const FreeModuleSpec& fi = ti.ambient();
  if (fi.rank == 0) return zero_module_of(ring);

  // Generators of the kernel of the induced map into term i+1 (preimage of
  // the relation submodule there).
  std::vector<ModVector> kernel_gens;
  bool has_out = i < c.hi();
  if (!has_out) {
    for (int j = 0; j < fi.rank; ++j) {
      ModVector e = ModVector::zero(ring, fi.rank);
      e.comps[static_cast<std::size_t>(j)] = Polynomial::constant(ring, 1);
      kernel_gens.push_back(std::move(e));
    }
  } else {
    const GradedMap& d = c.maps[static_cast<std::size_t>(i - c.lo)];
    const PresentedModule& tnext = c.terms[static_cast<std::size_t>(i - c.lo + 1)];
    std::vector<ModVector> cols;
    for (int j = 0; j < fi.rank; ++j) cols.push_back(d.column(j));
    std::size_t ncols = cols.size();
    for (const auto& rho : tnext.relations()) cols.push_back(rho);
    FreeModuleSpec target_amb = tnext.ambient();
    std::vector<ModVector> syz = syzygy_basis(cols, target_amb, ring);
    for (const auto& s : syz) {
      ModVector v;
      v.comps.assign(s.comps.begin(), s.comps.begin() + static_cast<std::ptrdiff_t>(ncols));
      if (!v.is_zero()) kernel_gens.push_back(std::move(v));
    }
    if (kernel_gens.empty()) return zero_module_of(ring);
  }

  // Boundaries: image of the incoming map plus the relations of this term.
  std::vector<ModVector> boundary;
  if (i > c.lo) {
    const GradedMap& din = c.maps[static_cast<std::size_t>(i - 1 - c.lo)];
    for (int j = 0; j < din.source.rank; ++j) {
      ModVector col = din.column(j);
      if (!col.is_zero()) boundary.push_back(std::move(col));
    }
  }
  for (const auto& rho : ti.relations())
    if (!rho.is_zero()) boundary.push_back(rho);

  SubmoduleOps ops(kernel_gens, fi, ring);
  FreeModuleSpec hamb = ops.syzygy_ambient();
  std::vector<ModVector> rels = ops.syzygies();
  for (const auto& b : boundary) {
    auto w = ops.lift(b);
    if (!w) throw Error("homology: boundary not inside the kernel (engine bug)");
    rels.push_back(std::move(*w));
  }
  return PresentedModule(ring, std::move(hamb), std::move(rels));
}

PresentedModule homology_free(const FreeComplex& x, int i) {
  return homology(tensor_complex_module(x, PresentedModule::ring_itself(x.ring())), i);
}

int dim_total_homology(const FreeComplex& x, const PresentedModule& m) {
  PresentedComplex c = tensor_complex_module(x, m);
  int dim = -1;
  for (int i = x.lo(); i <= x.hi(); ++i) dim = std::max(dim, krull_dim(homology(c, i)));
  return dim;
}

bool in_Kbf(const FreeComplex& x) {
  PresentedComplex c = tensor_complex_module(x, PresentedModule::ring_itself(x.ring()));
  for (int i = x.lo(); i <= x.hi(); ++i)
    if (krull_dim(homology(c, i)) > 0) return false;
  return true;
}

bool is_zero_object(const FreeComplex& x) {
  PresentedComplex c = tensor_complex_module(x, PresentedModule::ring_itself(x.ring()));
  for (int i = x.lo(); i <= x.hi(); ++i)
    if (krull_dim(homology(c, i)) != -1) return false;
  return true;
}

}  // namespace hilbtor
