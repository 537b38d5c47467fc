#pragma once

#include <climits>
#include <vector>

#include "hilbtor/polynomial.hpp"

namespace hilbtor {

// Graded free module; generator e_j has internal degree twists[j].
struct FreeModuleSpec {
  int rank = 0;
  std::vector<int> twists;

  FreeModuleSpec() = default;
  FreeModuleSpec(int r, std::vector<int> tw) : rank(r), twists(std::move(tw)) {}
  static FreeModuleSpec zero() { return FreeModuleSpec{}; }
  static FreeModuleSpec free_rank(int r, int twist = 0) {
    return FreeModuleSpec{r, std::vector<int>(static_cast<std::size_t>(r), twist)};
  }
  bool operator==(const FreeModuleSpec& o) const { return rank == o.rank && twists == o.twists; }
};

inline void validate_spec(const FreeModuleSpec& s) {
  if (s.rank < 0 || s.twists.size() != static_cast<std::size_t>(s.rank))
    throw ValidationError("twists length must equal rank");
}

// Element of a free module: one polynomial per position.
struct ModVector {
  std::vector<Polynomial> comps;

  static ModVector zero(const RingPtr& ring, int rank) {
    ModVector v;
    v.comps.assign(static_cast<std::size_t>(rank), Polynomial(ring));
    return v;
  }
  int rank() const { return static_cast<int>(comps.size()); }
  bool is_zero() const {
    for (const auto& f : comps)
      if (!f.is_zero()) return false;
    return true;
  }

  ModVector add(const ModVector& o) const {
    ModVector r(*this);
    for (std::size_t i = 0; i < comps.size(); ++i) r.comps[i] = r.comps[i].add(o.comps[i]);
    return r;
  }
  ModVector sub(const ModVector& o) const {
    ModVector r(*this);
    for (std::size_t i = 0; i < comps.size(); ++i) r.comps[i] = r.comps[i].sub(o.comps[i]);
    return r;
  }
  ModVector scale(std::uint32_t c) const {
    ModVector r(*this);
    for (auto& f : r.comps) f = f.scale(c);
    return r;
  }
  ModVector mul_term(std::uint32_t c, const Monomial& m) const {
    ModVector r(*this);
    for (auto& f : r.comps) f = f.mul_term(c, m);
    return r;
  }
  ModVector mul_poly(const Polynomial& g) const {
    ModVector r(*this);
    for (auto& f : r.comps) f = f.mul(g);
    return r;
  }

  // Internal degree with respect to the ambient twists; -1 for zero.
  int degree(const FreeModuleSpec& amb) const {
    int d = -1;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (comps[j].is_zero()) continue;
      int dj = comps[j].degree() + amb.twists[j];
      if (d == -1) d = dj;
      else if (dj > d) d = dj;
    }
    return d;
  }

  bool is_homogeneous(const FreeModuleSpec& amb) const {
    int d = -1;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const auto& f = comps[j];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous()) return false;
      int dj = f.degree() + amb.twists[j];
      if (d == -1) d = dj;
      else if (dj != d) return false;
    }
    return true;
  }
};

struct ModTerm {
  std::uint32_t coeff = 0;
  Monomial mon;
  int pos = -1;  // -1 marks "no term" (zero vector)
};

// Term-over-position refinement of grevlex; position ties break to the lower
// index. An optional split makes positions below it an elimination block that
// dominates everything else (used for syzygy and lift computations).
struct ModOrder {
  int split = INT_MAX;

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& ma, int pa, const Monomial& mb, int pb) const {
    int blka = pa < split ? 0 : 1;
    int blkb = pb < split ? 0 : 1;
    if (blka != blkb) return blka < blkb ? 1 : -1;
    int c = grevlex_compare(ma, mb);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const {
    if (a.pos < 0 || b.pos < 0) throw Error("comparing empty module terms");
    return compare(a.mon, a.pos, b.mon, b.pos);
  }
};

// Largest term of v under the order; pos = -1 when v = 0.
inline ModTerm lead_term(const ModVector& v, const ModOrder& ord) {
  ModTerm best;
  for (int j = 0; j < v.rank(); ++j) {
    const auto& f = v.comps[static_cast<std::size_t>(j)];
    if (f.is_zero()) continue;
    const Term& t = f.leading();
    if (best.pos < 0 || ord.compare(t.mon, j, best.mon, best.pos) > 0)
      best = ModTerm{t.coeff, t.mon, j};
  }
  return best;
}

}  // namespace hilbtor
