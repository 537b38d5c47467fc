#include "hilbtor/presented.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace hilbtor {

PresentedModule::PresentedModule(RingPtr ring, FreeModuleSpec ambient,
                                 std::vector<ModVector> relations)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), relations_(std::move(relations)) {
  validate_spec(ambient_);
  for (const auto& r : relations_) {
    if (r.rank() != ambient_.rank) throw AmbientMismatch();
    if (!r.is_homogeneous(ambient_)) throw InhomogeneousInput("relations must be homogeneous");
  }
  gb_ = std::make_shared<const GroebnerBasis>(buchberger(relations_, ambient_, ring_));
}

PresentedModule PresentedModule::free_module(const RingPtr& ring, FreeModuleSpec ambient) {
  return PresentedModule(ring, std::move(ambient), {});
}

PresentedModule PresentedModule::ring_itself(const RingPtr& ring) {
  return free_module(ring, FreeModuleSpec::free_rank(1));
}

PresentedModule PresentedModule::quotient_ring(const RingPtr& ring,
                                               const std::vector<Polynomial>& gens) {
  std::vector<ModVector> rels;
  rels.reserve(gens.size());
  for (const auto& f : gens) rels.push_back(to_modvector(f));
  return PresentedModule(ring, FreeModuleSpec::free_rank(1), std::move(rels));
}

namespace {

// Lead monomials of the relation basis landing in each position.
std::vector<std::vector<Monomial>> initial_ideals(const PresentedModule& m) {
  std::vector<std::vector<Monomial>> by_pos(static_cast<std::size_t>(m.ambient().rank));
  for (const auto& lt : m.gb().leads) by_pos[static_cast<std::size_t>(lt.pos)].push_back(lt.mon);
  return by_pos;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

// Largest independent variable set modulo a monomial ideal; -1 when even the
// empty set fails (a unit generator).
int monomial_ideal_dim(const std::vector<Monomial>& gens, int nvars) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    bool ok = true;
    for (const auto& g : gens) {
      bool supported_inside = true;
      for (int i = 0; i < nvars; ++i)
        if (g.exp(static_cast<std::size_t>(i)) && !(mask & (1u << i))) {
          supported_inside = false;
          break;
        }
      if (supported_inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

void enumerate_monomials_rec(int nvars, int var, int remaining, Monomial& cur,
                             const std::function<void(const Monomial&)>& fn) {
  if (var == nvars - 1) {
    cur.exp(static_cast<std::size_t>(var)) = static_cast<std::uint16_t>(remaining);
    fn(cur);
    cur.exp(static_cast<std::size_t>(var)) = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.exp(static_cast<std::size_t>(var)) = static_cast<std::uint16_t>(e);
    enumerate_monomials_rec(nvars, var + 1, remaining - e, cur, fn);
  }
  cur.exp(static_cast<std::size_t>(var)) = 0;
}

void enumerate_monomials(int nvars, int degree, const std::function<void(const Monomial&)>& fn) {
  if (degree < 0) return;
  Monomial cur(static_cast<std::size_t>(nvars));
  enumerate_monomials_rec(nvars, 0, degree, cur, fn);
}

}  // namespace

int krull_dim(const PresentedModule& m) {
  const int d = static_cast<int>(m.ring()->num_vars());
  auto by_pos = initial_ideals(m);
  int dim = -1;
  for (const auto& gens : by_pos) dim = std::max(dim, monomial_ideal_dim(gens, d));
  return dim;
}

bool is_zero_module(const PresentedModule& m) { return krull_dim(m) == -1; }

std::vector<std::pair<Monomial, int>> standard_monomials(const PresentedModule& m) {
  if (krull_dim(m) > 0) throw InfiniteLength();
  const int d = static_cast<int>(m.ring()->num_vars());
  auto by_pos = initial_ideals(m);

  std::set<std::pair<std::vector<std::uint16_t>, int>> seen;
  std::vector<std::pair<Monomial, int>> out;
  std::deque<std::pair<Monomial, int>> queue;
  for (int j = 0; j < m.ambient().rank; ++j) {
    Monomial one(static_cast<std::size_t>(d));
    if (divisible_by_any(one, by_pos[static_cast<std::size_t>(j)])) continue;
    queue.emplace_back(one, j);
    seen.insert({one.exps(), j});
  }
  while (!queue.empty()) {
    auto [mon, pos] = queue.front();
    queue.pop_front();
    out.emplace_back(mon, pos);
    for (int i = 0; i < d; ++i) {
      Monomial next = mon;
      next.exp(static_cast<std::size_t>(i))++;
      auto key = std::make_pair(next.exps(), pos);
      if (seen.count(key)) continue;
      if (divisible_by_any(next, by_pos[static_cast<std::size_t>(pos)])) continue;
      seen.insert(key);
      queue.emplace_back(std::move(next), pos);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int c = grevlex_compare(a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  });
  return out;
}

std::int64_t length_of_quotient(const PresentedModule& m) {
  return static_cast<std::int64_t>(standard_monomials(m).size());
}

std::int64_t hilbert_function(const PresentedModule& m, int degree) {
  const int d = static_cast<int>(m.ring()->num_vars());
  auto by_pos = initial_ideals(m);
  std::int64_t count = 0;
  for (int j = 0; j < m.ambient().rank; ++j) {
    int mondeg = degree - m.ambient().twists[static_cast<std::size_t>(j)];
    if (mondeg < 0) continue;
    enumerate_monomials(d, mondeg, [&](const Monomial& mon) {
      if (!divisible_by_any(mon, by_pos[static_cast<std::size_t>(j)])) ++count;
    });
  }
  return count;
}

PresentedModule tensor_modules(const PresentedModule& a, const PresentedModule& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  const RingPtr& ring = a.ring();
  const int ra = a.ambient().rank, rb = b.ambient().rank;
  FreeModuleSpec amb;
  amb.rank = ra * rb;
  amb.twists.reserve(static_cast<std::size_t>(amb.rank));
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j)
      amb.twists.push_back(a.ambient().twists[static_cast<std::size_t>(i)] +
                           b.ambient().twists[static_cast<std::size_t>(j)]);
  std::vector<ModVector> rels;
  for (const auto& rho : a.relations()) {
    for (int j = 0; j < rb; ++j) {
      ModVector v = ModVector::zero(ring, amb.rank);
      for (int i = 0; i < ra; ++i) v.comps[static_cast<std::size_t>(i * rb + j)] = rho.comps[static_cast<std::size_t>(i)];
      rels.push_back(std::move(v));
    }
  }
  for (const auto& sig : b.relations()) {
    for (int i = 0; i < ra; ++i) {
      ModVector v = ModVector::zero(ring, amb.rank);
      for (int j = 0; j < rb; ++j) v.comps[static_cast<std::size_t>(i * rb + j)] = sig.comps[static_cast<std::size_t>(j)];
      rels.push_back(std::move(v));
    }
  }
  return PresentedModule(ring, std::move(amb), std::move(rels));
}

PresentedModule quotient_mod_power(const PresentedModule& m,
                                   const std::vector<Polynomial>& ideal_gens, int n) {
  std::vector<Polynomial> power = ideal_power(ideal_gens, n, m.ring());
  std::vector<ModVector> rels = m.relations();
  for (int j = 0; j < m.ambient().rank; ++j) {
    for (const auto& f : power) {
      ModVector v = ModVector::zero(m.ring(), m.ambient().rank);
      v.comps[static_cast<std::size_t>(j)] = f;
      rels.push_back(std::move(v));
    }
  }
  return PresentedModule(m.ring(), m.ambient(), std::move(rels));
}

PresentedModule prune_presentation(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  const std::uint32_t p = ring->field.p;
  std::vector<ModVector> rels = m.relations();
  std::vector<int> twists = m.ambient().twists;

  while (true) {
    int ri = -1, pj = -1;
    for (std::size_t r = 0; r < rels.size() && ri < 0; ++r)
      for (std::size_t j = 0; j < rels[r].comps.size(); ++j) {
        const Polynomial& e = rels[r].comps[j];
        if (!e.is_zero() && e.degree() == 0) {
          ri = static_cast<int>(r);
          pj = static_cast<int>(j);
          break;
        }
      }
    if (ri < 0) break;

    ModVector pivot = rels[static_cast<std::size_t>(ri)];
    std::uint32_t cinv = fp_inv(pivot.comps[static_cast<std::size_t>(pj)].leading().coeff, p);
    std::vector<ModVector> next;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (static_cast<int>(r) == ri) continue;
      ModVector w = rels[r];
      const Polynomial& q = w.comps[static_cast<std::size_t>(pj)];
      if (!q.is_zero()) w = w.sub(pivot.mul_poly(q.scale(cinv)));
      w.comps.erase(w.comps.begin() + pj);
      if (!w.is_zero()) next.push_back(std::move(w));
    }
    rels = std::move(next);
    twists.erase(twists.begin() + pj);
  }

  FreeModuleSpec amb{static_cast<int>(twists.size()), twists};
  return PresentedModule(ring, std::move(amb), std::move(rels));
}

}  // namespace hilbtor
