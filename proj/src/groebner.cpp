#include "hilbtor/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace hilbtor {

namespace {

int find_reducer(const ModTerm& t, const std::vector<ModTerm>& leads) {
  for (std::size_t i = 0; i < leads.size(); ++i)
    if (leads[i].pos == t.pos && leads[i].mon.divides(t.mon)) return static_cast<int>(i);
  return -1;
}

ModVector reduce_full(ModVector h, const std::vector<ModVector>& gens,
                      const std::vector<ModTerm>& leads, const ModOrder& ord,
                      const RingPtr& ring) {
  const std::uint32_t p = ring->field.p;
  ModVector r = ModVector::zero(ring, h.rank());
  while (!h.is_zero()) {
    ModTerm lt = lead_term(h, ord);
    int gi = find_reducer(lt, leads);
    if (gi >= 0) {
      const ModTerm& gl = leads[static_cast<std::size_t>(gi)];
      std::uint32_t c = fp_mul(lt.coeff, fp_inv(gl.coeff, p), p);
      Monomial q = gl.mon.quotient_of(lt.mon);
      h = h.sub(gens[static_cast<std::size_t>(gi)].mul_term(c, q));
    } else {
      auto& rc = r.comps[static_cast<std::size_t>(lt.pos)];
      rc = rc.add(Polynomial::monomial_term(ring, lt.coeff, lt.mon));
      auto& hc = h.comps[static_cast<std::size_t>(lt.pos)];
      hc = hc.tail();
    }
  }
  return r;
}

ModVector make_monic(ModVector v, const RingPtr& ring, const ModOrder& ord) {
  ModTerm lt = lead_term(v, ord);
  if (lt.pos < 0) return v;
  return v.scale(fp_inv(lt.coeff, ring->field.p));
}

ModVector spair_of(const ModVector& a, const ModTerm& la, const ModVector& b, const ModTerm& lb) {
  Monomial lcm = la.mon.lcm_with(lb.mon);
  return a.mul_term(1, la.mon.quotient_of(lcm)).sub(b.mul_term(1, lb.mon.quotient_of(lcm)));
}

struct PairKey {
  int deg;
  int i, j;
  bool operator>(const PairKey& o) const { return std::tie(deg, i, j) > std::tie(o.deg, o.i, o.j); }
};

}  // namespace

GroebnerBasis buchberger(std::vector<ModVector> gens, FreeModuleSpec ambient, RingPtr ring,
                         ModOrder order) {
  validate_spec(ambient);
  for (const auto& g : gens) {
    if (g.rank() != ambient.rank) throw AmbientMismatch();
    for (const auto& c : g.comps)
      if (!same_ring(c.ring(), ring)) throw RingMismatch();
    if (!g.is_homogeneous(ambient)) throw InhomogeneousInput();
  }

  GroebnerBasis gb;
  gb.ring = ring;
  gb.ambient = ambient;
  gb.order = order;

  std::vector<ModVector> basis;
  std::vector<ModTerm> leads;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(make_monic(std::move(g), ring, order));
  }
  std::sort(basis.begin(), basis.end(), [&](const ModVector& a, const ModVector& b) {
    ModTerm la = lead_term(a, order), lb = lead_term(b, order);
    int da = a.degree(ambient), db = b.degree(ambient);
    if (da != db) return da < db;
    return order.compare(la, lb) < 0;
  });
  for (const auto& g : basis) leads.push_back(lead_term(g, order));

  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<PairKey>> pq;
  auto push_pairs_with = [&](int jnew) {
    const ModTerm& lj = leads[static_cast<std::size_t>(jnew)];
    for (int i = 0; i < jnew; ++i) {
      const ModTerm& li = leads[static_cast<std::size_t>(i)];
      if (li.pos != lj.pos) continue;  // no S-pair across positions
      // The product criterion is only sound for ideals (rank one).
      if (ambient.rank == 1 && li.mon.coprime_with(lj.mon)) continue;
      int deg = li.mon.lcm_with(lj.mon).total_degree() + ambient.twists[static_cast<std::size_t>(li.pos)];
      pq.push(PairKey{deg, i, jnew});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs_with(j);

  while (!pq.empty()) {
    PairKey pk = pq.top();
    pq.pop();
    ModVector s = spair_of(basis[static_cast<std::size_t>(pk.i)], leads[static_cast<std::size_t>(pk.i)],
                           basis[static_cast<std::size_t>(pk.j)], leads[static_cast<std::size_t>(pk.j)]);
    ModVector nf = reduce_full(std::move(s), basis, leads, order, ring);
    if (nf.is_zero()) continue;
    basis.push_back(make_monic(std::move(nf), ring, order));
    leads.push_back(lead_term(basis.back(), order));
    push_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop generators whose lead is divisible by another lead.
  std::vector<int> idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return order.compare(leads[static_cast<std::size_t>(a)], leads[static_cast<std::size_t>(b)]) < 0;
  });
  std::vector<ModVector> kept;
  std::vector<ModTerm> kept_leads;
  for (int i : idx) {
    const ModTerm& lt = leads[static_cast<std::size_t>(i)];
    if (find_reducer(lt, kept_leads) >= 0) continue;
    kept.push_back(basis[static_cast<std::size_t>(i)]);
    kept_leads.push_back(lt);
  }

  // Interreduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<ModVector> others;
      std::vector<ModTerm> other_leads;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j == i) continue;
        others.push_back(kept[j]);
        other_leads.push_back(kept_leads[j]);
      }
      ModVector red = reduce_full(kept[i], others, other_leads, order, ring);
      red = make_monic(std::move(red), ring, order);
      if (!(red.is_zero()) && !(kept[i].rank() == red.rank() && kept[i].comps == red.comps)) {
        kept[i] = std::move(red);
        kept_leads[i] = lead_term(kept[i], order);
        changed = true;
      }
    }
  }

  gb.gens = std::move(kept);
  gb.leads = std::move(kept_leads);
  return gb;
}

ModVector normal_form(const ModVector& v, const GroebnerBasis& gb) {
  if (v.rank() != gb.ambient.rank) throw AmbientMismatch();
  return reduce_full(v, gb.gens, gb.leads, gb.order, gb.ring);
}

bool is_member(const ModVector& v, const GroebnerBasis& gb) { return normal_form(v, gb).is_zero(); }

bool all_spairs_reduce_to_zero(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
      if (gb.leads[i].pos != gb.leads[j].pos) continue;
      ModVector s = spair_of(gb.gens[i], gb.leads[i], gb.gens[j], gb.leads[j]);
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

namespace {

struct GraphData {
  FreeModuleSpec ambient;
  std::vector<ModVector> gens;
  std::vector<int> degrees;
};

GraphData build_graph(const std::vector<ModVector>& gens, const FreeModuleSpec& ambient,
                      const RingPtr& ring) {
  GraphData g;
  int m = static_cast<int>(gens.size());
  g.ambient.rank = ambient.rank + m;
  g.ambient.twists = ambient.twists;
  for (const auto& v : gens) {
    int d = v.degree(ambient);
    g.degrees.push_back(d < 0 ? 0 : d);
    g.ambient.twists.push_back(g.degrees.back());
  }
  for (int i = 0; i < m; ++i) {
    ModVector w = ModVector::zero(ring, g.ambient.rank);
    for (int j = 0; j < ambient.rank; ++j) w.comps[static_cast<std::size_t>(j)] = gens[static_cast<std::size_t>(i)].comps[static_cast<std::size_t>(j)];
    w.comps[static_cast<std::size_t>(ambient.rank + i)] = Polynomial::constant(ring, 1);
    g.gens.push_back(std::move(w));
  }
  return g;
}

std::vector<ModVector> extract_syzygies(const GroebnerBasis& graph_gb, int split, int m,
                                        const RingPtr& ring) {
  std::vector<ModVector> out;
  for (std::size_t k = 0; k < graph_gb.gens.size(); ++k) {
    if (graph_gb.leads[k].pos < split) continue;  // lead in the dominant block => F-part nonzero
    ModVector s;
    s.comps.assign(graph_gb.gens[k].comps.begin() + split, graph_gb.gens[k].comps.end());
    (void)ring;
    if (static_cast<int>(s.comps.size()) != m) throw Error("syzygy extraction size mismatch");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<ModVector> syzygy_basis(const std::vector<ModVector>& gens,
                                    const FreeModuleSpec& ambient, const RingPtr& ring,
                                    FreeModuleSpec* syz_ambient_out) {
  SubmoduleOps ops(gens, ambient, ring);
  if (syz_ambient_out) *syz_ambient_out = ops.syzygy_ambient();
  return ops.syzygies();
}

SubmoduleOps::SubmoduleOps(std::vector<ModVector> gens, FreeModuleSpec ambient, RingPtr ring)
    : ring_(std::move(ring)), ambient_(std::move(ambient)) {
  validate_spec(ambient_);
  for (const auto& g : gens)
    if (!g.is_homogeneous(ambient_)) throw InhomogeneousInput();
  GraphData g = build_graph(gens, ambient_, ring_);
  gen_degrees_ = g.degrees;
  ModOrder ord;
  ord.split = ambient_.rank;
  graph_ = buchberger(std::move(g.gens), g.ambient, ring_, ord);
  syzygies_ = extract_syzygies(graph_, ambient_.rank, static_cast<int>(gen_degrees_.size()), ring_);
}

FreeModuleSpec SubmoduleOps::syzygy_ambient() const {
  return FreeModuleSpec{static_cast<int>(gen_degrees_.size()), gen_degrees_};
}

std::optional<ModVector> SubmoduleOps::lift(const ModVector& v) const {
  if (v.rank() != ambient_.rank) throw AmbientMismatch();
  const std::uint32_t p = ring_->field.p;
  int m = num_gens();
  ModVector h = ModVector::zero(ring_, ambient_.rank + m);
  for (int j = 0; j < ambient_.rank; ++j) h.comps[static_cast<std::size_t>(j)] = v.comps[static_cast<std::size_t>(j)];
  while (true) {
    bool fpart = false;
    for (int j = 0; j < ambient_.rank; ++j)
      if (!h.comps[static_cast<std::size_t>(j)].is_zero()) {
        fpart = true;
        break;
      }
    if (!fpart) break;
    ModTerm lt = lead_term(h, graph_.order);  // lead is in the dominant block while F-part != 0
    int gi = find_reducer(lt, graph_.leads);
    if (gi < 0) return std::nullopt;
    const ModTerm& gl = graph_.leads[static_cast<std::size_t>(gi)];
    std::uint32_t c = fp_mul(lt.coeff, fp_inv(gl.coeff, p), p);
    h = h.sub(graph_.gens[static_cast<std::size_t>(gi)].mul_term(c, gl.mon.quotient_of(lt.mon)));
  }
  ModVector coeffs;
  coeffs.comps.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    coeffs.comps.push_back(h.comps[static_cast<std::size_t>(ambient_.rank + i)].neg());
  return coeffs;
}

ModVector to_modvector(const Polynomial& f) {
  ModVector v;
  v.comps.push_back(f);
  return v;
}

Polynomial from_rank1(const ModVector& v) {
  if (v.rank() != 1) throw AmbientMismatch("expected a rank-1 vector");
  return v.comps[0];
}

GroebnerBasis ideal_groebner(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<ModVector> vs;
  vs.reserve(gens.size());
  for (const auto& f : gens) vs.push_back(to_modvector(f));
  return buchberger(std::move(vs), FreeModuleSpec::free_rank(1), ring);
}

std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, int n,
                                    const RingPtr& ring) {
  if (n < 1) throw ValidationError("ideal power needs n >= 1");
  for (const auto& f : gens)
    if (!f.is_homogeneous()) throw InhomogeneousInput("ideal generators must be homogeneous");

  auto reduced_set = [&](const std::vector<Polynomial>& v) {
    GroebnerBasis gb = ideal_groebner(v, ring);
    std::vector<Polynomial> out;
    out.reserve(gb.gens.size());
    for (const auto& g : gb.gens) out.push_back(from_rank1(g));
    return out;
  };

  std::vector<Polynomial> base = reduced_set(gens);
  std::vector<Polynomial> cur = base;
  for (int k = 2; k <= n; ++k) {
    std::set<Polynomial, PolyLess> prods;
    for (const auto& f : cur)
      for (const auto& g : base) prods.insert(f.mul(g));
    cur = reduced_set(std::vector<Polynomial>(prods.begin(), prods.end()));
  }
  return cur;
}

}  // namespace hilbtor
