#include "hilbtor/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hilbtor {

GradedMap GradedMap::zero(const RingPtr& ring, FreeModuleSpec src, FreeModuleSpec tgt) {
  GradedMap m;
  m.ring = ring;
  m.source = std::move(src);
  m.target = std::move(tgt);
  m.entries.assign(static_cast<std::size_t>(m.source.rank) * static_cast<std::size_t>(m.target.rank),
                   Polynomial(ring));
  return m;
}

bool GradedMap::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

ModVector GradedMap::column(int j) const {
  ModVector v = ModVector::zero(ring, target.rank);
  for (int i = 0; i < target.rank; ++i) v.comps[static_cast<std::size_t>(i)] = at(i, j);
  return v;
}

ModVector GradedMap::apply(const ModVector& v) const {
  if (v.rank() != source.rank) throw AmbientMismatch();
  ModVector r = ModVector::zero(ring, target.rank);
  for (int i = 0; i < target.rank; ++i) {
    Polynomial acc(ring);
    for (int j = 0; j < source.rank; ++j) {
      const Polynomial& e = at(i, j);
      if (e.is_zero() || v.comps[static_cast<std::size_t>(j)].is_zero()) continue;
      acc = acc.add(e.mul(v.comps[static_cast<std::size_t>(j)]));
    }
    r.comps[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return r;
}

GradedMap GradedMap::compose_after(const GradedMap& first) const {
  if (!(first.target == source)) throw AmbientMismatch("composition shape mismatch");
  GradedMap r = GradedMap::zero(ring, first.source, target);
  for (int i = 0; i < target.rank; ++i)
    for (int j = 0; j < first.source.rank; ++j) {
      Polynomial acc(ring);
      for (int k = 0; k < source.rank; ++k) {
        const Polynomial& a = at(i, k);
        const Polynomial& b = first.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc.add(a.mul(b));
      }
      r.at(i, j) = std::move(acc);
    }
  return r;
}

GradedMap GradedMap::scaled(std::uint32_t c) const {
  GradedMap r(*this);
  for (auto& e : r.entries) e = e.scale(c);
  return r;
}

void GradedMap::validate() const {
  validate_spec(source);
  validate_spec(target);
  if (entries.size() != static_cast<std::size_t>(source.rank) * static_cast<std::size_t>(target.rank))
    throw ValidationError("graded map entry count mismatch");
  for (int i = 0; i < target.rank; ++i)
    for (int j = 0; j < source.rank; ++j) {
      const Polynomial& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() ||
          e.degree() != source.twists[static_cast<std::size_t>(j)] - target.twists[static_cast<std::size_t>(i)])
        throw ValidationError("graded map entry has wrong degree");
    }
}

FreeComplex::FreeComplex(RingPtr ring, int lo, std::vector<FreeModuleSpec> terms,
                         std::vector<GradedMap> diffs)
    : ring_(std::move(ring)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
  if (terms_.empty()) {
    if (!diffs_.empty()) throw ValidationError("differentials without terms");
    lo_ = 0;
    return;
  }
  if (diffs_.size() + 1 != terms_.size())
    throw ValidationError("complex needs one differential per adjacent pair");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (!(diffs_[k].source == terms_[k]) || !(diffs_[k].target == terms_[k + 1]))
      throw ValidationError("differential endpoints disagree with terms");
    diffs_[k].validate();
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!diffs_[k + 1].compose_after(diffs_[k]).is_zero())
      throw ValidationError("d o d != 0");
}

FreeComplex FreeComplex::zero(const RingPtr& ring) { return FreeComplex(ring, 0, {}, {}); }

FreeModuleSpec FreeComplex::term(int i) const {
  if (terms_.empty() || i < lo() || i > hi()) return FreeModuleSpec::zero();
  return terms_[static_cast<std::size_t>(i - lo_)];
}

GradedMap FreeComplex::diff(int i) const {
  if (!terms_.empty() && i >= lo() && i < hi()) return diffs_[static_cast<std::size_t>(i - lo_)];
  return GradedMap::zero(ring_, term(i), term(i + 1));
}

int FreeComplex::total_rank() const {
  int r = 0;
  for (const auto& t : terms_) r += t.rank;
  return r;
}

namespace {

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Shared scaffold for Koszul and Taylor complexes: basis e_S indexed by
// subsets, twist(S) and the coefficient of e_{S \ j} in d(e_S) supplied by
// the caller.
FreeComplex subset_complex(const RingPtr& ring, int c,
                           const std::function<int(const std::vector<int>&)>& twist_of,
                           const std::function<Polynomial(const std::vector<int>&, int)>& coeff_of) {
  std::vector<std::vector<std::vector<int>>> levels(static_cast<std::size_t>(c) + 1);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(c) + 1);
  for (int k = 0; k <= c; ++k) {
    subsets_of_size(c, k, levels[static_cast<std::size_t>(k)]);
    for (std::size_t idx = 0; idx < levels[static_cast<std::size_t>(k)].size(); ++idx)
      index[static_cast<std::size_t>(k)][levels[static_cast<std::size_t>(k)][idx]] = static_cast<int>(idx);
  }

  std::vector<FreeModuleSpec> terms;
  for (int k = c; k >= 0; --k) {
    FreeModuleSpec t;
    t.rank = static_cast<int>(levels[static_cast<std::size_t>(k)].size());
    for (const auto& s : levels[static_cast<std::size_t>(k)]) t.twists.push_back(twist_of(s));
    terms.push_back(std::move(t));
  }

  std::vector<GradedMap> diffs;
  for (int k = c; k >= 1; --k) {
    // d^{-k} : level k -> level k-1
    GradedMap d = GradedMap::zero(ring, terms[static_cast<std::size_t>(c - k)],
                                  terms[static_cast<std::size_t>(c - k + 1)]);
    const auto& srcs = levels[static_cast<std::size_t>(k)];
    for (std::size_t col = 0; col < srcs.size(); ++col) {
      const auto& s = srcs[col];
      for (std::size_t t = 0; t < s.size(); ++t) {
        std::vector<int> sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
        int row = index[static_cast<std::size_t>(k - 1)][sub];
        Polynomial entry = coeff_of(s, static_cast<int>(t));
        if (t % 2 == 1) entry = entry.neg();
        d.at(row, static_cast<int>(col)) = d.at(row, static_cast<int>(col)).add(entry);
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, -c, std::move(terms), std::move(diffs));
}

}  // namespace

FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& elems) {
  if (elems.empty()) throw ValidationError("koszul needs at least one element");
  for (const auto& f : elems) {
    if (f.is_zero()) throw ZeroElement("koszul element is zero");
    if (!f.is_homogeneous()) throw InhomogeneousElement("koszul element not homogeneous");
    if (!same_ring(f.ring(), ring)) throw RingMismatch();
  }
  int c = static_cast<int>(elems.size());
  auto twist_of = [&](const std::vector<int>& s) {
    int d = 0;
    for (int i : s) d += elems[static_cast<std::size_t>(i)].degree();
    return d;
  };
  auto coeff_of = [&](const std::vector<int>& s, int t) {
    return elems[static_cast<std::size_t>(s[static_cast<std::size_t>(t)])];
  };
  return subset_complex(ring, c, twist_of, coeff_of);
}

FreeComplex taylor_complex(const RingPtr& ring, const std::vector<Polynomial>& monomial_gens) {
  if (monomial_gens.empty()) throw ValidationError("taylor needs at least one generator");
  std::vector<Monomial> mons;
  for (const auto& f : monomial_gens) {
    if (f.is_zero() || f.num_terms() != 1) throw ValidationError("taylor generators must be monomials");
    if (!same_ring(f.ring(), ring)) throw RingMismatch();
    mons.push_back(f.leading().mon);
  }
  int c = static_cast<int>(mons.size());
  auto lcm_of = [&](const std::vector<int>& s) {
    Monomial l(ring->num_vars());
    for (int i : s) l = l.lcm_with(mons[static_cast<std::size_t>(i)]);
    return l;
  };
  auto twist_of = [&](const std::vector<int>& s) { return lcm_of(s).total_degree(); };
  auto coeff_of = [&](const std::vector<int>& s, int t) {
    std::vector<int> sub = s;
    sub.erase(sub.begin() + t);
    Monomial q = lcm_of(sub).quotient_of(lcm_of(s));
    return Polynomial::monomial_term(ring, 1, q);
  };
  return subset_complex(ring, c, twist_of, coeff_of);
}

FreeComplex shift(const FreeComplex& x, int k) {
  if (x.empty_range()) return x;
  std::vector<FreeModuleSpec> terms;
  std::vector<GradedMap> diffs;
  for (int i = x.lo(); i <= x.hi(); ++i) terms.push_back(x.term(i));
  bool flip = ((k % 2) + 2) % 2 == 1;
  for (int i = x.lo(); i < x.hi(); ++i) {
    GradedMap d = x.diff(i);
    if (flip) d = d.scaled(x.ring()->field.p - 1);
    diffs.push_back(std::move(d));
  }
  return FreeComplex(x.ring(), x.lo() - k, std::move(terms), std::move(diffs));
}

FreeComplex direct_sum(const FreeComplex& x, const FreeComplex& y) {
  if (!same_ring(x.ring(), y.ring())) throw RingMismatch();
  if (x.empty_range()) return y;
  if (y.empty_range()) return x;
  int lo = std::min(x.lo(), y.lo());
  int hi = std::max(x.hi(), y.hi());
  std::vector<FreeModuleSpec> terms;
  for (int i = lo; i <= hi; ++i) {
    FreeModuleSpec xt = x.term(i), yt = y.term(i);
    FreeModuleSpec t;
    t.rank = xt.rank + yt.rank;
    t.twists = xt.twists;
    t.twists.insert(t.twists.end(), yt.twists.begin(), yt.twists.end());
    terms.push_back(std::move(t));
  }
  std::vector<GradedMap> diffs;
  for (int i = lo; i < hi; ++i) {
    GradedMap dx = x.diff(i), dy = y.diff(i);
    GradedMap d = GradedMap::zero(x.ring(), terms[static_cast<std::size_t>(i - lo)],
                                  terms[static_cast<std::size_t>(i - lo + 1)]);
    for (int r = 0; r < dx.target.rank; ++r)
      for (int c = 0; c < dx.source.rank; ++c) d.at(r, c) = dx.at(r, c);
    for (int r = 0; r < dy.target.rank; ++r)
      for (int c = 0; c < dy.source.rank; ++c) d.at(dx.target.rank + r, dx.source.rank + c) = dy.at(r, c);
    diffs.push_back(std::move(d));
  }
  return FreeComplex(x.ring(), lo, std::move(terms), std::move(diffs));
}

GradedMap ChainMap::at(int i) const {
  int lo = std::min(source.lo(), target.lo());
  int k = i - lo;
  if (k >= 0 && k < static_cast<int>(comps.size())) return comps[static_cast<std::size_t>(k)];
  return GradedMap::zero(source.ring(), source.term(i), target.term(i));
}

void ChainMap::validate() const {
  if (!same_ring(source.ring(), target.ring())) throw RingMismatch();
  int lo = std::min(source.lo(), target.lo()) - 1;
  int hi = std::max(source.hi(), target.hi());
  for (int i = lo; i <= hi; ++i) {
    GradedMap left = target.diff(i).compose_after(at(i));
    GradedMap right = at(i + 1).compose_after(source.diff(i));
    if (!(left.source == right.source) || !(left.target == right.target))
      throw InvalidChainMap("component shape mismatch");
    if (!(left.entries == right.entries)) throw InvalidChainMap();
  }
}

ChainMap mult_chain_map(const FreeComplex& x, const Polynomial& f) {
  if (!f.is_homogeneous()) throw InhomogeneousElement();
  if (f.is_zero()) return zero_chain_map(x, x);
  int e = f.degree();
  std::vector<FreeModuleSpec> terms;
  std::vector<GradedMap> diffs;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    FreeModuleSpec t = x.term(i);
    for (auto& tw : t.twists) tw -= e;
    terms.push_back(std::move(t));
  }
  for (int i = x.lo(); i < x.hi(); ++i) {
    GradedMap d = x.diff(i);
    d.source = terms[static_cast<std::size_t>(i - x.lo())];
    d.target = terms[static_cast<std::size_t>(i - x.lo() + 1)];
    diffs.push_back(std::move(d));
  }
  ChainMap cm(x, FreeComplex(x.ring(), x.lo(), std::move(terms), std::move(diffs)));
  for (int i = x.lo(); i <= x.hi(); ++i) {
    GradedMap comp = GradedMap::zero(x.ring(), x.term(i), cm.target.term(i));
    for (int j = 0; j < comp.source.rank; ++j) comp.at(j, j) = f;
    cm.comps.push_back(std::move(comp));
  }
  return cm;
}

ChainMap zero_chain_map(const FreeComplex& x, const FreeComplex& y) {
  if (!same_ring(x.ring(), y.ring())) throw RingMismatch();
  ChainMap cm(x, y);
  int lo = std::min(x.lo(), y.lo());
  int hi = std::max(x.hi(), y.hi());
  for (int i = lo; i <= hi; ++i) cm.comps.push_back(GradedMap::zero(x.ring(), x.term(i), y.term(i)));
  return cm;
}

FreeComplex cone(const ChainMap& f) {
  f.validate();
  const FreeComplex& x = f.source;
  const FreeComplex& y = f.target;
  const RingPtr& ring = x.ring();
  const std::uint32_t p = ring->field.p;
  if (x.empty_range()) return y;
  if (y.empty_range()) return shift(x, 1);
  int lo = std::min(y.lo(), x.lo() - 1);
  int hi = std::max(y.hi(), x.hi() - 1);

  std::vector<FreeModuleSpec> terms;
  for (int i = lo; i <= hi; ++i) {
    FreeModuleSpec yt = y.term(i), xs = x.term(i + 1);
    FreeModuleSpec t;
    t.rank = yt.rank + xs.rank;
    t.twists = yt.twists;
    t.twists.insert(t.twists.end(), xs.twists.begin(), xs.twists.end());
    terms.push_back(std::move(t));
  }
  std::vector<GradedMap> diffs;
  for (int i = lo; i < hi; ++i) {
    GradedMap dy = y.diff(i);
    GradedMap dx = x.diff(i + 1);
    GradedMap fi = f.at(i + 1);
    GradedMap d = GradedMap::zero(ring, terms[static_cast<std::size_t>(i - lo)],
                                  terms[static_cast<std::size_t>(i - lo + 1)]);
    for (int r = 0; r < dy.target.rank; ++r)
      for (int c = 0; c < dy.source.rank; ++c) d.at(r, c) = dy.at(r, c);
    for (int r = 0; r < fi.target.rank; ++r)
      for (int c = 0; c < fi.source.rank; ++c) d.at(r, dy.source.rank + c) = fi.at(r, c);
    for (int r = 0; r < dx.target.rank; ++r)
      for (int c = 0; c < dx.source.rank; ++c)
        d.at(dy.target.rank + r, dy.source.rank + c) = dx.at(r, c).scale(p - 1);
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, lo, std::move(terms), std::move(diffs));
}

FreeComplex hom_dual(const FreeComplex& x) {
  if (x.empty_range()) return x;
  const RingPtr& ring = x.ring();
  const std::uint32_t p = ring->field.p;
  int lo = -x.hi(), hi = -x.lo();
  std::vector<FreeModuleSpec> terms;
  for (int i = lo; i <= hi; ++i) {
    FreeModuleSpec t = x.term(-i);
    for (auto& tw : t.twists) tw = -tw;
    terms.push_back(std::move(t));
  }
  std::vector<GradedMap> diffs;
  for (int i = lo; i < hi; ++i) {
    GradedMap orig = x.diff(-i - 1);  // X^{-i-1} -> X^{-i}
    GradedMap d = GradedMap::zero(ring, terms[static_cast<std::size_t>(i - lo)],
                                  terms[static_cast<std::size_t>(i - lo + 1)]);
    bool flip = (((i + 1) % 2) + 2) % 2 == 1;
    for (int r = 0; r < d.target.rank; ++r)
      for (int c = 0; c < d.source.rank; ++c) {
        Polynomial e = orig.at(c, r);
        d.at(r, c) = flip ? e.scale(p - 1) : e;
      }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, lo, std::move(terms), std::move(diffs));
}

namespace {

struct Working {
  int lo;
  std::vector<FreeModuleSpec> terms;
  std::vector<GradedMap> diffs;
};

void drop_row(GradedMap& m, int r) {
  std::vector<Polynomial> next;
  next.reserve(m.entries.size());
  for (int i = 0; i < m.target.rank; ++i) {
    if (i == r) continue;
    for (int j = 0; j < m.source.rank; ++j) next.push_back(m.at(i, j));
  }
  m.target.rank -= 1;
  m.target.twists.erase(m.target.twists.begin() + r);
  m.entries = std::move(next);
}

void drop_col(GradedMap& m, int c) {
  std::vector<Polynomial> next;
  next.reserve(m.entries.size());
  for (int i = 0; i < m.target.rank; ++i)
    for (int j = 0; j < m.source.rank; ++j) {
      if (j == c) continue;
      next.push_back(m.at(i, j));
    }
  m.source.rank -= 1;
  m.source.twists.erase(m.source.twists.begin() + c);
  m.entries = std::move(next);
}

}  // namespace

FreeComplex minimize(const FreeComplex& x) {
  const RingPtr& ring = x.ring();
  const std::uint32_t p = ring->field.p;
  if (x.empty_range()) return x;

  Working w;
  w.lo = x.lo();
  for (int i = x.lo(); i <= x.hi(); ++i) w.terms.push_back(x.term(i));
  for (int i = x.lo(); i < x.hi(); ++i) w.diffs.push_back(x.diff(i));

  while (true) {
    int k = -1, pr = -1, pc = -1;
    for (std::size_t kk = 0; kk < w.diffs.size() && k < 0; ++kk) {
      const GradedMap& d = w.diffs[kk];
      for (int r = 0; r < d.target.rank && k < 0; ++r)
        for (int c = 0; c < d.source.rank; ++c) {
          const Polynomial& e = d.at(r, c);
          if (!e.is_zero() && e.degree() == 0) {
            k = static_cast<int>(kk);
            pr = r;
            pc = c;
            break;
          }
        }
    }
    if (k < 0) break;

    GradedMap& d = w.diffs[static_cast<std::size_t>(k)];
    std::uint32_t alpha_inv = fp_inv(d.at(pr, pc).leading().coeff, p);
    // Schur complement update before dropping the pivot row/column.
    std::vector<Polynomial> pivot_row, pivot_col;
    for (int j = 0; j < d.source.rank; ++j) pivot_row.push_back(d.at(pr, j));
    for (int i = 0; i < d.target.rank; ++i) pivot_col.push_back(d.at(i, pc));
    for (int i = 0; i < d.target.rank; ++i) {
      if (i == pr || pivot_col[static_cast<std::size_t>(i)].is_zero()) continue;
      Polynomial gi = pivot_col[static_cast<std::size_t>(i)].scale(alpha_inv);
      for (int j = 0; j < d.source.rank; ++j) {
        if (j == pc || pivot_row[static_cast<std::size_t>(j)].is_zero()) continue;
        d.at(i, j) = d.at(i, j).sub(gi.mul(pivot_row[static_cast<std::size_t>(j)]));
      }
    }
    drop_row(d, pr);
    drop_col(d, pc);
    w.terms[static_cast<std::size_t>(k)].rank -= 1;
    w.terms[static_cast<std::size_t>(k)].twists.erase(w.terms[static_cast<std::size_t>(k)].twists.begin() + pc);
    w.terms[static_cast<std::size_t>(k + 1)].rank -= 1;
    w.terms[static_cast<std::size_t>(k + 1)].twists.erase(w.terms[static_cast<std::size_t>(k + 1)].twists.begin() + pr);
    if (k > 0) drop_row(w.diffs[static_cast<std::size_t>(k - 1)], pc);
    if (k + 1 < static_cast<int>(w.diffs.size())) drop_col(w.diffs[static_cast<std::size_t>(k + 1)], pr);
  }

  // Trim zero-rank ends.
  while (!w.terms.empty() && w.terms.front().rank == 0) {
    w.terms.erase(w.terms.begin());
    if (!w.diffs.empty()) w.diffs.erase(w.diffs.begin());
    ++w.lo;
  }
  while (!w.terms.empty() && w.terms.back().rank == 0) {
    w.terms.pop_back();
    if (!w.diffs.empty()) w.diffs.pop_back();
  }
  if (w.terms.empty()) return FreeComplex::zero(ring);
  return FreeComplex(ring, w.lo, std::move(w.terms), std::move(w.diffs));
}

bool has_unit_entries(const FreeComplex& x) {
  for (int i = x.lo(); i < x.hi(); ++i) {
    GradedMap d = x.diff(i);
    for (const auto& e : d.entries)
      if (!e.is_zero() && e.degree() == 0) return true;
  }
  return false;
}

}  // namespace hilbtor
