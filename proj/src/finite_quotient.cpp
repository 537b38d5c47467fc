#include "hilbtor/finite_quotient.hpp"

#include <algorithm>

namespace hilbtor {

FiniteQuotient::FiniteQuotient(const PresentedModule& m, std::vector<Polynomial> ideal_gens, int n)
    : ring_(m.ring()), ideal_(std::move(ideal_gens)), n_(n), ambient_rank_(m.ambient().rank) {
  if (n < 1) throw ValidationError("power must be >= 1");
  PresentedModule q = quotient_mod_power(m, ideal_, n);
  if (krull_dim(q) > 0)
    throw NotFiniteLength("M/I^nM has positive dimension; pick an ideal primary to the module support");
  gb_ = q.gb();
  basis_ = standard_monomials(q);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    index_[{basis_[k].first.exps(), basis_[k].second}] = static_cast<int>(k);
}

const FpMatrix& FiniteQuotient::mult_matrix(const Polynomial& f) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate fill is idempotent.
  const int dim = static_cast<int>(basis_.size());
  FpMatrix mat(dim, dim, ring_->field.p);
  for (int col = 0; col < dim; ++col) {
    const auto& [mu, pos] = basis_[static_cast<std::size_t>(col)];
    ModVector v = ModVector::zero(ring_, ambient_rank_);
    v.comps[static_cast<std::size_t>(pos)] = f.mul_term(1, mu);
    ModVector nf = normal_form(v, gb_);
    for (int comp = 0; comp < nf.rank(); ++comp)
      for (const auto& t : nf.comps[static_cast<std::size_t>(comp)].terms()) {
        auto it = index_.find({t.mon.exps(), comp});
        if (it == index_.end()) throw Error("normal form left the standard basis (engine bug)");
        mat.at(it->second, col) = t.coeff;
      }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(f, std::move(mat));
  (void)inserted;
  return it->second;
}


namespace {

int parity(int i) { return ((i % 2) + 2) % 2; }

// Assembles the k-matrix of a graded map against N and collects ranks, then
// turns kernel/rank bookkeeping into homology lengths.
LengthTable lengths_from_ranks(const std::vector<std::int64_t>& dims,
                               const std::vector<std::int64_t>& ranks, int lo) {
  LengthTable t;
  t.lo = lo;
  std::int64_t euler_lhs = 0, euler_rhs = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    std::int64_t rank_out = k < ranks.size() ? ranks[k] : 0;
    std::int64_t rank_in = k > 0 ? ranks[k - 1] : 0;
    std::int64_t len = dims[k] - rank_out - rank_in;
    if (len < 0) throw Error("negative homology length (engine bug)");
    t.entries.push_back(len);
    int sign = parity(lo + static_cast<int>(k)) == 0 ? 1 : -1;
    euler_lhs += sign * len;
    euler_rhs += sign * dims[k];
  }
  if (euler_lhs != euler_rhs) throw Error("Euler characteristic mismatch (engine bug)");
  return t;
}

FpMatrix expand_map(const GradedMap& d, const FiniteQuotient& n) {
  const int dim = static_cast<int>(n.dimension());
  FpMatrix big(d.target.rank * dim, d.source.rank * dim, n.ring()->field.p);
  for (int r = 0; r < d.target.rank; ++r)
    for (int c = 0; c < d.source.rank; ++c) {
      const Polynomial& e = d.at(r, c);
      if (e.is_zero()) continue;
      const FpMatrix& blk = n.mult_matrix(e);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (blk.at(i, j)) big.at(r * dim + i, c * dim + j) = blk.at(i, j);
    }
  return big;
}

}  // namespace

LengthTable complex_homology_lengths(const FreeComplex& x, const FiniteQuotient& n) {
  if (!same_ring(x.ring(), n.ring())) throw RingMismatch();
  LengthTable empty;
  if (x.empty_range()) return empty;
  const std::int64_t dim = n.dimension();
  std::vector<std::int64_t> dims, ranks;
  for (int i = x.lo(); i <= x.hi(); ++i) dims.push_back(x.term(i).rank * dim);
  for (int i = x.lo(); i < x.hi(); ++i) {
    if (dim == 0) {
      ranks.push_back(0);
      continue;
    }
    ranks.push_back(rank_of(expand_map(x.diff(i), n)));
  }
  return lengths_from_ranks(dims, ranks, x.lo());
}

LengthTable hom_homology_lengths(const FreeComplex& x, const FiniteQuotient& n) {
  return complex_homology_lengths(hom_dual(x), n);
}

LengthTable hom_homology_lengths_direct(const FreeComplex& x, const FiniteQuotient& n) {
  if (!same_ring(x.ring(), n.ring())) throw RingMismatch();
  LengthTable empty;
  if (x.empty_range()) return empty;
  const int dim = static_cast<int>(n.dimension());
  const int lo = -x.hi(), hi = -x.lo();
  std::vector<std::int64_t> dims, ranks;
  for (int i = lo; i <= hi; ++i) dims.push_back(static_cast<std::int64_t>(x.term(-i).rank) * dim);
  for (int i = lo; i < hi; ++i) {
    // Hom(X, N)^i -> Hom(X, N)^{i+1} is precomposition with d^{-i-1}; the sign
    // does not move ranks.
    GradedMap d = x.diff(-i - 1);
    if (dim == 0) {
      ranks.push_back(0);
      continue;
    }
    FpMatrix big(d.source.rank * dim, d.target.rank * dim, n.ring()->field.p);
    for (int r = 0; r < d.target.rank; ++r)
      for (int s = 0; s < d.source.rank; ++s) {
        const Polynomial& e = d.at(s, r);
        if (e.is_zero()) continue;
        const FpMatrix& blk = n.mult_matrix(e);
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b)
            if (blk.at(a, b)) big.at(s * dim + a, r * dim + b) = blk.at(a, b);
      }
    ranks.push_back(rank_of(std::move(big)));
  }
  return lengths_from_ranks(dims, ranks, lo);
}

std::int64_t annihilator_dim(const FiniteQuotient& n, const std::vector<Polynomial>& elems) {
  const std::int64_t dim = n.dimension();
  if (elems.empty() || dim == 0) return dim;
  FpMatrix stacked(0, static_cast<int>(dim), n.ring()->field.p);
  for (const auto& f : elems) stacked = vstack(stacked, n.mult_matrix(f));
  return dim - rank_of(std::move(stacked));
}

}  // namespace hilbtor
