#include "oracle.hpp"

#include <functional>
#include <map>

namespace oracle {

using namespace hilbtor;

int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::uint32_t p) {
  if (m.empty()) return 0;
  const std::int64_t q = p;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  for (auto& row : m)
    for (auto& v : row) v = ((v % q) + q) % q;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pivot)]);
    std::int64_t inv = 1, base = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % q,
                 e = q - 2;
    while (e) {  // Fermat inverse
      if (e & 1) inv = inv * base % q;
      base = base * base % q;
      e >>= 1;
    }
    for (int i = r + 1; i < rows; ++i) {
      std::int64_t f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * inv % q;
      if (!f) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            ((m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
              f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % q + q) % q;
    }
    ++r;
  }
  return r;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(static_cast<std::size_t>(nvars));
  std::function<void(int, int)> rec = [&](int var, int rem) {
    if (var == nvars - 1) {
      cur.exp(static_cast<std::size_t>(var)) = static_cast<std::uint16_t>(rem);
      out.push_back(cur);
      cur.exp(static_cast<std::size_t>(var)) = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur.exp(static_cast<std::size_t>(var)) = static_cast<std::uint16_t>(e);
      rec(var + 1, rem - e);
    }
    cur.exp(static_cast<std::size_t>(var)) = 0;
  };
  rec(0, degree);
  return out;
}

namespace {

// Basis of the degree-d piece of the ambient free module, as (monomial, pos).
std::vector<std::pair<Monomial, int>> ambient_piece(const FreeModuleSpec& ambient, int nvars,
                                                    int degree) {
  std::vector<std::pair<Monomial, int>> out;
  for (int j = 0; j < ambient.rank; ++j) {
    int md = degree - ambient.twists[static_cast<std::size_t>(j)];
    for (const auto& m : monomials_of_degree(nvars, md)) out.emplace_back(m, j);
  }
  return out;
}

// Rows spanning the degree-d piece of <gens>.
std::vector<std::vector<std::int64_t>> span_rows(const std::vector<ModVector>& gens,
                                                 const FreeModuleSpec& ambient,
                                                 const RingPtr& ring, int degree) {
  const int nvars = static_cast<int>(ring->num_vars());
  auto basis = ambient_piece(ambient, nvars, degree);
  std::map<std::pair<std::vector<std::uint16_t>, int>, int> index;
  for (std::size_t k = 0; k < basis.size(); ++k)
    index[{basis[k].first.exps(), basis[k].second}] = static_cast<int>(k);

  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    int gdeg = g.degree(ambient);
    if (gdeg < 0) continue;
    for (const auto& m : monomials_of_degree(nvars, degree - gdeg)) {
      std::vector<std::int64_t> row(basis.size(), 0);
      for (int j = 0; j < g.rank(); ++j)
        for (const auto& t : g.comps[static_cast<std::size_t>(j)].terms()) {
          auto it = index.find({t.mon.times(m).exps(), j});
          if (it == index.end()) throw Error("oracle: term outside the graded piece");
          row[static_cast<std::size_t>(it->second)] += t.coeff;
        }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::int64_t submodule_piece_dim(const std::vector<ModVector>& gens, const FreeModuleSpec& ambient,
                                 const RingPtr& ring, int degree) {
  auto rows = span_rows(gens, ambient, ring, degree);
  if (rows.empty()) return 0;
  return rank_mod_p(std::move(rows), ring->field.p);
}

std::int64_t quotient_piece_dim(const std::vector<ModVector>& gens, const FreeModuleSpec& ambient,
                                const RingPtr& ring, int degree) {
  const int nvars = static_cast<int>(ring->num_vars());
  std::int64_t full = static_cast<std::int64_t>(ambient_piece(ambient, nvars, degree).size());
  return full - submodule_piece_dim(gens, ambient, ring, degree);
}

std::int64_t syzygy_piece_dim(const std::vector<ModVector>& gens, const FreeModuleSpec& ambient,
                              const RingPtr& ring, int degree) {
  // Kernel dimension of the evaluation map from (+) A(-deg g_i) in degree d.
  const int nvars = static_cast<int>(ring->num_vars());
  std::int64_t domain = 0;
  for (const auto& g : gens) {
    int gdeg = g.degree(ambient);
    if (gdeg < 0) continue;
    domain += static_cast<std::int64_t>(monomials_of_degree(nvars, degree - gdeg).size());
  }
  return domain - submodule_piece_dim(gens, ambient, ring, degree);
}

namespace {

// Monomial basis of k[x,y]/m^n with shift matrices; fully standalone.
struct TruncatedRing {
  int n;
  std::vector<std::pair<int, int>> basis;  // (a, b) with a + b < n
  std::map<std::pair<int, int>, int> index;

  explicit TruncatedRing(int n_) : n(n_) {
    for (int d = 0; d < n; ++d)
      for (int a = d; a >= 0; --a) basis.emplace_back(a, d - a);
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
  }
  int dim() const { return static_cast<int>(basis.size()); }

  std::vector<std::vector<std::int64_t>> mult(int dx, int dy) const {
    std::vector<std::vector<std::int64_t>> m(
        static_cast<std::size_t>(dim()),
        std::vector<std::int64_t>(static_cast<std::size_t>(dim()), 0));
    for (int col = 0; col < dim(); ++col) {
      auto [a, b] = basis[static_cast<std::size_t>(col)];
      auto it = index.find({a + dx, b + dy});
      if (it != index.end())
        m[static_cast<std::size_t>(it->second)][static_cast<std::size_t>(col)] = 1;
    }
    return m;
  }
};

using Mat = std::vector<std::vector<std::int64_t>>;

Mat hstack(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  return out;
}

Mat vstack2(Mat a, const Mat& b) {
  for (const auto& row : b) a.push_back(row);
  return a;
}

Mat negate(Mat a) {
  for (auto& row : a)
    for (auto& v : row) v = -v;
  return a;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat out(a[0].size(), std::vector<std::int64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

}  // namespace

std::int64_t tor_total_koszul2(int n, std::uint32_t p) {
  TruncatedRing R(n);
  const std::int64_t dim = R.dim();
  auto X = R.mult(1, 0);
  auto Y = R.mult(0, 1);
  // d1 : N^2 -> N, (f, g) -> x f + y g   and   d2 : N -> N^2, f -> (-y f, x f)
  Mat d1 = hstack(X, Y);
  Mat d2 = vstack2(negate(Y), X);
  std::int64_t r1 = rank_mod_p(d1, p);
  std::int64_t r2 = rank_mod_p(d2, p);
  std::int64_t h0 = dim - r1;
  std::int64_t h1 = 2 * dim - r1 - r2;
  std::int64_t h2 = dim - r2;
  return h0 + h1 + h2;
}

std::int64_t ext_total_koszul2(int n, std::uint32_t p) {
  TruncatedRing R(n);
  const std::int64_t dim = R.dim();
  auto X = R.mult(1, 0);
  auto Y = R.mult(0, 1);
  Mat d1 = hstack(X, Y);
  Mat d2 = vstack2(negate(Y), X);
  Mat e0 = transpose(d1);  // N -> N^2
  Mat e1 = transpose(d2);  // N^2 -> N
  std::int64_t r0 = rank_mod_p(e0, p);
  std::int64_t r1 = rank_mod_p(e1, p);
  std::int64_t h0 = dim - r0;
  std::int64_t h1 = 2 * dim - r0 - r1;
  std::int64_t h2 = dim - r1;
  return h0 + h1 + h2;
}

}  // namespace oracle
