#include "hilbtor/fp_matrix.hpp"

#include <algorithm>

#include "hilbtor/errors.hpp"

namespace hilbtor {

namespace {

template <bool Parallel>
int rank_impl(FpMatrix& m) {
  const std::uint32_t p = m.p;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    const std::uint32_t inv = fp_inv(m.at(r, c), p);
    const std::uint32_t* rp = m.row(r);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && (m.rows - r) > 64)
#endif
    for (int i = r + 1; i < m.rows; ++i) {
      std::uint32_t head = m.at(i, c);
      if (head == 0) continue;
      std::uint64_t f = fp_mul(head, inv, p);
      std::uint32_t* ri = m.row(i);
      for (int j = c; j < m.cols; ++j) {
        std::uint32_t sub = static_cast<std::uint32_t>(f * rp[j] % p);
        ri[j] = ri[j] >= sub ? ri[j] - sub : ri[j] + p - sub;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank_serial(FpMatrix m) { return rank_impl<false>(m); }

int rank_parallel(FpMatrix m) { return rank_impl<true>(m); }

int rank_of(FpMatrix m) {
  if (static_cast<std::int64_t>(m.rows) * m.cols >= 65536) return rank_impl<true>(m);
  return rank_impl<false>(m);
}

std::int64_t kernel_dim(const FpMatrix& m) { return m.cols - rank_of(m); }

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.cols != bottom.cols || top.p != bottom.p) throw Error("vstack shape mismatch");
  FpMatrix r(top.rows + bottom.rows, top.cols, top.p);
  std::copy(top.a.begin(), top.a.end(), r.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(), r.a.begin() + static_cast<std::ptrdiff_t>(top.a.size()));
  return r;
}

}  // namespace hilbtor
