#pragma once

#include <cstdint>
#include <vector>

#include "hilbtor/field.hpp"

namespace hilbtor {

// Dense row-major matrix over F_p.
struct FpMatrix {
  int rows = 0, cols = 0;
  std::uint32_t p = 32003;
  std::vector<std::uint32_t> a;

  FpMatrix() = default;
  FpMatrix(int r, int c, std::uint32_t prime)
      : rows(r), cols(c), p(prime), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::uint32_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::uint32_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::uint32_t* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const std::uint32_t* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
};

// Row-echelon rank. The serial variant is the reference implementation; the
// parallel one distributes row eliminations across OpenMP threads and returns
// bit-identical results.
int rank_serial(FpMatrix m);
int rank_parallel(FpMatrix m);
int rank_of(FpMatrix m);  // picks a variant based on size

std::int64_t kernel_dim(const FpMatrix& m);

// Vertical stack [top; bottom]; column counts must agree.
FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);

}  // namespace hilbtor
