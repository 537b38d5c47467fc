#pragma once

#include <cstdint>

#include "hilbtor/errors.hpp"

namespace hilbtor {

// Prime field F_p. Scalars are canonical representatives in [0, p).
struct FieldSpec {
  std::uint32_t p = 32003;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint32_t fp_reduce(std::uint64_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(a % p);
}

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

// Inverse by Fermat; nonzero input required.
inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw Error("division by zero in F_p");
  return fp_pow(a, p - 2, p);
}

}  // namespace hilbtor
