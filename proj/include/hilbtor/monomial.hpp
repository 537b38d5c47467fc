#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "hilbtor/errors.hpp"

namespace hilbtor {

// Dense exponent tuple; the variable count is small for everything we handle.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint16_t exp(std::size_t i) const { return e_[i]; }
  std::uint16_t& exp(std::size_t i) { return e_[i]; }
  const std::vector<std::uint16_t>& exps() const { return e_; }

  int total_degree() const {
    int d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    check_arity(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    check_arity(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Quotient o / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& o) const {
    check_arity(o);
    Monomial r(o);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
  }

  Monomial lcm_with(const Monomial& o) const {
    check_arity(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    check_arity(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  void check_arity(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw ArityMismatch();
  }
  std::vector<std::uint16_t> e_;
};

// Graded reverse lexicographic order. Returns -1, 0, +1 for a < b, a == b,
// a > b. Higher total degree wins; on ties the monomial with the smaller
// exponent in the last differing variable is larger.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw ArityMismatch();
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  }
  return 0;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) < 0; }
};

}  // namespace hilbtor
