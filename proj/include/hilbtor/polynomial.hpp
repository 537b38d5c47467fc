#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hilbtor/monomial.hpp"
#include "hilbtor/ring.hpp"

namespace hilbtor {

struct Term {
  std::uint32_t coeff = 0;  // nonzero in canonical form
  Monomial mon;
};

// Canonical form: nonzero coefficients, strictly decreasing grevlex, no
// duplicate monomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, std::uint64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t idx, int power = 1);
  static Polynomial monomial_term(const RingPtr& ring, std::uint32_t coeff, Monomial m);
  // Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

  Polynomial add(const Polynomial& o) const;
  Polynomial sub(const Polynomial& o) const;
  Polynomial mul(const Polynomial& o) const;
  Polynomial scale(std::uint32_t c) const;
  Polynomial neg() const;
  Polynomial mul_term(std::uint32_t c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  // Drops the leading term; used by reducers.
  Polynomial tail() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatch();
  }
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Total order on canonical polynomials, for use as map keys.
struct PolyLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const;
};

// Text grammar:
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint | ident | '(' expr ')'
// Whitespace is ignored; coefficients are non-negative integers reduced mod p.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Canonical printer: decreasing grevlex, coefficient omitted when 1, '^' for
// powers, '*' between factors. parse(format(f)) == f.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const RingPtr& ring);

}  // namespace hilbtor
