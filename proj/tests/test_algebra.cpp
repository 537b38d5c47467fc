#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbtor/polynomial.hpp"

using namespace hilbtor;

namespace {

RingPtr kxy(std::uint32_t p = 32003) { return make_ring({"x", "y"}, p); }

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

Polynomial rand_poly(const RingPtr& ring, std::mt19937_64& rng, int max_terms, int max_deg) {
  std::vector<Term> terms;
  int nt = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < nt; ++t) {
    Monomial m(ring->num_vars());
    for (std::size_t i = 0; i < ring->num_vars(); ++i)
      m.exp(i) = static_cast<std::uint16_t>(rng() % static_cast<unsigned>(max_deg + 1));
    terms.push_back(Term{static_cast<std::uint32_t>(rng() % ring->field.p), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("field inverses") {
  const std::uint32_t p = 32003;
  for (std::uint32_t a : {1u, 2u, 17u, 32002u, 12345u}) {
    CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
  }
  CHECK(is_prime_u32(32003));
  CHECK(is_prime_u32(31991));
  CHECK_FALSE(is_prime_u32(32001));
}

TEST_CASE("grevlex basics") {
  // x^2 y > x y^2, x > y, m == m
  CHECK(grevlex_compare(mono({2, 1}), mono({1, 2})) > 0);
  CHECK(grevlex_compare(mono({1, 0}), mono({0, 1})) > 0);
  CHECK(grevlex_compare(mono({1, 1}), mono({1, 1})) == 0);
  CHECK_THROWS_AS(grevlex_compare(mono({1}), mono({1, 0})), ArityMismatch);
}

TEST_CASE("grevlex is a total order on small monomials") {
  // all monomials of degree <= 4 in 3 variables
  std::vector<Monomial> all;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        all.push_back(mono({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                            static_cast<std::uint16_t>(c)}));
  for (const auto& m1 : all)
    for (const auto& m2 : all) {
      int c12 = grevlex_compare(m1, m2), c21 = grevlex_compare(m2, m1);
      CHECK(c12 == -c21);
      if (&m1 != &m2 && m1 != m2) CHECK(c12 != 0);
    }
  // transitivity on every triple
  for (const auto& m1 : all)
    for (const auto& m2 : all)
      for (const auto& m3 : all)
        if (grevlex_compare(m1, m2) > 0 && grevlex_compare(m2, m3) > 0)
          CHECK(grevlex_compare(m1, m3) > 0);
}

TEST_CASE("order respects multiplication") {
  std::mt19937_64 rng(7);
  RingPtr ring = make_ring({"x", "y", "z"});
  for (int it = 0; it < 500; ++it) {
    Monomial a(3), b(3), m(3);
    for (std::size_t i = 0; i < 3; ++i) {
      a.exp(i) = static_cast<std::uint16_t>(rng() % 4);
      b.exp(i) = static_cast<std::uint16_t>(rng() % 4);
      m.exp(i) = static_cast<std::uint16_t>(rng() % 4);
    }
    int c = grevlex_compare(a, b);
    CHECK(grevlex_compare(a.times(m), b.times(m)) == c);
  }
}

TEST_CASE("parser worked examples") {
  RingPtr ring = kxy();
  Polynomial f = parse_polynomial("x^2 + 3*x*y", ring);
  CHECK(f.num_terms() == 2);
  CHECK(to_string(f) == "x^2 + 3*x*y");

  CHECK(parse_polynomial("0", ring).is_zero());

  RingPtr f2 = kxy(2);
  Polynomial sq = parse_polynomial("(x+y)^2", f2);
  CHECK(to_string(sq) == "x^2 + y^2");
}

TEST_CASE("parser errors") {
  RingPtr ring = kxy();
  CHECK_THROWS_AS(parse_polynomial("x^-1", ring), NegativeExponent);
  CHECK_THROWS_AS(parse_polynomial("w + 1", ring), UnknownVariable);
  CHECK_THROWS_AS(parse_polynomial("x +", ring), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("(x", ring), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("x2", ring), UnknownVariable);  // ident, not x*2
}

TEST_CASE("arithmetic identities") {
  RingPtr ring = kxy();
  Polynomial x = parse_polynomial("x", ring);
  Polynomial y = parse_polynomial("y", ring);
  CHECK(x.add(x.neg()).is_zero());
  CHECK(to_string(x.add(y).mul(x.sub(y))) == "x^2 + 32002*y^2");
  CHECK(parse_polynomial("x^2", ring).scale(0).is_zero());
  CHECK(parse_polynomial("x^2+x*y", ring).degree() == 2);
  CHECK(parse_polynomial("x^2+x", ring).is_homogeneous() == false);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(42);
  RingPtr ring = kxy(101);
  for (int it = 0; it < 200; ++it) {
    Polynomial a = rand_poly(ring, rng, 4, 3);
    Polynomial b = rand_poly(ring, rng, 4, 3);
    Polynomial c = rand_poly(ring, rng, 4, 3);
    CHECK(a.add(b).add(c) == a.add(b.add(c)));
    CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
    CHECK(a.mul(b) == b.mul(a));
    if (!a.is_zero() && !b.is_zero()) CHECK_FALSE(a.mul(b).is_zero());
  }
}

TEST_CASE("deg(a*b) adds for homogeneous inputs") {
  RingPtr ring = kxy();
  Polynomial a = parse_polynomial("x^2+x*y", ring);
  Polynomial b = parse_polynomial("x+y", ring);
  CHECK(a.mul(b).degree() == 3);
}

TEST_CASE("format of parse is idempotent canonicalization") {
  RingPtr ring = kxy();
  for (const char* src : {"x + x", "2*x*y + y*x", "x^2 - x^2", "(x+y)*(x+y)", "  x *y ^2+ 0 "}) {
    Polynomial f = parse_polynomial(src, ring);
    std::string printed = to_string(f);
    Polynomial g = parse_polynomial(printed, ring);
    CHECK(to_string(g) == printed);
    CHECK(f == g);
  }
}

TEST_CASE("ring mismatch detected") {
  Polynomial a = parse_polynomial("x", kxy());
  Polynomial b = parse_polynomial("x", make_ring({"x"}, 32003));
  CHECK_THROWS_AS(a.add(b), RingMismatch);
}
