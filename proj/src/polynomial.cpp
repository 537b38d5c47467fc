#include "hilbtor/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace hilbtor {

Polynomial Polynomial::constant(const RingPtr& ring, std::uint64_t c) {
  Polynomial f(ring);
  std::uint32_t r = fp_reduce(c, ring->field.p);
  if (r) f.terms_.push_back(Term{r, Monomial(ring->num_vars())});
  return f;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t idx, int power) {
  Monomial m(ring->num_vars());
  m.exp(idx) = static_cast<std::uint16_t>(power);
  Polynomial f(ring);
  if (power >= 0) f.terms_.push_back(Term{1, std::move(m)});
  return f;
}

Polynomial Polynomial::monomial_term(const RingPtr& ring, std::uint32_t coeff, Monomial m) {
  Polynomial f(ring);
  coeff %= ring->field.p;
  if (coeff) f.terms_.push_back(Term{coeff, std::move(m)});
  return f;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.mon, b.mon) > 0; });
  Polynomial f(ring);
  const std::uint32_t p = ring->field.p;
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % p;
    if (!c) continue;
    if (!f.terms_.empty() && f.terms_.back().mon == t.mon) {
      f.terms_.back().coeff = fp_add(f.terms_.back().coeff, c, p);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else {
      f.terms_.push_back(Term{c, std::move(t.mon)});
    }
  }
  return f;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // grevlex refines total degree, so the leading term carries the maximum.
  return terms_.front().mon.total_degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mon.total_degree();
  for (const auto& t : terms_)
    if (t.mon.total_degree() != d) return false;
  return true;
}

Polynomial Polynomial::add(const Polynomial& o) const {
  check_ring(o);
  const std::uint32_t p = ring_->field.p;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_compare(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = fp_add(terms_[i].coeff, o.terms_[j].coeff, p);
      if (s) r.terms_.push_back(Term{s, terms_[i].mon});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::neg() const {
  const std::uint32_t p = ring_->field.p;
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = fp_neg(t.coeff, p);
  return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const { return add(o.neg()); }

Polynomial Polynomial::scale(std::uint32_t c) const {
  const std::uint32_t p = ring_->field.p;
  c %= p;
  Polynomial r(ring_);
  if (!c) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{fp_mul(t.coeff, c, p), t.mon});
  return r;
}

Polynomial Polynomial::mul_term(std::uint32_t c, const Monomial& m) const {
  const std::uint32_t p = ring_->field.p;
  c %= p;
  Polynomial r(ring_);
  if (!c) return r;
  r.terms_.reserve(terms_.size());
  // Translation by m preserves grevlex, so the list stays sorted.
  for (const auto& t : terms_) r.terms_.push_back(Term{fp_mul(t.coeff, c, p), t.mon.times(m)});
  return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
  check_ring(o);
  Polynomial acc(ring_);
  for (const auto& t : terms_) acc = acc.add(o.mul_term(t.coeff, t.mon));
  return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mon != o.terms_[i].mon) return false;
  return true;
}

bool PolyLess::operator()(const Polynomial& a, const Polynomial& b) const {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grevlex_compare(ta[i].mon, tb[i].mon);
    if (c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const RingPtr& ring) : s_(s), ring_(ring) {}

  Polynomial run() {
    Polynomial f = expr();
    skip_ws();
    if (i_ != s_.size()) throw SyntaxError("unexpected trailing input", i_);
    return f;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  Polynomial expr() {
    bool negate = false;
    if (peek() == '-') {
      ++i_;
      negate = true;
    }
    Polynomial f = term();
    if (negate) f = f.neg();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i_;
        f = f.add(term());
      } else if (c == '-') {
        ++i_;
        f = f.sub(term());
      } else {
        break;
      }
    }
    return f;
  }

  Polynomial term() {
    Polynomial f = factor();
    while (peek() == '*') {
      ++i_;
      f = f.mul(factor());
    }
    return f;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() == '^') {
      ++i_;
      if (peek() == '-') throw NegativeExponent(i_);
      unsigned e = parse_uint_exponent();
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Polynomial f = expr();
      if (peek() != ')') throw SyntaxError("expected ')'", i_);
      ++i_;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint32_t p = ring_->field.p;
      std::uint64_t v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(s_[i_] - '0')) % p;
        ++i_;
      }
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name(s_.substr(start, i_ - start));
      int idx = var_index(ring_, name);
      if (idx < 0) throw UnknownVariable(name);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    throw SyntaxError("expected a number, variable or '('", i_);
  }

  unsigned parse_uint_exponent() {
    skip_ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw SyntaxError("expected an exponent", i_);
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > 1000000) throw SyntaxError("exponent too large", i_);
      ++i_;
    }
    return static_cast<unsigned>(v);
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

std::string to_string(const Monomial& m, const RingPtr& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!out.empty()) out += '*';
    out += ring->vars[i];
    if (m.exp(i) > 1) out += '^' + std::to_string(m.exp(i));
  }
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mon = to_string(t.mon, f.ring());
    if (mon.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mon;
    } else {
      out += std::to_string(t.coeff) + '*' + mon;
    }
  }
  return out;
}

}  // namespace hilbtor
