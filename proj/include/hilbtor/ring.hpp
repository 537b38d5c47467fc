#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "hilbtor/errors.hpp"
#include "hilbtor/field.hpp"

namespace hilbtor {

// The graded polynomial ring k[x_1..x_d] over F_p with grevlex fixed.
struct RingSpec {
  std::vector<std::string> vars;
  FieldSpec field;

  std::size_t num_vars() const { return vars.size(); }
  std::uint32_t characteristic() const { return field.p; }
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline RingPtr make_ring(std::vector<std::string> vars, std::uint32_t p = 32003) {
  if (vars.empty()) throw ValidationError("ring needs at least one variable");
  if (!is_prime_u32(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!valid_identifier(vars[i])) throw ValidationError("bad variable name '" + vars[i] + "'");
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw ValidationError("duplicate variable name '" + vars[i] + "'");
  }
  auto r = std::make_shared<RingSpec>();
  r->vars = std::move(vars);
  r->field.p = p;
  return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars && a->field.p == b->field.p;
}

inline int var_index(const RingPtr& r, const std::string& name) {
  for (std::size_t i = 0; i < r->vars.size(); ++i)
    if (r->vars[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace hilbtor
