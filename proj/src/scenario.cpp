#include "hilbtor/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace hilbtor {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_identifier(const std::string& s) { return valid_identifier(s); }

// Splits at top-level commas (parentheses nest).
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("expected an integer, got '" + s + "'");
  }
}

}  // namespace

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["ring"] = Json{{"vars", s.vars}, {"char", s.characteristic}};
  j["ideal"] = s.ideal;
  Json mods = Json::object();
  for (const auto& [name, m] : s.modules) {
    Json jm;
    jm["ambient_rank"] = m.ambient_rank;
    jm["twists"] = m.twists;
    jm["relations"] = m.relations;
    mods[name] = std::move(jm);
  }
  j["modules"] = std::move(mods);
  Json cx = Json::object();
  for (const auto& [name, e] : s.complexes) cx[name] = e;
  j["complexes"] = std::move(cx);
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    Json jc;
    jc["id"] = c.id;
    jc["params"] = c.params.is_null() ? Json::object() : c.params;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  Json fit;
  fit["n_max"] = s.fit.n_max;
  fit["window"] = s.fit.window;
  if (s.fit.second_prime) fit["second_prime"] = *s.fit.second_prime;
  j["fit"] = std::move(fit);
  return j;
}

Scenario scenario_from_json(const Json& j) {
  Scenario s;
  if (!j.is_object()) throw ValidationError("scenario must be a JSON object");
  s.name = j.value("name", std::string("scenario"));
  if (!j.contains("ring") || !j["ring"].is_object()) throw ValidationError("missing 'ring' object");
  const Json& ring = j["ring"];
  if (!ring.contains("vars") || !ring["vars"].is_array()) throw ValidationError("ring.vars must be an array");
  for (const auto& v : ring["vars"]) {
    if (!v.is_string()) throw ValidationError("ring.vars entries must be strings");
    s.vars.push_back(v.get<std::string>());
  }
  s.characteristic = ring.value("char", 32003u);
  if (j.contains("ideal")) {
    if (!j["ideal"].is_array()) throw ValidationError("ideal must be an array of strings");
    for (const auto& g : j["ideal"]) s.ideal.push_back(g.get<std::string>());
  }
  if (j.contains("modules")) {
    for (const auto& [name, jm] : j["modules"].items()) {
      ModuleData m;
      m.ambient_rank = jm.value("ambient_rank", 1);
      if (jm.contains("twists")) m.twists = jm["twists"].get<std::vector<int>>();
      else m.twists.assign(static_cast<std::size_t>(m.ambient_rank), 0);
      if (jm.contains("relations"))
        m.relations = jm["relations"].get<std::vector<std::vector<std::string>>>();
      s.modules[name] = std::move(m);
    }
  }
  if (j.contains("complexes")) {
    for (const auto& [name, je] : j["complexes"].items()) {
      if (!je.is_string()) throw ValidationError("complexes." + name + " must be a string expression");
      s.complexes[name] = je.get<std::string>();
    }
  }
  if (j.contains("checks")) {
    for (const auto& jc : j["checks"]) {
      CheckRequest c;
      c.id = jc.value("id", std::string());
      if (c.id.empty()) throw ValidationError("check entry without id");
      c.params = jc.contains("params") ? jc["params"] : Json::object();
      s.checks.push_back(std::move(c));
    }
  }
  if (j.contains("fit")) {
    const Json& f = j["fit"];
    s.fit.n_max = f.value("n_max", 8);
    s.fit.window = f.value("window", 4);
    if (f.contains("second_prime")) s.fit.second_prime = f["second_prime"].get<std::uint32_t>();
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario JSON: ") + e.what());
  }
  Scenario s = scenario_from_json(j);
  validate_scenario(s);
  return s;
}

namespace {

const std::vector<std::string> kKnownChecks = {
    "THM-MAIN",    "THM-MAXDIM",  "THM-MPRIM",    "BOUND-26",
    "COR-REGCOR",  "COR-CMMAX",   "LEM-PROJSUPP", "PROP-WTF",
    "PROP-SUBADD", "PROP-SUBADD2", "PROP-NONVANISH", "KOSZUL-TOP"};

}  // namespace

void validate_scenario(const Scenario& s) {
  ScenarioContext ctx(s);
  for (std::size_t i = 0; i < s.ideal.size(); ++i) {
    Polynomial g = ctx.poly(s.ideal[i]);
    if (!g.is_homogeneous())
      throw ValidationError("ideal[" + std::to_string(i) + "] = '" + s.ideal[i] +
                            "' violates the graded restriction");
  }
  for (const auto& [name, _] : s.modules) ctx.module(name);
  for (const auto& [name, expr] : s.complexes) {
    (void)expr;
    ctx.complex_expr(name);
  }
  for (const auto& c : s.checks) {
    if (std::find(kKnownChecks.begin(), kKnownChecks.end(), c.id) == kKnownChecks.end())
      throw ValidationError("unknown check id '" + c.id + "'");
    if (!c.params.is_object()) throw ValidationError("check params must be an object");
    auto need_module = [&](const std::string& key) {
      std::string m = c.params.value(key, std::string("M"));
      if (!s.modules.count(m))
        throw ValidationError("check " + c.id + " references unknown module '" + m + "'");
    };
    need_module("module");
    if (c.params.contains("complex")) ctx.complex_expr(c.params["complex"].get<std::string>());
    if (c.params.contains("complexes"))
      for (const auto& e : c.params["complexes"]) ctx.complex_expr(e.get<std::string>());
    if (c.params.contains("l_module")) need_module("l_module");
    if (c.params.contains("l_modules"))
      for (const auto& e : c.params["l_modules"]) {
        if (!s.modules.count(e.get<std::string>()))
          throw ValidationError("check " + c.id + " references unknown module '" +
                                e.get<std::string>() + "'");
      }
    if (c.params.contains("elems"))
      for (const auto& e : c.params["elems"]) ctx.poly(e.get<std::string>());
  }
}

ScenarioContext::ScenarioContext(const Scenario& s, std::optional<std::uint32_t> char_override)
    : s_(s) {
  ring_ = make_ring(s_.vars, char_override.value_or(s_.characteristic));
  for (const auto& g : s_.ideal) {
    Polynomial f = poly(g);
    if (!f.is_zero()) ideal_.push_back(std::move(f));
  }
}

Polynomial ScenarioContext::poly(const std::string& text) const {
  try {
    return parse_polynomial(text, ring_);
  } catch (const Error& e) {
    throw ValidationError("'" + text + "': " + e.what());
  }
}

const PresentedModule& ScenarioContext::module(const std::string& name) {
  auto it = modules_.find(name);
  if (it != modules_.end()) return it->second;
  auto md = s_.modules.find(name);
  if (md == s_.modules.end()) throw ValidationError("unknown module '" + name + "'");
  const ModuleData& d = md->second;
  if (static_cast<int>(d.twists.size()) != d.ambient_rank)
    throw ValidationError("modules." + name + ": twists length must equal ambient_rank");
  FreeModuleSpec amb{d.ambient_rank, d.twists};
  std::vector<ModVector> rels;
  for (std::size_t r = 0; r < d.relations.size(); ++r) {
    if (static_cast<int>(d.relations[r].size()) != d.ambient_rank)
      throw ValidationError("modules." + name + ".relations[" + std::to_string(r) +
                            "]: needs ambient_rank entries");
    ModVector v = ModVector::zero(ring_, d.ambient_rank);
    for (std::size_t c = 0; c < d.relations[r].size(); ++c)
      v.comps[c] = poly(d.relations[r][c]);
    if (!v.is_homogeneous(amb))
      throw ValidationError("modules." + name + ".relations[" + std::to_string(r) +
                            "] violates the graded restriction");
    rels.push_back(std::move(v));
  }
  auto [ins, ok] = modules_.emplace(name, PresentedModule(ring_, amb, std::move(rels)));
  (void)ok;
  return ins->second;
}

const FreeComplex& ScenarioContext::complex_expr(const std::string& expr) {
  auto it = complex_memo_.find(expr);
  if (it != complex_memo_.end()) return it->second;
  std::vector<std::string> stack;
  FreeComplex built = build_expr(expr, stack);
  auto [ins, ok] = complex_memo_.emplace(expr, std::move(built));
  (void)ok;
  return ins->second;
}

FreeComplex ScenarioContext::build_expr(const std::string& raw, std::vector<std::string>& stack) {
  std::string expr = trim(raw);
  if (expr.empty()) throw ValidationError("empty complex expression");

  if (is_identifier(expr)) {
    auto named = s_.complexes.find(expr);
    if (named == s_.complexes.end()) throw ValidationError("unknown complex '" + expr + "'");
    if (std::find(stack.begin(), stack.end(), expr) != stack.end())
      throw ValidationError("complex definitions form a cycle at '" + expr + "'");
    auto memo = complex_memo_.find(expr);
    if (memo != complex_memo_.end()) return memo->second;
    stack.push_back(expr);
    FreeComplex built = build_expr(named->second, stack);
    stack.pop_back();
    complex_memo_.emplace(expr, built);
    return built;
  }

  auto open = expr.find('(');
  if (open == std::string::npos || expr.back() != ')')
    throw ValidationError("bad complex expression '" + expr + "'");
  std::string head = trim(expr.substr(0, open));
  std::string inner = expr.substr(open + 1, expr.size() - open - 2);
  std::vector<std::string> args = split_args(inner);

  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      throw ValidationError("'" + head + "' expects " + std::to_string(n) + " arguments");
  };

  if (head == "koszul" || head == "taylor") {
    if (args.empty()) throw ValidationError("'" + head + "' needs at least one element");
    std::vector<Polynomial> elems;
    for (const auto& a : args) elems.push_back(poly(a));
    return head == "koszul" ? koszul_complex(ring_, elems) : taylor_complex(ring_, elems);
  }
  if (head == "resolution") {
    arity(1);
    return resolution_of(module(args[0]));
  }
  if (head == "dual") {
    arity(1);
    return hom_dual(build_expr(args[0], stack));
  }
  if (head == "minimize") {
    arity(1);
    return minimize(build_expr(args[0], stack));
  }
  if (head == "shift") {
    arity(2);
    return shift(build_expr(args[0], stack), parse_int(args[1]));
  }
  if (head == "sum") {
    arity(2);
    return direct_sum(build_expr(args[0], stack), build_expr(args[1], stack));
  }
  if (head == "cone_mult") {
    arity(2);
    return cone(mult_chain_map(build_expr(args[0], stack), poly(args[1])));
  }
  if (head == "zero") {
    arity(0);
    return FreeComplex::zero(ring_);
  }
  throw ValidationError("unknown complex constructor '" + head + "'");
}

QuotientCache& ScenarioContext::cache_for(const std::string& module_name) {
  auto it = caches_.find(module_name);
  if (it != caches_.end()) return *it->second;
  auto cache = std::make_shared<QuotientCache>(module(module_name), ideal_);
  auto [ins, ok] = caches_.emplace(module_name, std::move(cache));
  (void)ok;
  return *ins->second;
}

}  // namespace hilbtor
