#include "hilbtor/corpus.hpp"

#include <random>

namespace hilbtor {

namespace {

ModuleData free_rank1() {
  ModuleData m;
  m.ambient_rank = 1;
  m.twists = {0};
  return m;
}

ModuleData quot(const std::vector<std::string>& gens) {
  ModuleData m = free_rank1();
  for (const auto& g : gens) m.relations.push_back({g});
  return m;
}

void add_check(Scenario& s, const std::string& id, Json params) {
  s.checks.push_back(CheckRequest{id, std::move(params)});
}

void standard_battery(Scenario& s, const std::vector<std::string>& main_complexes,
                      const std::vector<std::string>& l_modules,
                      const std::vector<std::string>& sop_elems) {
  add_check(s, "THM-MAIN", Json{{"module", "M"}, {"complexes", main_complexes}});
  add_check(s, "THM-MAXDIM", Json{{"module", "M"}, {"complex", main_complexes[0]}});
  for (const auto& e : main_complexes) {
    add_check(s, "THM-MPRIM", Json{{"module", "M"}, {"complex", e}});
    add_check(s, "BOUND-26", Json{{"module", "M"}, {"complex", e}});
  }
  if (l_modules.size() >= 2)
    add_check(s, "COR-REGCOR", Json{{"module", "M"}, {"l_modules", l_modules}});
  for (const auto& l : l_modules) {
    add_check(s, "COR-CMMAX", Json{{"module", "M"}, {"l_module", l}});
    add_check(s, "LEM-PROJSUPP", Json{{"module", "M"}, {"l_module", l}});
  }
  std::vector<std::string> wtf(main_complexes.begin(),
                               main_complexes.begin() + std::min<std::size_t>(2, main_complexes.size()));
  add_check(s, "PROP-WTF", Json{{"module", "M"}, {"complexes", wtf}});
  add_check(s, "PROP-SUBADD", Json{{"module", "M"}, {"complexes", wtf}});
  add_check(s, "PROP-SUBADD2", Json{{"module", "M"}, {"complex", main_complexes[0]}});
  add_check(s, "PROP-NONVANISH", Json{{"module", "M"}, {"complexes", main_complexes}});
  add_check(s, "KOSZUL-TOP", Json{{"module", "M"}, {"elems", sop_elems}});
}

Scenario fixed_d2_maximal() {
  Scenario s;
  s.name = "d2-maximal";
  s.vars = {"x", "y"};
  s.ideal = {"x", "y"};
  s.modules["M"] = free_rank1();
  s.modules["L1"] = quot({"x", "y"});
  s.modules["L2"] = quot({"x^2", "x*y", "y^2"});
  s.complexes["K"] = "koszul(x,y)";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["D"] = "dual(R)";
  s.complexes["S"] = "shift(K,3)";
  s.complexes["C"] = "cone_mult(K,x)";
  s.complexes["T"] = "taylor(x^2,x*y,y^2)";
  s.fit.second_prime = 31991;
  standard_battery(s, {"K", "R", "D", "S", "C", "T"}, {"L1", "L2"}, {"x", "y"});
  return s;
}

Scenario fixed_d2_powers() {
  Scenario s;
  s.name = "d2-powers";
  s.vars = {"x", "y"};
  s.ideal = {"x^2", "y^3"};
  s.modules["M"] = free_rank1();
  s.modules["L1"] = quot({"x", "y"});
  s.modules["L2"] = quot({"x^2", "y^2"});
  s.complexes["K"] = "koszul(x,y)";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["D"] = "dual(R)";
  s.complexes["C"] = "cone_mult(K,y)";
  s.complexes["T"] = "taylor(x^2,y^3)";
  s.fit.second_prime = 31991;
  standard_battery(s, {"K", "R", "D", "C", "T"}, {"L1", "L2"}, {"x^2", "y^3"});
  // Positive-dimensional cohomology exercises the max formula.
  add_check(s, "THM-MPRIM", Json{{"module", "M"}, {"complex", "koszul(x)"}});
  add_check(s, "BOUND-26", Json{{"module", "M"}, {"complex", "koszul(x)"}});
  return s;
}

Scenario fixed_d1() {
  Scenario s;
  s.name = "d1-principal";
  s.vars = {"x"};
  s.ideal = {"x^2"};
  s.modules["M"] = free_rank1();
  s.modules["L1"] = quot({"x"});
  s.modules["L2"] = quot({"x^3"});
  s.complexes["K"] = "koszul(x)";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["D"] = "dual(R)";
  s.complexes["S"] = "shift(K,-2)";
  s.complexes["C"] = "cone_mult(K,x)";
  s.fit.second_prime = 31991;
  standard_battery(s, {"K", "R", "D", "S", "C"}, {"L1", "L2"}, {"x^2"});
  return s;
}

Scenario fixed_d3_maximal() {
  Scenario s;
  s.name = "d3-maximal";
  s.vars = {"x", "y", "z"};
  s.ideal = {"x", "y", "z"};
  s.modules["M"] = free_rank1();
  s.modules["L1"] = quot({"x", "y", "z"});
  s.modules["L2"] = quot({"x", "y", "z^2"});
  s.modules["H1"] = quot({"x"});
  s.complexes["K"] = "koszul(x,y,z)";
  s.complexes["R"] = "resolution(L2)";
  s.complexes["D"] = "dual(K)";
  s.complexes["C"] = "cone_mult(K,z)";
  add_check(s, "THM-MAIN", Json{{"module", "M"}, {"complexes", {"K", "R", "D", "C"}}});
  add_check(s, "THM-MAXDIM", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "THM-MPRIM", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "THM-MPRIM", Json{{"module", "M"}, {"complex", "koszul(x,y)"}});
  add_check(s, "BOUND-26", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "BOUND-26", Json{{"module", "M"}, {"complex", "koszul(x,y)"}});
  add_check(s, "COR-REGCOR", Json{{"module", "M"}, {"l_modules", {"L1", "L2"}}});
  add_check(s, "COR-CMMAX", Json{{"module", "M"}, {"l_module", "L1"}});
  add_check(s, "COR-CMMAX", Json{{"module", "M"}, {"l_module", "H1"}});
  add_check(s, "LEM-PROJSUPP", Json{{"module", "M"}, {"l_module", "L1"}});
  add_check(s, "LEM-PROJSUPP", Json{{"module", "M"}, {"l_module", "H1"}});
  add_check(s, "PROP-WTF", Json{{"module", "M"}, {"complexes", {"K", "R"}}});
  add_check(s, "PROP-SUBADD2", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "PROP-NONVANISH", Json{{"module", "M"}, {"complexes", {"K", "R", "C"}}});
  add_check(s, "KOSZUL-TOP", Json{{"module", "M"}, {"elems", {"x", "y", "z"}}});
  return s;
}

Scenario fixed_d2_module() {
  Scenario s;
  s.name = "d2-hypersurface-module";
  s.vars = {"x", "y"};
  s.ideal = {"x^2", "y^2"};
  s.modules["M"] = quot({"x*y"});
  s.modules["L1"] = quot({"x", "y"});
  s.modules["L2"] = quot({"x^2", "x*y", "y^2"});
  s.complexes["K"] = "koszul(x,y)";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["C"] = "cone_mult(K,x)";
  s.fit.second_prime = 31991;
  add_check(s, "THM-MAIN", Json{{"module", "M"}, {"complexes", {"K", "R", "C"}}});
  add_check(s, "THM-MAXDIM", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "THM-MPRIM", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "BOUND-26", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "COR-REGCOR", Json{{"module", "M"}, {"l_modules", {"L1", "L2"}}});
  add_check(s, "COR-CMMAX", Json{{"module", "M"}, {"l_module", "L1"}});
  add_check(s, "LEM-PROJSUPP", Json{{"module", "M"}, {"l_module", "L1"}});
  add_check(s, "LEM-PROJSUPP", Json{{"module", "M"}, {"l_module", "L2"}});
  add_check(s, "PROP-NONVANISH", Json{{"module", "M"}, {"complexes", {"K", "R"}}});
  add_check(s, "KOSZUL-TOP", Json{{"module", "M"}, {"elems", {"x^2+y^2"}}});
  return s;
}

Scenario fixed_d2_binomial() {
  Scenario s;
  s.name = "d2-binomial-ideal";
  s.vars = {"x", "y"};
  s.ideal = {"x^2-y^2", "x*y"};
  s.modules["M"] = free_rank1();
  s.modules["L1"] = quot({"x", "y"});
  s.complexes["K"] = "koszul(x,y)";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["C"] = "cone_mult(K,x)";
  add_check(s, "THM-MAIN", Json{{"module", "M"}, {"complexes", {"K", "R", "C"}}});
  add_check(s, "THM-MAXDIM", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "THM-MPRIM", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "BOUND-26", Json{{"module", "M"}, {"complex", "K"}});
  add_check(s, "COR-CMMAX", Json{{"module", "M"}, {"l_module", "L1"}});
  add_check(s, "PROP-NONVANISH", Json{{"module", "M"}, {"complexes", {"K", "R"}}});
  add_check(s, "KOSZUL-TOP", Json{{"module", "M"}, {"elems", {"x^3", "y^3"}}});
  return s;
}

Scenario fixed_d2_dim0_gates() {
  Scenario s;
  s.name = "d2-dim0-gates";
  s.vars = {"x", "y"};
  s.ideal = {"x", "y"};
  s.modules["M"] = quot({"x", "y"});
  s.modules["L1"] = quot({"x", "y"});
  s.complexes["K"] = "koszul(x,y)";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["S"] = "shift(K,2)";
  add_check(s, "THM-MAIN", Json{{"module", "M"}, {"complexes", {"K", "R", "S"}}});
  add_check(s, "THM-MAXDIM", Json{{"module", "M"}, {"complex", "K"}});  // skipped: dim M = 0
  add_check(s, "THM-MPRIM", Json{{"module", "M"}, {"complex", "K"}});   // skipped: dim M = 0
  add_check(s, "COR-CMMAX", Json{{"module", "M"}, {"l_module", "L1"}}); // skipped: dim M = 0
  add_check(s, "PROP-NONVANISH", Json{{"module", "M"}, {"complexes", {"K", "R"}}});
  return s;
}

Scenario fixed_d2_non_m_primary() {
  Scenario s;
  s.name = "d2-non-m-primary";
  s.vars = {"x", "y"};
  s.ideal = {"x"};
  s.modules["M"] = free_rank1();
  s.modules["L1"] = quot({"x", "y"});
  s.modules["L2"] = quot({"x^2", "x*y", "y^2"});
  s.complexes["K"] = "koszul(x,y)";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["D"] = "dual(R)";
  s.complexes["S"] = "shift(R,1)";
  s.fit.n_max = 6;
  add_check(s, "THM-MAIN", Json{{"module", "M"}, {"complexes", {"K", "R", "D", "S"}}});
  add_check(s, "THM-MAXDIM", Json{{"module", "M"}, {"complex", "K"}});  // skipped: not m-primary
  add_check(s, "COR-REGCOR", Json{{"module", "M"}, {"l_modules", {"L1", "L2"}}});
  add_check(s, "PROP-SUBADD", Json{{"module", "M"}, {"complexes", {"R"}}});
  add_check(s, "PROP-NONVANISH", Json{{"module", "M"}, {"complexes", {"K", "R"}}});
  add_check(s, "KOSZUL-TOP", Json{{"module", "M"}, {"elems", {"x", "y"}}});  // skipped
  return s;
}

std::string mono_str(const std::vector<std::string>& vars, const std::vector<int>& exps) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

Scenario random_scenario(std::mt19937_64& rng, int index, bool dense_ideals) {
  Scenario s;
  s.name = "rand-" + std::to_string(index);
  int d = 2 + static_cast<int>(rng() % 2);
  s.vars = d == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};

  auto rnd_int = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  auto rnd_monomial = [&](int max_deg, int min_deg) {
    while (true) {
      std::vector<int> e(static_cast<std::size_t>(d));
      for (auto& x : e) x = rnd_int(0, max_deg);
      int deg = 0;
      for (auto x : e) deg += x;
      if (deg >= min_deg && deg <= max_deg + 1) return e;
    }
  };

  // m-primary: pure powers of every variable, plus one extra generator.
  for (int i = 0; i < d; ++i)
    s.ideal.push_back(s.vars[static_cast<std::size_t>(i)] +
                      (rnd_int(1, 2) == 1 ? "" : "^" + std::to_string(rnd_int(2, 2))));
  if (dense_ideals) {
    std::string poly;
    for (int i = 0; i < d; ++i) {
      if (!poly.empty()) poly += "+";
      poly += std::to_string(rnd_int(1, 5)) + "*" + s.vars[static_cast<std::size_t>(i)] + "^2";
    }
    s.ideal.push_back(poly);
  } else if (rnd_int(0, 1) == 1) {
    auto e1 = rnd_monomial(2, 2);
    s.ideal.push_back(mono_str(s.vars, e1));
  }

  int mchoice = rnd_int(0, 2);
  if (mchoice == 0) {
    s.modules["M"] = free_rank1();
  } else if (mchoice == 1) {
    s.modules["M"] = quot({s.vars[static_cast<std::size_t>(rnd_int(0, d - 1))]});
  } else {
    auto e = rnd_monomial(2, 1);
    s.modules["M"] = quot({mono_str(s.vars, e)});
  }

  std::vector<std::string> lgens1, lgens2;
  for (int i = 0; i < d; ++i) lgens1.push_back(s.vars[static_cast<std::size_t>(i)]);
  for (int i = 0; i < d; ++i) {
    int a = rnd_int(1, 2);
    lgens2.push_back(s.vars[static_cast<std::size_t>(i)] + (a == 1 ? "" : "^2"));
  }
  s.modules["L1"] = quot(lgens1);
  s.modules["L2"] = quot(lgens2);

  std::string all_vars;
  for (int i = 0; i < d; ++i) all_vars += (i ? "," : "") + s.vars[static_cast<std::size_t>(i)];
  s.complexes["K"] = "koszul(" + all_vars + ")";
  s.complexes["R"] = "resolution(L1)";
  s.complexes["D"] = "dual(R)";
  s.complexes["S"] = "shift(K," + std::to_string(rnd_int(-2, 3)) + ")";
  s.complexes["C"] = "cone_mult(K," + s.vars[static_cast<std::size_t>(rnd_int(0, d - 1))] + ")";
  std::string taylor = "taylor(";
  for (std::size_t i = 0; i < lgens2.size(); ++i) taylor += (i ? "," : "") + lgens2[i];
  taylor += ")";
  s.complexes["T"] = taylor;

  std::vector<std::string> sop;
  for (int i = 0; i < d; ++i) sop.push_back(s.ideal[static_cast<std::size_t>(i)]);
  standard_battery(s, {"K", "R", "D", "S", "C", "T"}, {"L1", "L2"}, sop);
  return s;
}

}  // namespace

std::vector<Scenario> generate_corpus(std::uint64_t seed, bool dense_ideals) {
  std::vector<Scenario> out;
  out.push_back(fixed_d2_maximal());
  out.push_back(fixed_d2_powers());
  out.push_back(fixed_d1());
  out.push_back(fixed_d3_maximal());
  out.push_back(fixed_d2_module());
  out.push_back(fixed_d2_binomial());
  out.push_back(fixed_d2_dim0_gates());
  out.push_back(fixed_d2_non_m_primary());
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 2; ++k) out.push_back(random_scenario(rng, k, dense_ideals));
  for (auto& s : out) validate_scenario(s);
  return out;
}

}  // namespace hilbtor
