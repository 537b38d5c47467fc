#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbtor/predict.hpp"

namespace hilbtor {

using Json = nlohmann::ordered_json;

struct ModuleData {
  int ambient_rank = 1;
  std::vector<int> twists;
  std::vector<std::vector<std::string>> relations;
};

struct CheckRequest {
  std::string id;
  Json params;  // object; may be empty
};

struct FitParams {
  int n_max = 8;
  int window = 4;
  std::optional<std::uint32_t> second_prime;
};

struct Scenario {
  std::string name;
  std::vector<std::string> vars;
  std::uint32_t characteristic = 32003;
  std::vector<std::string> ideal;
  std::map<std::string, ModuleData> modules;
  std::map<std::string, std::string> complexes;  // name -> constructor expression
  std::vector<CheckRequest> checks;
  FitParams fit;
};

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);
// Reads and fully validates a scenario file; throws ParseError / ValidationError.
Scenario load_scenario(const std::string& path);
// Parses polynomials, builds modules and all complex expressions once.
void validate_scenario(const Scenario& s);

// Builds engine objects for one scenario at one characteristic.
class ScenarioContext {
 public:
  ScenarioContext(const Scenario& s, std::optional<std::uint32_t> char_override = {});

  const Scenario& scenario() const { return s_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const PresentedModule& module(const std::string& name);
  bool has_module(const std::string& name) const { return s_.modules.count(name) > 0; }
  // Evaluates a constructor expression (scenario complex names resolve too).
  const FreeComplex& complex_expr(const std::string& expr);
  QuotientCache& cache_for(const std::string& module_name);
  Polynomial poly(const std::string& text) const;

 private:
  FreeComplex build_expr(const std::string& expr, std::vector<std::string>& stack);

  Scenario s_;
  RingPtr ring_;
  std::vector<Polynomial> ideal_;
  std::map<std::string, PresentedModule> modules_;
  std::map<std::string, FreeComplex> complex_memo_;
  std::map<std::string, std::shared_ptr<QuotientCache>> caches_;
};

}  // namespace hilbtor
