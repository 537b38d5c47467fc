#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hilbtor/corpus.hpp"
#include "hilbtor/report.hpp"

namespace {

using namespace hilbtor;

struct CommonArgs {
  std::string scenario_path;
  int nmax = 0;
  int window = 0;
  std::uint32_t characteristic = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
  bool dense_ideals = false;
};

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::JsonFormat;
  if (f == "csv") return ReportFormat::Csv;
  if (f == "text") return ReportFormat::Text;
  throw ValidationError("unknown format '" + f + "'");
}

RunOptions run_options(const CommonArgs& a) {
  RunOptions opt;
  opt.seed = a.seed;
  if (a.nmax > 0) opt.n_max_override = a.nmax;
  if (a.window > 0) opt.window_override = a.window;
  if (a.characteristic > 0) opt.char_override = a.characteristic;
  return opt;
}

int write_out(const CommonArgs& a, const std::string& body) {
  if (a.out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(a.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write '" << a.out_path << "'\n";
    return 2;
  }
  out << body;
  return 0;
}

int finish(const CommonArgs& a, const std::vector<CheckOutcome>& outcomes,
           std::uint32_t characteristic) {
  ReportMeta meta;
  meta.seed = a.seed;
  meta.characteristic = characteristic;
  std::string body = emit_report(meta, outcomes, parse_format(a.format));
  int rc = write_out(a, body);
  if (rc != 0) return rc;
  return any_failure(outcomes) ? 1 : 0;
}

int cmd_verify(const CommonArgs& a) {
  Scenario s = load_scenario(a.scenario_path);
  RunOptions opt = run_options(a);
  std::vector<CheckOutcome> outcomes = run_checks(s, opt);
  return finish(a, outcomes, opt.char_override.value_or(s.characteristic));
}

int cmd_demo(const CommonArgs& a) {
  RunOptions opt = run_options(a);
  std::vector<CheckOutcome> all;
  std::uint32_t characteristic = opt.char_override.value_or(32003);
  for (const Scenario& s : generate_corpus(a.seed, a.dense_ideals)) {
    std::vector<CheckOutcome> outcomes = run_checks(s, opt);
    all.insert(all.end(), outcomes.begin(), outcomes.end());
  }
  return finish(a, all, characteristic);
}

int cmd_fit(const CommonArgs& a, const std::string& complex_expr, const std::string& module_name) {
  Scenario s = load_scenario(a.scenario_path);
  ScenarioContext ctx(s, a.characteristic > 0 ? std::optional<std::uint32_t>(a.characteristic)
                                              : std::nullopt);
  SampleOptions opt;
  opt.n_max = a.nmax > 0 ? a.nmax : s.fit.n_max;
  opt.window = a.window > 0 ? a.window : s.fit.window;
  DegreeReport r = predict_degrees(ctx.complex_expr(complex_expr), ctx.cache_for(module_name), opt);
  Json j;
  j["complex"] = complex_expr;
  j["module"] = module_name;
  j["fitted"] = Json{{"status", to_string(r.fitted.status)},
                     {"degree", r.fitted.degree},
                     {"leading_diff", r.fitted.leading_diff},
                     {"stable_from", r.fitted.stable_from}};
  j["dim_M"] = r.dim_M;
  j["dim_H"] = r.dim_H;
  j["analytic_spread"] = r.analytic_spread ? Json(*r.analytic_spread) : Json(nullptr);
  j["predicted"] = r.predicted;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["samples"] = r.samples.values;
  std::string body = j.dump(2) + "\n";
  int rc = write_out(a, body);
  if (rc != 0) return rc;
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"length-function degree verification over graded polynomial rings"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string complex_expr, module_name = "M";

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    if (needs_scenario)
      cmd->add_option("--scenario", a.scenario_path, "scenario JSON file")->required();
    cmd->add_option("--nmax", a.nmax, "initial sample count per fit");
    cmd->add_option("--window", a.window, "finite-difference stabilization window");
    cmd->add_option("--char", a.characteristic, "override the coefficient characteristic");
    cmd->add_option("--seed", a.seed, "seed for generated corpora");
    cmd->add_option("--format", a.format, "json|csv|text");
    cmd->add_option("--out", a.out_path, "write the report to a file");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the checks of one scenario");
  add_common(verify, true);

  CLI::App* demo = app.add_subcommand("demo", "run the built-in corpus");
  add_common(demo, false);
  demo->add_flag("--dense-ideals", a.dense_ideals, "allow dense random ideal generators");

  CLI::App* fit = app.add_subcommand("fit", "fit one complex and print its degree report");
  add_common(fit, true);
  fit->add_option("--complex", complex_expr, "complex name or constructor expression")->required();
  fit->add_option("--module", module_name, "module to sample against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(a);
    if (demo->parsed()) return cmd_demo(a);
    if (fit->parsed()) return cmd_fit(a, complex_expr, module_name);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hilbtor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
