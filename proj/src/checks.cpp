#include "hilbtor/checks.hpp"

#include <algorithm>
#include <sstream>

namespace hilbtor {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::TimedOutStatus: return "timed_out";
  }
  return "?";
}

namespace {

// Internal signal: a paper hypothesis does not hold, so the check must not
// report pass or fail.
struct Skip {
  std::string reason;
};

struct FailNow {
  std::string reason;
  std::vector<std::int64_t> samples;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

class CheckRunner {
 public:
  CheckRunner(const Scenario& s, const RunOptions& opt)
      : s_(s), opt_(opt), ctx_(s, opt.char_override) {
    if (s_.fit.second_prime && *s_.fit.second_prime != ctx_.ring()->characteristic())
      ctx2_.emplace(s_, *s_.fit.second_prime);
    n_max_ = opt.n_max_override.value_or(s_.fit.n_max);
    window_ = opt.window_override.value_or(s_.fit.window);
  }

  std::vector<CheckOutcome> run() {
    std::vector<CheckOutcome> out;
    for (const auto& req : s_.checks) out.push_back(run_one(req));
    return out;
  }

 private:
  SampleOptions sample_options() const {
    SampleOptions o;
    o.n_min = 1;
    o.n_max = n_max_;
    o.window = window_;
    o.deadline = deadline_;
    return o;
  }

  std::string module_param(const CheckRequest& req) const {
    return req.params.value("module", std::string("M"));
  }

  std::vector<std::string> complex_params(const CheckRequest& req) const {
    std::vector<std::string> out;
    if (req.params.contains("complexes"))
      for (const auto& e : req.params["complexes"]) out.push_back(e.get<std::string>());
    else if (req.params.contains("complex"))
      out.push_back(req.params["complex"].get<std::string>());
    return out;
  }

  std::vector<Polynomial> elems_param(const CheckRequest& req, ScenarioContext& ctx,
                                      bool default_vars) const {
    std::vector<Polynomial> out;
    if (req.params.contains("elems")) {
      for (const auto& e : req.params["elems"]) out.push_back(ctx.poly(e.get<std::string>()));
    } else if (default_vars) {
      for (std::size_t i = 0; i < ctx.ring()->num_vars(); ++i)
        out.push_back(Polynomial::variable(ctx.ring(), i));
    }
    return out;
  }

  // Adaptive fit with memoization and the cross-characteristic tripwire.
  const AdaptiveFit& fit_for(ScenarioContext& ctx, const std::string& module_name,
                             const std::string& expr,
                             std::map<std::pair<std::string, std::string>, AdaptiveFit>& memo) {
    auto key = std::make_pair(module_name, expr);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    AdaptiveFit af = adaptive_fit_psi(ctx.complex_expr(expr), ctx.cache_for(module_name),
                                      sample_options());
    auto [ins, ok] = memo.emplace(key, std::move(af));
    (void)ok;
    return ins->second;
  }

  const AdaptiveFit& fitdeg(const std::string& module_name, const std::string& expr) {
    const AdaptiveFit& primary = fit_for(ctx_, module_name, expr, memo_);
    if (ctx2_) {
      const AdaptiveFit& alt = fit_for(*ctx2_, module_name, expr, memo2_);
      bool same = primary.fit.status == alt.fit.status &&
                  (primary.fit.status != FitStatus::Stabilized || primary.fit.degree == alt.fit.degree);
      if (!same)
        throw FailNow{"second-prime cross-check mismatch for " + expr + " (char " +
                          std::to_string(ctx_.ring()->characteristic()) + " vs " +
                          std::to_string(ctx2_->ring()->characteristic()) + ")",
                      primary.samples.values};
    }
    return primary;
  }

  int stabilized_degree(const AdaptiveFit& af, const std::string& what) {
    if (af.fit.status != FitStatus::Stabilized)
      throw FailNow{what + ": fit " + to_string(af.fit.status), af.samples.values};
    return af.fit.degree;
  }

  // ---- individual checks ----------------------------------------------

  void require_m_primary() {
    if (!is_m_primary(ctx_.ideal(), ctx_.ring()))
      throw Skip{"I is not primary to the maximal ideal"};
  }

  const PresentedModule& gated_module(const std::string& name, bool need_positive_dim,
                                      CheckOutcome& oc) {
    const PresentedModule& m = ctx_.module(name);
    int dim = krull_dim(m);
    oc.inputs.emplace_back("dim_M", std::to_string(dim));
    if (dim < 0) throw Skip{"M is the zero module"};
    if (need_positive_dim && dim == 0) throw Skip{"dim M = 0 violates the hypothesis"};
    return m;
  }

  void check_thm_main(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::vector<std::string> exprs = complex_params(req);
    if (exprs.size() < 2) throw Skip{"needs at least two complexes"};
    gated_module(mname, false, oc);
    std::vector<std::string> used;
    std::optional<int> common;
    std::string ref_expr;
    for (const auto& e : exprs) {
      const FreeComplex& x = ctx_.complex_expr(e);
      if (is_zero_object(x)) continue;  // theorem only constrains nonzero objects
      if (!in_Kbf(x)) throw Skip{"complex " + e + " has infinite-length cohomology"};
      const AdaptiveFit& af = fitdeg(mname, e);
      int deg = stabilized_degree(af, e);
      used.push_back(e);
      if (!common) {
        common = deg;
        ref_expr = e;
        oc.fitted = af.fit;
        oc.samples = af.samples.values;
      } else if (deg != *common) {
        throw FailNow{"degree of " + e + " is " + std::to_string(deg) + ", expected " +
                          std::to_string(*common) + " from " + ref_expr,
                      af.samples.values};
      }
    }
    if (used.size() < 2) throw Skip{"fewer than two nonzero complexes"};
    oc.inputs.emplace_back("complexes", join(used, " "));
    oc.predicted = *common;
    oc.status = CheckStatus::Pass;
  }

  void check_maxdim_family(const CheckRequest& req, CheckOutcome& oc, const std::string& id) {
    std::string mname = module_param(req);
    std::vector<std::string> exprs = complex_params(req);
    if (exprs.size() != 1) throw Skip{"needs exactly one complex"};
    const std::string& e = exprs[0];
    oc.inputs.emplace_back("complex", e);
    require_m_primary();
    const PresentedModule& m = gated_module(mname, true, oc);
    int dim_m = krull_dim(m);
    const FreeComplex& x = ctx_.complex_expr(e);
    if (is_zero_object(x)) throw Skip{"X is the zero object"};

    std::int64_t predicted = 0;
    if (id == "THM-MAXDIM") {
      if (!in_Kbf(x)) throw Skip{"X is not in the finite-length subcategory"};
      predicted = dim_m - 1;
    } else {
      int dim_h = dim_total_homology(x, m);
      oc.inputs.emplace_back("dim_H", std::to_string(dim_h));
      predicted = std::max(dim_h, dim_m - 1);
    }
    oc.predicted = predicted;
    const AdaptiveFit& af = fitdeg(mname, e);
    oc.fitted = af.fit;
    oc.samples = af.samples.values;
    int deg = stabilized_degree(af, e);
    bool ok = id == "BOUND-26" ? deg <= predicted : deg == predicted;
    if (!ok)
      throw FailNow{"fitted degree " + std::to_string(deg) + " vs predicted " +
                        std::to_string(predicted),
                    af.samples.values};
    oc.status = CheckStatus::Pass;
  }

  void check_regcor(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    if (!req.params.contains("l_modules")) throw Skip{"needs l_modules"};
    std::vector<std::string> ls;
    for (const auto& e : req.params["l_modules"]) ls.push_back(e.get<std::string>());
    if (ls.size() < 2) throw Skip{"needs at least two test modules"};
    gated_module(mname, false, oc);
    oc.inputs.emplace_back("l_modules", join(ls, " "));
    std::optional<int> common;
    for (const auto& lname : ls) {
      const PresentedModule& l = ctx_.module(lname);
      int ldim = krull_dim(l);
      if (ldim == -1) throw Skip{lname + " is the zero module"};
      if (ldim > 0) throw Skip{lname + " does not have finite length"};
      for (bool ext : {false, true}) {
        std::string expr = ext ? "dual(resolution(" + lname + "))" : "resolution(" + lname + ")";
        const AdaptiveFit& af = fitdeg(mname, expr);
        int deg = stabilized_degree(af, expr);
        if (!common) {
          common = deg;
          oc.fitted = af.fit;
          oc.samples = af.samples.values;
        } else if (deg != *common) {
          throw FailNow{expr + " fitted " + std::to_string(deg) + " but common degree is " +
                            std::to_string(*common),
                        af.samples.values};
        }
      }
    }
    oc.predicted = *common;
    oc.status = CheckStatus::Pass;
  }

  void check_cmmax(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::string lname = req.params.value("l_module", std::string());
    if (lname.empty()) throw Skip{"needs l_module"};
    oc.inputs.emplace_back("l_module", lname);
    require_m_primary();
    const PresentedModule& m = gated_module(mname, true, oc);
    int dim_m = krull_dim(m);
    const PresentedModule& l = ctx_.module(lname);
    if (is_zero_module(l)) throw Skip{"L is the zero module"};

    std::int64_t predicted = std::max(krull_dim(tensor_modules(m, l)), dim_m - 1);
    oc.predicted = predicted;
    std::string t_expr = "resolution(" + lname + ")";
    std::string e_expr = "dual(resolution(" + lname + "))";
    const AdaptiveFit& tf = fitdeg(mname, t_expr);
    oc.fitted = tf.fit;
    oc.samples = tf.samples.values;
    int t_deg = stabilized_degree(tf, t_expr);
    const AdaptiveFit& ef = fitdeg(mname, e_expr);
    int e_deg = stabilized_degree(ef, e_expr);
    if (t_deg != predicted || e_deg != predicted)
      throw FailNow{"t = " + std::to_string(t_deg) + ", e = " + std::to_string(e_deg) +
                        ", predicted " + std::to_string(predicted),
                    tf.samples.values};
    oc.status = CheckStatus::Pass;
  }

  void check_projsupp(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::string lname = req.params.value("l_module", std::string());
    if (lname.empty()) throw Skip{"needs l_module"};
    oc.inputs.emplace_back("l_module", lname);
    const PresentedModule& m = gated_module(mname, false, oc);
    const PresentedModule& l = ctx_.module(lname);
    if (is_zero_module(l)) throw Skip{"L is the zero module"};
    int tensor_dim = krull_dim(tensor_modules(m, l));
    int ext_dim = dim_total_homology(hom_dual(resolution_of(l)), m);
    oc.inputs.emplace_back("dim_tensor", std::to_string(tensor_dim));
    oc.inputs.emplace_back("dim_ext", std::to_string(ext_dim));
    oc.predicted = tensor_dim;
    if (tensor_dim != ext_dim)
      throw FailNow{"dim(M tensor L) = " + std::to_string(tensor_dim) +
                        " but dim Ext^*(L, M) = " + std::to_string(ext_dim),
                    {}};
    oc.status = CheckStatus::Pass;
  }

  std::int64_t eta_of(const std::string& mname, const std::string& expr, int c) {
    const AdaptiveFit& af = fitdeg(mname, expr);
    if (af.fit.status == FitStatus::NotStabilized)
      throw FailNow{expr + ": fit not_stabilized", af.samples.values};
    return eta_value(af.fit, c);
  }

  void check_wtf(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::vector<std::string> exprs = complex_params(req);
    if (exprs.empty()) throw Skip{"needs complexes"};
    gated_module(mname, false, oc);
    oc.inputs.emplace_back("complexes", join(exprs, " "));

    // Reference degree c from the Koszul complex on the variables.
    std::vector<std::string> var_names = ctx_.ring()->vars;
    std::string ref = "koszul(" + join(var_names, ",") + ")";
    const AdaptiveFit& cref = fitdeg(mname, ref);
    int c = stabilized_degree(cref, ref);
    oc.inputs.emplace_back("c", std::to_string(c));
    oc.fitted = cref.fit;
    oc.samples = cref.samples.values;
    oc.predicted = c;

    // (2) eta(0) = 0.
    if (eta_of(mname, "zero()", c) != 0) throw FailNow{"eta(0) != 0", {}};
    std::vector<std::int64_t> etas;
    for (const auto& e : exprs) {
      const FreeComplex& x = ctx_.complex_expr(e);
      if (!in_Kbf(x)) throw Skip{"complex " + e + " has infinite-length cohomology"};
      std::int64_t v = eta_of(mname, e, c);
      // (1) eta >= 0 holds by construction; asserted for the record.
      if (v < 0) throw FailNow{"eta(" + e + ") < 0", {}};
      etas.push_back(v);
    }
    // (3) additivity and (4) shift invariance.
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      std::string sh = "shift(" + exprs[i] + ",1)";
      if (eta_of(mname, sh, c) != etas[i])
        throw FailNow{"eta not shift-invariant on " + exprs[i], {}};
      if (i + 1 < exprs.size()) {
        std::string sum = "sum(" + exprs[i] + "," + exprs[i + 1] + ")";
        if (eta_of(mname, sum, c) != etas[i] + etas[i + 1])
          throw FailNow{"eta not additive on " + sum, {}};
      }
    }
    // (5) subadditivity on triangles from multiplication maps and zero maps.
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      for (const auto& g : ctx_.ideal()) {
        std::string cn = "cone_mult(" + exprs[i] + "," + to_string(g) + ")";
        if (eta_of(mname, cn, c) > 2 * etas[i])
          throw FailNow{"eta(" + cn + ") > 2 eta(X)", {}};
      }
      if (i + 1 < exprs.size()) {
        // cone of the zero map X -> Y is Y + X[1].
        std::string zc = "sum(" + exprs[i + 1] + ",shift(" + exprs[i] + ",1))";
        if (eta_of(mname, zc, c) > etas[i] + etas[i + 1])
          throw FailNow{"eta(cone(0)) > eta(X) + eta(Y)", {}};
      }
    }
    oc.status = CheckStatus::Pass;
  }

  Samples psi_samples(const std::string& mname, const FreeComplex& x) {
    return sample_psi(x, ctx_.cache_for(mname), 1, n_max_, deadline_);
  }

  void check_subadd(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::vector<std::string> exprs = complex_params(req);
    if (exprs.empty()) throw Skip{"needs complexes"};
    gated_module(mname, false, oc);
    oc.inputs.emplace_back("complexes", join(exprs, " "));
    for (const auto& e : exprs) {
      const FreeComplex& x = ctx_.complex_expr(e);
      Samples sx = psi_samples(mname, x);
      for (const auto& g : ctx_.ideal()) {
        ChainMap f = mult_chain_map(x, g);
        Samples sy = psi_samples(mname, f.target);
        Samples sz = psi_samples(mname, cone(f));
        for (std::size_t k = 0; k < sz.values.size(); ++k)
          if (sz.values[k] > sx.values[k] + sy.values[k])
            throw FailNow{"psi_cone exceeds psi_X + psi_Y at n = " +
                              std::to_string(static_cast<int>(k) + 1) + " for " + e,
                          sz.values};
      }
    }
    oc.status = CheckStatus::Pass;
  }

  void check_subadd2(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::vector<std::string> exprs = complex_params(req);
    if (exprs.empty()) throw Skip{"needs a complex"};
    gated_module(mname, false, oc);
    std::vector<Polynomial> elems = elems_param(req, ctx_, true);
    for (const auto& e : exprs) {
      const FreeComplex& x = ctx_.complex_expr(e);
      Samples sx = psi_samples(mname, x);
      oc.samples = sx.values;
      for (const auto& g : elems) {
        if (g.is_zero()) continue;
        Samples sz = psi_samples(mname, cone(mult_chain_map(x, g)));
        for (std::size_t k = 0; k < sz.values.size(); ++k)
          if (sz.values[k] > 2 * sx.values[k])
            throw FailNow{"psi_cone exceeds 2 psi_X at n = " + std::to_string(static_cast<int>(k) + 1),
                          sz.values};
      }
    }
    oc.status = CheckStatus::Pass;
  }

  void check_nonvanish(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::vector<std::string> exprs = complex_params(req);
    if (exprs.empty()) throw Skip{"needs complexes"};
    gated_module(mname, false, oc);
    // I must be proper for M/I^nM to stay nonzero.
    for (const auto& g : ctx_.ideal())
      if (!g.is_zero() && g.degree() == 0) throw Skip{"I is the unit ideal"};
    oc.inputs.emplace_back("complexes", join(exprs, " "));
    for (const auto& e : exprs) {
      const FreeComplex& x = ctx_.complex_expr(e);
      if (is_zero_object(x)) continue;
      Samples s = psi_samples(mname, x);
      oc.samples = s.values;
      for (std::size_t k = 0; k < s.values.size(); ++k)
        if (s.values[k] <= 0)
          throw FailNow{"psi(" + e + ") vanishes at n = " + std::to_string(static_cast<int>(k) + 1),
                        s.values};
    }
    oc.status = CheckStatus::Pass;
  }

  void check_koszul_top(const CheckRequest& req, CheckOutcome& oc) {
    std::string mname = module_param(req);
    std::vector<Polynomial> elems = elems_param(req, ctx_, true);
    if (elems.empty()) throw Skip{"needs elems"};
    const PresentedModule& m = gated_module(mname, false, oc);
    QuotientCache& q = ctx_.cache_for(mname);
    if (!q.finite_route()) throw Skip{"M/I^nM does not have finite length"};
    std::vector<std::string> enames;
    for (const auto& g : elems) enames.push_back(to_string(g));
    oc.inputs.emplace_back("elems", join(enames, " "));

    FreeComplex k = koszul_complex(ctx_.ring(), elems);
    int top = -static_cast<int>(elems.size());
    std::vector<std::int64_t> tops;
    for (int n = 1; n <= n_max_; ++n) {
      check_deadline(deadline_);
      auto nq = q.finite_at(n);
      std::int64_t top_len = complex_homology_lengths(k, *nq).at(top);
      std::int64_t ann = annihilator_dim(*nq, elems);
      tops.push_back(top_len);
      if (top_len != ann)
        throw FailNow{"top Koszul cohomology " + std::to_string(top_len) +
                          " != annihilator dimension " + std::to_string(ann) + " at n = " +
                          std::to_string(n),
                      tops};
    }
    oc.samples = tops;

    // Lower bound l(I^{n-1}M / I^nM) applies when elems lie in I and form a
    // system of parameters for M.
    GroebnerBasis gbI = ideal_groebner(ctx_.ideal(), ctx_.ring());
    bool inside = true;
    for (const auto& g : elems)
      if (!is_member(to_modvector(g), gbI)) inside = false;
    int dim_m = krull_dim(m);
    bool sop = static_cast<int>(elems.size()) == dim_m;
    if (sop) {
      std::vector<ModVector> rels = m.relations();
      for (const auto& g : elems)
        for (int j = 0; j < m.ambient().rank; ++j) {
          ModVector v = ModVector::zero(ctx_.ring(), m.ambient().rank);
          v.comps[static_cast<std::size_t>(j)] = g;
          rels.push_back(std::move(v));
        }
      sop = krull_dim(PresentedModule(ctx_.ring(), m.ambient(), rels)) <= 0;
    }
    if (inside && sop && dim_m > 0) {
      std::int64_t prev = 0;
      int n0 = -1;
      for (int n = 1; n <= n_max_; ++n) {
        std::int64_t dim_n = q.finite_at(n)->dimension();
        std::int64_t step = dim_n - prev;  // l(I^{n-1}M / I^nM)
        prev = dim_n;
        if (tops[static_cast<std::size_t>(n - 1)] >= step) {
          if (n0 < 0) n0 = n;
        } else {
          n0 = -1;
        }
      }
      if (n0 < 0)
        throw FailNow{"lower bound l(I^{n-1}M/I^nM) never holds through n_max", tops};
      oc.inputs.emplace_back("lower_bound_from", std::to_string(n0));
    } else {
      oc.inputs.emplace_back("lower_bound", "not applicable");
    }
    oc.status = CheckStatus::Pass;
  }

  CheckOutcome run_one(const CheckRequest& req) {
    CheckOutcome oc;
    oc.check = req.id;
    oc.scenario = s_.name;
    oc.inputs.emplace_back("module", module_param(req));
    {
      std::vector<std::string> igens;
      for (const auto& g : ctx_.ideal()) igens.push_back(to_string(g));
      oc.inputs.emplace_back("ideal", join(igens, ", "));
    }
    auto start = std::chrono::steady_clock::now();
    deadline_ = start + opt_.budget;
    try {
      if (req.id == "THM-MAIN") check_thm_main(req, oc);
      else if (req.id == "THM-MAXDIM" || req.id == "THM-MPRIM" || req.id == "BOUND-26")
        check_maxdim_family(req, oc, req.id);
      else if (req.id == "COR-REGCOR") check_regcor(req, oc);
      else if (req.id == "COR-CMMAX") check_cmmax(req, oc);
      else if (req.id == "LEM-PROJSUPP") check_projsupp(req, oc);
      else if (req.id == "PROP-WTF") check_wtf(req, oc);
      else if (req.id == "PROP-SUBADD") check_subadd(req, oc);
      else if (req.id == "PROP-SUBADD2") check_subadd2(req, oc);
      else if (req.id == "PROP-NONVANISH") check_nonvanish(req, oc);
      else if (req.id == "KOSZUL-TOP") check_koszul_top(req, oc);
      else throw Skip{"unknown check id"};
    } catch (const Skip& sk) {
      oc.status = CheckStatus::Skipped;
      oc.reason = sk.reason;
    } catch (const FailNow& f) {
      oc.status = CheckStatus::Fail;
      oc.reason = f.reason;
      if (!f.samples.empty()) oc.samples = f.samples;
    } catch (const TimedOut& t) {
      oc.status = CheckStatus::TimedOutStatus;
      oc.reason = t.what();
    } catch (const Error& e) {
      oc.status = CheckStatus::Fail;
      oc.reason = std::string("engine error: ") + e.what();
    }
    oc.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return oc;
  }

  const Scenario& s_;
  RunOptions opt_;
  ScenarioContext ctx_;
  std::optional<ScenarioContext> ctx2_;
  int n_max_ = 8;
  int window_ = 4;
  Deadline deadline_;
  std::map<std::pair<std::string, std::string>, AdaptiveFit> memo_;
  std::map<std::pair<std::string, std::string>, AdaptiveFit> memo2_;
};

}  // namespace

std::vector<CheckOutcome> run_checks(const Scenario& s, const RunOptions& opt) {
  CheckRunner runner(s, opt);
  return runner.run();
}

bool any_failure(const std::vector<CheckOutcome>& outcomes) {
  for (const auto& o : outcomes)
    if (o.status == CheckStatus::Fail || o.status == CheckStatus::TimedOutStatus) return true;
  return false;
}

}  // namespace hilbtor
