#include "hilbtor/report.hpp"

#include <iomanip>
#include <sstream>

namespace hilbtor {

namespace {

Json fitted_json(const CheckOutcome& o) {
  if (!o.fitted) return nullptr;
  Json f;
  f["status"] = to_string(o.fitted->status);
  if (o.fitted->status == FitStatus::Stabilized) {
    f["degree"] = o.fitted->degree;
    f["leading_diff"] = o.fitted->leading_diff;
    f["stable_from"] = o.fitted->stable_from;
  } else {
    f["degree"] = nullptr;
    f["leading_diff"] = nullptr;
    f["stable_from"] = nullptr;
  }
  return f;
}

std::string inputs_oneline(const CheckOutcome& o) {
  std::string s;
  for (const auto& [k, v] : o.inputs) {
    if (!s.empty()) s += " ";
    s += k + "=" + v;
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

Json report_json(const ReportMeta& meta, const std::vector<CheckOutcome>& outcomes) {
  Json j;
  j["meta"] = Json{{"version", meta.version}, {"seed", meta.seed}, {"char", meta.characteristic}};
  Json arr = Json::array();
  for (const auto& o : outcomes) {
    Json jo;
    jo["check"] = o.check;
    Json inputs;
    inputs["scenario"] = o.scenario;
    for (const auto& [k, v] : o.inputs) inputs[k] = v;
    jo["inputs"] = std::move(inputs);
    jo["fitted"] = fitted_json(o);
    jo["predicted"] = o.predicted ? Json(*o.predicted) : Json(nullptr);
    jo["status"] = to_string(o.status);
    if (!o.reason.empty()) jo["reason"] = o.reason;
    jo["samples"] = o.samples;
    jo["millis"] = o.millis;
    arr.push_back(std::move(jo));
  }
  j["outcomes"] = std::move(arr);
  return j;
}

std::string emit_report(const ReportMeta& meta, const std::vector<CheckOutcome>& outcomes,
                        ReportFormat format) {
  if (format == ReportFormat::JsonFormat) {
    return report_json(meta, outcomes).dump(2) + "\n";
  }
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "check,scenario,status,fitted_degree,leading_diff,predicted,millis,reason,inputs\n";
    for (const auto& o : outcomes) {
      out << o.check << ',' << csv_quote(o.scenario) << ',' << to_string(o.status) << ',';
      if (o.fitted && o.fitted->status == FitStatus::Stabilized)
        out << o.fitted->degree << ',' << o.fitted->leading_diff << ',';
      else
        out << ",,";
      if (o.predicted) out << *o.predicted;
      out << ',' << o.millis << ',' << csv_quote(o.reason) << ',' << csv_quote(inputs_oneline(o))
          << '\n';
    }
    return out.str();
  }
  // text table
  std::ostringstream out;
  out << std::left << std::setw(14) << "check" << std::setw(22) << "scenario" << std::setw(10)
      << "status" << std::setw(8) << "fitted" << std::setw(10) << "predicted" << std::setw(8)
      << "ms" << "detail\n";
  for (const auto& o : outcomes) {
    std::string fitted = "-";
    if (o.fitted) {
      fitted = o.fitted->status == FitStatus::Stabilized ? std::to_string(o.fitted->degree)
                                                         : to_string(o.fitted->status);
    }
    std::string detail = o.reason.empty() ? inputs_oneline(o) : o.reason;
    out << std::left << std::setw(14) << o.check << std::setw(22) << o.scenario << std::setw(10)
        << to_string(o.status) << std::setw(8) << fitted << std::setw(10)
        << (o.predicted ? std::to_string(*o.predicted) : std::string("-")) << std::setw(8)
        << o.millis << detail << '\n';
  }
  int pass = 0, fail = 0, skip = 0, timeout = 0;
  for (const auto& o : outcomes) {
    switch (o.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Skipped: ++skip; break;
      case CheckStatus::TimedOutStatus: ++timeout; break;
    }
  }
  out << pass << " pass, " << fail << " fail, " << skip << " skipped, " << timeout
      << " timed out\n";
  return out.str();
}

}  // namespace hilbtor
