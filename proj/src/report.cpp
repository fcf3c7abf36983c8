#include <sstream>

#include <json.hpp>

#include "askey/suites.hpp"

namespace askey {

namespace {

using nlohmann::ordered_json;

ordered_json grid_json(const SuiteGrid& g) {
  ordered_json j;
  ordered_json qs = ordered_json::array();
  for (const QParams& qp : g.grid.qparams) qs.push_back(qp.str());
  ordered_json as = ordered_json::array();
  for (const Rat& a : g.grid.alphas) as.push_back(a.str());
  j["qparams"] = qs;
  j["alphas"] = as;
  j["qLmax"] = g.grid.q_lmax;
  j["classicalLmax"] = g.grid.classical_lmax;
  j["mmax"] = g.mmax;
  return j;
}

ordered_json check_json(const SuiteEntry& e) {
  const CheckReport& r = e.report;
  ordered_json j;
  j["id"] = r.id;
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = p;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = {{"location", r.witness->location}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  if (r.residual) j["residual"] = *r.residual;
  if (!r.message.empty()) j["message"] = r.message;
  if (e.limit) {
    j["schedule"] = e.limit->schedule;
    j["errors"] = e.limit->errors;
    j["ratios"] = e.limit->ratios;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ReportDocument::render(Format f) const {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["version"] = kToolVersion;
      j["suite"] = suite;
      j["grid"] = grid_json(grid);
      ordered_json cs = ordered_json::array();
      for (const auto& e : checks) cs.push_back(check_json(e));
      j["checks"] = cs;
      j["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"error", summary.error}};
      j["wallTimeMs"] = wall_time_ms;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::text: {
      for (const auto& e : checks) {
        const CheckReport& r = e.report;
        os << to_string(r.verdict) << "  " << r.id;
        if (!r.params.empty()) os << "  " << r.params_text();
        os << "\n";
        if (r.witness) {
          os << "    at " << r.witness->location << "\n    lhs " << r.witness->lhs << "\n    rhs " << r.witness->rhs
             << "\n";
        }
        if (r.verdict != Verdict::pass && r.residual) os << "    residual " << *r.residual << "\n";
        if (!r.message.empty()) os << "    " << r.message << "\n";
        if (e.limit && r.verdict != Verdict::pass) os << e.limit->to_text();
      }
      os << "suite " << suite << ": " << summary.pass << " pass, " << summary.fail << " fail, " << summary.error
         << " error (" << wall_time_ms << " ms)\n";
      break;
    }
    case Format::csv: {
      os << "id,params,verdict,location,lhs,rhs,residual,message\n";
      for (const auto& e : checks) {
        const CheckReport& r = e.report;
        os << csv_field(r.id) << ',' << csv_field(r.params_text()) << ',' << to_string(r.verdict) << ','
           << csv_field(r.witness ? r.witness->location : "") << ',' << csv_field(r.witness ? r.witness->lhs : "")
           << ',' << csv_field(r.witness ? r.witness->rhs : "") << ',' << csv_field(r.residual.value_or("")) << ','
           << csv_field(r.message) << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace askey
