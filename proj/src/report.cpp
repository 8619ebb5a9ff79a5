#include "lcmlab/report.hpp"

#include <algorithm>
#include <tuple>

namespace lcmlab {

using nlohmann::json;

json grid_config_json(const GridSpec& spec) {
  // the worker count deliberately stays out: reports from different --jobs
  // settings must compare equal
  return json{{"pmax", spec.pmax},
              {"qmax", spec.qmax},
              {"r0max", spec.r0max},
              {"r1max", spec.r1max},
              {"cert_nmax", spec.cert_nmax},
              {"ident_nmax", spec.ident_nmax},
              {"dif_max", spec.dif_max},
              {"gcd_mmax", spec.gcd_mmax},
              {"pf_windows", spec.pf_windows},
              {"pf_span", spec.pf_span},
              {"e15_nmax", spec.e15_nmax},
              {"bound_nmax", spec.bound_nmax},
              {"bound_coeff_max", spec.bound_coeff_max},
              {"bf_nmax", spec.bf_nmax},
              {"seed", spec.seed}};
}

json suite_results_json(const std::vector<SuiteResult>& suites, const GridSpec& spec) {
  std::vector<const CellOutcome*> rows;
  unsigned long long cells = 0, failures = 0, skipped = 0;
  for (const SuiteResult& s : suites) {
    cells += s.cells;
    failures += s.failures;
    skipped += s.skipped;
    for (const CellOutcome& r : s.rows) rows.push_back(&r);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CellOutcome* a, const CellOutcome* b) {
    return std::tie(a->suite, a->key) < std::tie(b->suite, b->key);
  });
  json results = json::array();
  for (const CellOutcome* r : rows) {
    json row{{"suite", r->suite},
             {"key", r->key},
             {"cells", r->cells},
             {"failures", r->failures},
             {"skipped", r->skipped}};
    if (!r->first_failure.empty()) row["first_failure"] = r->first_failure;
    results.push_back(std::move(row));
  }
  return json{{"config", grid_config_json(spec)},
              {"results", std::move(results)},
              {"summary",
               {{"pass", cells - failures},
                {"fail", failures},
                {"skipped_zero_windows", skipped}}}};
}

json certificate_json(const DivisorCertificate& cert) {
  return json{{"k", cert.k},
              {"n", cert.n},
              {"lcm", to_string(cert.lcm_value)},
              {"divisor", to_string(cert.divisor)},
              {"quotient", to_string(cert.quotient)},
              {"valid", cert.valid}};
}

json identity_report_json(const IdentityReport& rep) {
  json out{{"identity", tag_label(rep.tag)},
           {"P", rep.P},
           {"Q", rep.Q},
           {"R0", rep.R0},
           {"R1", rep.R1},
           {"lo", rep.lo},
           {"hi", rep.hi},
           {"lhs", to_string(rep.lhs)},
           {"rhs", to_string(rep.rhs)},
           {"pass", rep.pass}};
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

json bound_report_json(const BoundReport& rep, int digits) {
  json inputs;
  for (const auto& [name, value] : rep.inputs) inputs[name] = value;
  json out{{"theorem", rep.theorem},
           {"inputs", std::move(inputs)},
           {"m", rep.m},
           {"n", rep.n},
           {"lcm", to_string(rep.lcm_value)},
           {"log_lcm", rep.log_lcm.str(digits)},
           {"log_bound", rep.log_bound.str(digits)},
           {"slack", rep.slack.str(digits)},
           {"t_const", rep.t_const.str(digits)},
           {"verdict", rep.verdict},
           {"exact_comparison", rep.exact_comparison},
           {"precision_bits", static_cast<long>(rep.precision_bits)}};
  if (rep.slack_upper) out["slack_upper"] = rep.slack_upper->str(digits);
  return out;
}

json ratio_point_json(const RatioPoint& point, int digits) {
  return json{{"n", point.n},
              {"log_num", point.numerator_log.str(digits)},
              {"log_den", point.denominator_log.str(digits)},
              {"ratio", point.ratio.str(digits)}};
}

std::string ratio_series_csv(const std::vector<RatioPoint>& points, int digits) {
  std::string out = "n,ratio_lo,ratio_hi\n";
  for (const RatioPoint& p : points) {
    out += std::to_string(p.n);
    out += ',';
    out += p.ratio.lo_str(digits);
    out += ',';
    out += p.ratio.hi_str(digits);
    out += '\n';
  }
  return out;
}

}  // namespace lcmlab
