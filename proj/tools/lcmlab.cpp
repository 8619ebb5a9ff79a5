// lcmlab: exact terms, windowed lcms, U-binomials, divisor certificates,
// identity/bound verification grids, and asymptotic ratio series for binary
// linear recurrences.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcmlab/report.hpp"

namespace {

using namespace lcmlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;      // a verification or bound check failed
constexpr int kExitBadInput = 2;  // unparseable flags or rejected hypotheses

struct ParamFlags {
  long P = 0, Q = 0, R0 = 0, R1 = 1;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p, bool with_r = true) {
  cmd->add_option("--P", p.P, "recurrence coefficient P")->required();
  cmd->add_option("--Q", p.Q, "recurrence coefficient Q")->required();
  if (with_r) {
    cmd->add_option("--R0", p.R0, "initial term R0");
    cmd->add_option("--R1", p.R1, "initial term R1");
  }
}

void add_grid_flags(CLI::App* cmd, GridSpec& g) {
  cmd->add_option("--pmax", g.pmax, "grid bound for |P|");
  cmd->add_option("--qmax", g.qmax, "grid bound for |Q|");
  cmd->add_option("--r0max", g.r0max, "grid bound for |R0|");
  cmd->add_option("--r1max", g.r1max, "grid bound for |R1|");
  cmd->add_option("--cert-nmax", g.cert_nmax, "certificate window bound");
  cmd->add_option("--ident-nmax", g.ident_nmax, "identity window bound");
  cmd->add_option("--dif-max", g.dif_max, "index bound for the case-split lemma");
  cmd->add_option("--gcd-mmax", g.gcd_mmax, "index bound for the coprimality lemmas");
  cmd->add_option("--pf-windows", g.pf_windows, "number of sampled decomposition windows");
  cmd->add_option("--pf-span", g.pf_span, "max n-k of sampled windows");
  cmd->add_option("--e15-nmax", g.e15_nmax, "exponent-relation window bound");
  cmd->add_option("--bound-nmax", g.bound_nmax, "bound-grid n limit");
  cmd->add_option("--bound-coeff-max", g.bound_coeff_max, "bound-grid coefficient limit");
  cmd->add_option("--bf-nmax", g.bf_nmax, "Fibonacci sandwich n limit");
  cmd->add_option("--seed", g.seed, "seed for sampled windows");
  cmd->add_option("--jobs", g.jobs, "worker threads");
}

void print_suite_text(const SuiteResult& s) {
  std::cout << s.suite << ": " << s.cells << " checks, " << s.failures << " failures, "
            << s.skipped << " skipped";
  if (s.failures > 0) {
    for (const CellOutcome& row : s.rows)
      if (row.failures > 0) {
        std::cout << "\n  first failure: " << row.key << " — " << row.first_failure;
        break;
      }
  }
  std::cout << '\n';
}

int emit_suites(const std::vector<SuiteResult>& suites, const GridSpec& grid, bool as_json) {
  unsigned long long failures = 0;
  for (const SuiteResult& s : suites) failures += s.failures;
  if (as_json) {
    std::cout << suite_results_json(suites, grid).dump(2) << '\n';
  } else {
    for (const SuiteResult& s : suites) print_suite_text(s);
    std::cout << (failures == 0 ? "all checks passed" : "FAILURES PRESENT") << '\n';
  }
  return failures == 0 ? kExitPass : kExitFail;
}

int print_bound_report(const BoundReport& rep, bool as_json) {
  if (as_json) {
    std::cout << bound_report_json(rep).dump(2) << '\n';
  } else {
    std::cout << rep.theorem << " at m=" << rep.m << " n=" << rep.n << '\n'
              << "  lcm       = " << to_string(rep.lcm_value) << '\n'
              << "  log lcm   = " << rep.log_lcm.str() << '\n'
              << "  log bound = " << rep.log_bound.str() << '\n'
              << "  slack     = " << rep.slack.str()
              << (rep.exact_comparison ? "  (decided exactly)" : "") << '\n';
    if (rep.slack_upper)
      std::cout << "  upper slack = " << rep.slack_upper->str() << '\n';
    std::cout << "  verdict   = " << (rep.verdict ? "certified" : "NOT certified") << '\n';
  }
  return rep.verdict ? kExitPass : kExitFail;
}

std::vector<unsigned long> series_values(unsigned long from, unsigned long to,
                                         unsigned long step) {
  if (from == 0 || to < from || step == 0)
    throw CLI::ValidationError("--from/--to/--step must describe a nonempty range");
  std::vector<unsigned long> out;
  for (unsigned long n = from; n <= to; n += step) out.push_back(n);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lcm laboratory for binary linear recurrences"};
  app.require_subcommand(1);

  ParamFlags par;
  GridSpec grid;
  bool as_json = false, as_csv = false;
  long precision = 0;
  unsigned long arg_n = 0, arg_k = 0, arg_m = 0, arg_from = 0, arg_to = 0, arg_step = 1;
  long arg_q = 0, arg_u0 = 0, arg_r = 0, arg_c = 0, arg_d = 0;
  std::string suite_name, grid_name = "default";
  bool run_grid = false;

  app.add_flag("--json", as_json, "emit JSON");
  app.add_flag("--csv", as_csv, "emit CSV (ratio series)");
  app.add_option("--precision", precision, "precision cap in bits for interval refinement");

  auto* cmd_term = app.add_subcommand("term", "print R_n");
  add_param_flags(cmd_term, par);
  cmd_term->add_option("--n", arg_n, "index")->required();

  auto* cmd_lcm = app.add_subcommand("lcm", "print lcm(R_from..R_to)");
  add_param_flags(cmd_lcm, par);
  cmd_lcm->add_option("--from", arg_from, "window start")->required();
  cmd_lcm->add_option("--to", arg_to, "window end")->required();

  auto* cmd_ubinom = app.add_subcommand("ubinom", "print the U-binomial C_U(n,k)");
  add_param_flags(cmd_ubinom, par, /*with_r=*/false);
  cmd_ubinom->add_option("--n", arg_n)->required();
  cmd_ubinom->add_option("--k", arg_k)->required();

  auto* cmd_lcmbinom = app.add_subcommand("lcmbinom", "print the lcm-binomial {n k}_U");
  add_param_flags(cmd_lcmbinom, par, /*with_r=*/false);
  cmd_lcmbinom->add_option("--n", arg_n)->required();
  cmd_lcmbinom->add_option("--k", arg_k)->required();

  auto* cmd_cert = app.add_subcommand("cert", "exact divisor certificate for lcm(R_k..R_n)");
  add_param_flags(cmd_cert, par);
  cmd_cert->add_option("--k", arg_k)->required();
  cmd_cert->add_option("--n", arg_n)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run verification grids");
  cmd_verify
      ->add_option("suite", suite_name,
                   "co|co2|tri|derrr|dif|pf|gcd|e15|cert|all (all = the seven lemma/identity suites)")
      ->required();
  cmd_verify->add_option("--grid", grid_name, "grid preset (only 'default')");
  add_grid_flags(cmd_verify, grid);

  auto* cmd_bound = app.add_subcommand("bound", "evaluate a certified lower bound");
  cmd_bound->add_option("suite", suite_name, "t2|t6|t3|bf")->required();
  cmd_bound->add_flag("--run-grid", run_grid, "sweep the full hypothesis grid instead");
  add_grid_flags(cmd_bound, grid);
  cmd_bound->add_option("--P", par.P);
  cmd_bound->add_option("--Q", par.Q);
  cmd_bound->add_option("--R0", par.R0);
  cmd_bound->add_option("--R1", par.R1);
  cmd_bound->add_option("--c", arg_c, "combination coefficient of U_{i+1}");
  cmd_bound->add_option("--d", arg_d, "combination coefficient of U_i");
  cmd_bound->add_option("--q", arg_q, "q-integer base");
  cmd_bound->add_option("--u0", arg_u0, "arithmetic start");
  cmd_bound->add_option("--r", arg_r, "arithmetic step");
  cmd_bound->add_option("--m", arg_m, "window start");
  cmd_bound->add_option("--n", arg_n, "window end");

  auto* cmd_ratio = app.add_subcommand("ratio", "asymptotic ratio estimators");
  cmd_ratio->add_option("suite", suite_name, "t7|akiyama|t4")->required();
  add_param_flags(cmd_ratio, par);
  cmd_ratio->add_option("--m", arg_m, "window span (t7)");
  cmd_ratio->add_option("--n", arg_n, "single evaluation point");
  cmd_ratio->add_option("--from", arg_from, "series start");
  cmd_ratio->add_option("--to", arg_to, "series end");
  cmd_ratio->add_option("--step", arg_step, "series step");

  auto* cmd_explore = app.add_subcommand("explore", "(n,k) where the lcm-binomial equals |C_U(n,k)|");
  add_param_flags(cmd_explore, par, /*with_r=*/false);
  cmd_explore->add_option("--nmax", arg_n, "search bound")->required();

  // let --json/--csv/--precision appear after the subcommand name as well
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return kExitBadInput;
  }

  if (precision > 0) {
    // the interval layer reads the cap once, before any computation has run
    setenv("LCMLAB_PREC_CAP", std::to_string(precision).c_str(), 1);
  }

  try {
    if (cmd_term->parsed()) {
      std::cout << to_string(term(validate(par.P, par.Q, par.R0, par.R1), arg_n)) << '\n';
      return kExitPass;
    }
    if (cmd_lcm->parsed()) {
      std::cout << to_string(
                       lcm_range(validate(par.P, par.Q, par.R0, par.R1), arg_from, arg_to))
                << '\n';
      return kExitPass;
    }
    if (cmd_ubinom->parsed()) {
      const UBinomial b = u_binomial(validate(par.P, par.Q, 0, 1), arg_n, arg_k);
      std::cout << to_string(b.value) << (b.integral ? "" : "  (non-integer)") << '\n';
      return kExitPass;
    }
    if (cmd_lcmbinom->parsed()) {
      std::cout << to_string(lcm_binomial(validate(par.P, par.Q, 0, 1), arg_n, arg_k)) << '\n';
      return kExitPass;
    }
    if (cmd_cert->parsed()) {
      const DivisorCertificate cert =
          theorem1_certificate(validate(par.P, par.Q, par.R0, par.R1), arg_k, arg_n);
      if (as_json) {
        std::cout << certificate_json(cert).dump(2) << '\n';
      } else {
        std::cout << "lcm      = " << to_string(cert.lcm_value) << '\n'
                  << "divisor  = " << to_string(cert.divisor) << '\n'
                  << "quotient = " << to_string(cert.quotient) << '\n'
                  << "valid    = " << (cert.valid ? "yes" : "NO") << '\n';
      }
      return cert.valid ? kExitPass : kExitFail;
    }
    if (cmd_verify->parsed()) {
      if (grid_name != "default")
        throw std::invalid_argument("unknown grid preset '" + grid_name + "'");
      std::vector<SuiteResult> suites;
      if (suite_name == "all") {
        for (const std::string& s : verify_all_suites()) suites.push_back(*run_suite(s, grid));
      } else {
        auto one = run_suite(suite_name, grid);
        if (!one || suite_name == "t2" || suite_name == "t6" || suite_name == "t3" ||
            suite_name == "bf")
          throw std::invalid_argument("unknown verify suite '" + suite_name + "'");
        suites.push_back(std::move(*one));
      }
      return emit_suites(suites, grid, as_json);
    }
    if (cmd_bound->parsed()) {
      if (run_grid) {
        if (suite_name != "t2" && suite_name != "t6" && suite_name != "t3" &&
            suite_name != "bf")
          throw std::invalid_argument("unknown bound suite '" + suite_name + "'");
        std::vector<SuiteResult> suites{*run_suite(suite_name, grid)};
        return emit_suites(suites, grid, as_json);
      }
      BoundReport rep;
      if (suite_name == "t2")
        rep = bound_t2(par.P, par.Q, arg_c, arg_d, arg_m, arg_n);
      else if (suite_name == "t6")
        rep = bound_t6(validate(par.P, par.Q, par.R0, par.R1), arg_m, arg_n);
      else if (suite_name == "t3")
        rep = bound_t3(arg_q, arg_u0, arg_r, arg_m, arg_n);
      else if (suite_name == "bf")
        rep = check_bousla_farhi(arg_n);
      else
        throw std::invalid_argument("unknown bound suite '" + suite_name + "'");
      return print_bound_report(rep, as_json);
    }
    if (cmd_ratio->parsed()) {
      const RecurrenceParams params = validate(par.P, par.Q, par.R0, par.R1);
      if (suite_name == "t7") {
        if (arg_n == 0) throw std::invalid_argument("ratio t7 needs --n");
        auto [first, second] = ratio_t7(params, arg_m, arg_n);
        if (as_json) {
          nlohmann::json out{{"first", ratio_point_json(first)},
                             {"second", ratio_point_json(second)}};
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << "first  (lcm vs product)      = " << first.ratio.str(12) << '\n'
                    << "second (lcm vs n(m+1)log a)  = " << second.ratio.str(12) << '\n';
        }
        return kExitPass;
      }
      std::vector<unsigned long> ns;
      if (arg_from != 0)
        ns = series_values(arg_from, arg_to, arg_step);
      else if (arg_n != 0)
        ns.push_back(arg_n);
      else
        throw std::invalid_argument("ratio needs --n or --from/--to");
      std::vector<RatioPoint> points;
      if (suite_name == "akiyama") {
        for (unsigned long n : ns) points.push_back(ratio_akiyama(params, n).first);
      } else if (suite_name == "t4") {
        points = theorem4_scan(params, ns);
      } else {
        throw std::invalid_argument("unknown ratio suite '" + suite_name + "'");
      }
      if (as_csv) {
        std::cout << ratio_series_csv(points);
      } else if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const RatioPoint& p : points) arr.push_back(ratio_point_json(p));
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const RatioPoint& p : points)
          std::cout << "n=" << p.n << "  ratio = " << p.ratio.str(12) << '\n';
      }
      return kExitPass;
    }
    if (cmd_explore->parsed()) {
      const auto hits = explore_equality(validate(par.P, par.Q, 0, 1), arg_n);
      for (const auto& [n, k] : hits) std::cout << "n=" << n << " k=" << k << '\n';
      std::cout << hits.size() << " equalities up to n=" << arg_n << '\n';
      return kExitPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
