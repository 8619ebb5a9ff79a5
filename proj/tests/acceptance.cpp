// Acceptance harness: runs every published criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion.  Exits nonzero if any
// criterion fails.  argv[1] must be the path to the lcmlab CLI binary (used
// by the end-to-end determinism check).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lcmlab/bounds.hpp"
#include "lcmlab/grid.hpp"
#include "lcmlab/report.hpp"

using namespace lcmlab;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  va_list args;
  va_start(args, f);
  char buf[512];
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

// criterion 1: divisor certificates across the full scope grid, n <= 25
void criterion1() {
  GridSpec spec;
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult cert = run_cert_grid(spec);
  double dt = seconds_since(t0);
  bool ok = cert.failures == 0 && dt < 60.0;
  report(1, ok,
         fmt("certificate grid: %llu windows, %llu failures, %llu skipped (zero terms), %.2fs "
             "(budget 60s)",
             cert.cells, cert.failures, cert.skipped, dt));
}

// criterion 2: the four window identities on the Lucas-scope grid, n <= 40
void criterion2() {
  GridSpec spec;
  unsigned long long cells = 0, failures = 0;
  std::string detail;
  for (IdentityTag tag : {IdentityTag::CO, IdentityTag::CO2, IdentityTag::TRI, IdentityTag::DERRR}) {
    SuiteResult r = run_identity_grid(spec, tag);
    cells += r.cells;
    failures += r.failures;
    detail += fmt("%s%s %llu", detail.empty() ? "" : ", ", tag_label(tag), r.cells);
  }
  report(2, failures == 0,
         fmt("window identities: %llu checks (%s), %llu failures", cells, detail.c_str(),
             failures));
}

// criterion 3: case-split lemma, sampled partial fractions, gcd lemmas to
// m = 200, exponent divisibility to n = 25
void criterion3() {
  GridSpec spec;
  SuiteResult dif = run_dif_grid(spec);
  SuiteResult pf = run_pf_grid(spec);
  SuiteResult gcd = run_gcd_grid(spec);
  SuiteResult e15 = run_e15_grid(spec);
  unsigned long long failures = dif.failures + pf.failures + gcd.failures + e15.failures;
  report(3, failures == 0,
         fmt("lemma suite: dif %llu, pf %llu, gcd %llu, exponent %llu checks, %llu failures",
             dif.cells, pf.cells, gcd.cells, e15.cells, failures));
}

// criterion 4: certified lower bounds on their full hypothesis grids, and
// the two-sided Fibonacci sandwich to n = 200
void criterion4() {
  GridSpec spec;
  SuiteResult t2 = run_bound_t2_grid(spec);
  SuiteResult t6 = run_bound_t6_grid(spec);
  SuiteResult t3 = run_bound_t3_grid(spec);
  SuiteResult bf = run_bf_range(spec);
  unsigned long long failures = t2.failures + t6.failures + t3.failures + bf.failures;
  report(4, failures == 0,
         fmt("bound grids: t2 %llu, t6 %llu, t3 %llu cells, sandwich n<=%lu, %llu failures",
             t2.cells, t6.cells, t3.cells, spec.bf_nmax, failures));
}

// criterion 5: product/lcm ratio against pi^2/6 at n = 100, 200, 500
void criterion5() {
  RecurrenceParams fib = validate(1, -1, 0, 1);
  auto t0 = std::chrono::steady_clock::now();
  const double target = pi_interval().mid() * pi_interval().mid() / 6.0;
  std::vector<double> dev;
  double r500 = 0.0;
  for (unsigned long n : {100UL, 200UL, 500UL}) {
    auto [point, est] = ratio_akiyama(fib, n);
    dev.push_back(std::fabs(point.ratio.mid() - target));
    if (n == 500) r500 = point.ratio.mid();
  }
  double dt = seconds_since(t0);
  bool decreasing = dev[0] > dev[1] && dev[1] > dev[2];
  bool within = std::fabs(r500 - target) <= 0.02 * target;
  bool ok = decreasing && within && dt < 30.0;
  report(5, ok,
         fmt("product/lcm ratio: n=500 gives %.7f vs pi^2/6 = %.7f (%.3f%% off, budget 2%%); "
             "deviations %.6f > %.6f > %.6f %s; %.2fs (budget 30s)",
             r500, target, 100.0 * std::fabs(r500 - target) / target, dev[0], dev[1], dev[2],
             decreasing ? "strictly decreasing" : "NOT DECREASING", dt));
}

// criterion 6: consecutive-window ratios for m = 1, 2, 3
void criterion6() {
  RecurrenceParams fib = validate(1, -1, 0, 1);
  bool ok = true;
  std::string detail = "second ratio at n=300:";
  for (unsigned long m : {1UL, 2UL, 3UL}) {
    auto [first, second] = ratio_t7(fib, m, 300);
    double mid = second.ratio.mid();
    detail += fmt(" m=%lu %.5f", m, mid);
    if (std::fabs(mid - 1.0) > 0.01) ok = false;
    // first ratio <= 1 at sampled n across the range
    for (unsigned long n : {10UL, 50UL, 100UL, 200UL, 300UL}) {
      auto [f, s] = ratio_t7(fib, m, n);
      if (f.ratio.lo() > 1.0) {
        ok = false;
        detail += fmt(" [first ratio > 1 at m=%lu n=%lu]", m, n);
      }
    }
  }
  report(6, ok, detail + " (all within 1% of 1; first ratio <= 1 throughout)");
}

// criterion 7: growth-rate scan >= 1 on 40..120 and near 12/pi^2 at n = 400
void criterion7() {
  RecurrenceParams fib = validate(1, -1, 0, 1);
  std::vector<unsigned long> ns;
  for (unsigned long n = 40; n <= 120; ++n) ns.push_back(n);
  std::vector<RatioPoint> pts = theorem4_scan(fib, ns);
  bool all_geq = true;
  double worst = 1e9;
  for (const RatioPoint& p : pts) {
    worst = std::min(worst, p.ratio.lo());
    if (p.ratio.lo() < 1.0) all_geq = false;
  }
  double target = 12.0 / (pi_interval().mid() * pi_interval().mid());
  double r400 = theorem4_scan(fib, {400})[0].ratio.mid();
  bool near = std::fabs(r400 - target) <= 0.03 * target;
  report(7, all_geq && near,
         fmt("growth-rate scan: min ratio %.6f on n=40..120 (needs >= 1); n=400 gives %.6f vs "
             "12/pi^2 = %.6f (%.3f%% off, budget 3%%)",
             worst, r400, target, 100.0 * std::fabs(r400 - target) / target));
}

// criterion 8: the kappa correction for (P,Q) = (4,2)
void criterion8() {
  RecurrenceParams p42 = validate(4, 2, 0, 1);
  auto [point, est] = ratio_akiyama(p42, 400);
  bool kappa_ok = est.kappa.lo() >= 0.2813 && est.kappa.hi() <= 0.2833;
  double predicted = est.predicted_limit.mid();
  double ratio = point.ratio.mid();
  bool near = std::fabs(ratio - predicted) <= 0.05 * predicted;
  report(8, kappa_ok && near,
         fmt("kappa correction: kappa in [%.6f, %.6f] (needs [0.2813, 0.2833]); ratio at n=400 "
             "%.6f vs predicted %.6f (%.3f%% off, budget 5%%)",
             est.kappa.lo(), est.kappa.hi(), ratio, predicted,
             100.0 * std::fabs(ratio - predicted) / predicted));
}

// criterion 9: end-to-end determinism of `verify all` across worker counts
void criterion9(const char* cli) {
  if (cli == nullptr) {
    report(9, false, "determinism: CLI path missing (pass the lcmlab binary as argv[1])");
    return;
  }
  std::string out8 = "acceptance_jobs8.json";
  std::string out1 = "acceptance_jobs1.json";
  std::string cmd8 = std::string(cli) + " verify all --grid default --jobs 8 --json > " + out8;
  std::string cmd1 = std::string(cli) + " verify all --grid default --jobs 1 --json > " + out1;
  int rc8 = std::system(cmd8.c_str());
  int rc1 = std::system(cmd1.c_str());
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp(out8);
  std::string b = slurp(out1);
  bool ok = rc8 == 0 && rc1 == 0 && !a.empty() && a == b;
  std::remove(out8.c_str());
  std::remove(out1.c_str());
  report(9, ok,
         fmt("determinism: verify all with 8 workers vs 1 worker -> %zu vs %zu bytes, %s "
             "(exit %d/%d)",
             a.size(), b.size(), a == b ? "byte-identical" : "DIFFER", rc8, rc1));
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(cli);
  if (g_failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
