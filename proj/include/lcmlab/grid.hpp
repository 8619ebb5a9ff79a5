#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcmlab/identities.hpp"
#include "lcmlab/integers.hpp"

namespace lcmlab {

// Parameter ranges swept by the verification grids.  Defaults match the
// published acceptance envelope; every field can be overridden from the CLI.
struct GridSpec {
  long pmax = 6;        // |P| <= pmax
  long qmax = 6;        // |Q| <= qmax
  long r0max = 5;       // |R0| <= r0max
  long r1max = 5;       // |R1| <= r1max
  unsigned long cert_nmax = 25;   // divisor certificates: 1 <= k <= n <= cert_nmax
  unsigned long ident_nmax = 40;  // co/co2/tri/derrr windows
  unsigned long dif_max = 60;     // dif identity: 1 <= i, j <= dif_max
  unsigned long gcd_mmax = 200;   // gcd lemmas: index bound
  unsigned long pf_windows = 500; // random partial-fraction windows
  unsigned long pf_span = 12;     // n - k <= pf_span for sampled windows
  unsigned long e15_nmax = 25;    // exponent-divisibility windows
  unsigned long bound_nmax = 30;  // t2/t6/t3 grids
  long bound_coeff_max = 6;       // c, d, R0, R1, u0, r sweep in bound grids
  unsigned long bf_nmax = 200;    // Fibonacci sandwich range
  std::uint64_t seed = 0x5eed1cab5eed1cabULL;
  unsigned jobs = 1;
};

// One aggregated grid row: a parameter tuple together with how many cells
// (windows, index pairs, ...) it covered and what, if anything, failed.
struct CellOutcome {
  std::string suite;              // "cert", "co", ..., "t2", "bf"
  std::string key;                // sortable cell key, e.g. "P=1 Q=-1 R0=0 R1=1"
  unsigned long cells = 0;        // checks performed for this tuple
  unsigned long failures = 0;     // checks that failed
  unsigned long skipped = 0;      // windows skipped (zero term inside)
  std::string first_failure;      // human-readable detail of the first failure
};

struct SuiteResult {
  std::string suite;
  std::vector<CellOutcome> rows;  // sorted by key
  unsigned long long cells = 0;
  unsigned long long failures = 0;
  unsigned long long skipped = 0;
  double elapsed_seconds = 0.0;
};

// A sampled partial-fraction window (generated up front, single-threaded,
// so the sample is independent of the worker count).
struct PfWindow {
  long P, Q, R0, R1;
  unsigned long k, n;
};

std::vector<PfWindow> sample_pf_windows(const GridSpec& spec);

// Individual suites.  Each enumerates its tuples deterministically, splits
// them across spec.jobs workers, and merges the rows back in enumeration
// order, so the output is identical for any worker count.
SuiteResult run_cert_grid(const GridSpec& spec);
SuiteResult run_identity_grid(const GridSpec& spec, IdentityTag tag);
SuiteResult run_dif_grid(const GridSpec& spec);
SuiteResult run_pf_grid(const GridSpec& spec);
SuiteResult run_gcd_grid(const GridSpec& spec);
SuiteResult run_e15_grid(const GridSpec& spec);
SuiteResult run_bound_t2_grid(const GridSpec& spec);
SuiteResult run_bound_t6_grid(const GridSpec& spec);
SuiteResult run_bound_t3_grid(const GridSpec& spec);
SuiteResult run_bf_range(const GridSpec& spec);

// Named dispatch used by `verify <name>` / `bound <name>`.  Recognised names:
// cert, co, co2, tri, derrr, dif, pf, gcd, e15, t2, t6, t3, bf.
std::optional<SuiteResult> run_suite(const std::string& name, const GridSpec& spec);

// The seven identity/lemma suites covered by `verify all`.
std::vector<std::string> verify_all_suites();

}  // namespace lcmlab
