#include "lcmlab/grid.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "lcmlab/bounds.hpp"
#include "lcmlab/recurrence.hpp"

namespace lcmlab {

namespace {

std::string fmt_key(const char* fmt, ...) {
  char buf[160];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  return buf;
}

// Runs fn(i) for i in [0, count) on `jobs` threads.  Work is pulled from a
// shared counter but every result lands in its own slot, so the merged vector
// is independent of scheduling.
template <typename F>
std::vector<CellOutcome> parallel_rows(std::size_t count, unsigned jobs, F&& fn) {
  std::vector<CellOutcome> rows(count);
  auto work = [&](std::atomic<std::size_t>& next) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        rows[i] = fn(i);
      } catch (const std::exception& e) {
        // grid tasks enumerate admissible cells only; an exception is itself
        // a failed check, not a crash
        rows[i].cells = 1;
        rows[i].failures = 1;
        rows[i].first_failure = std::string("exception: ") + e.what();
      }
    }
  };
  std::atomic<std::size_t> next{0};
  if (jobs <= 1) {
    work(next);
    return rows;
  }
  std::vector<std::thread> pool;
  const auto n_threads =
      static_cast<unsigned>(std::min<std::size_t>(jobs, count ? count : 1));
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back([&] { work(next); });
  for (auto& th : pool) th.join();
  return rows;
}

SuiteResult finish(const std::string& suite, std::vector<CellOutcome> rows,
                   std::chrono::steady_clock::time_point t0) {
  SuiteResult out;
  out.suite = suite;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CellOutcome& a, const CellOutcome& b) { return a.key < b.key; });
  for (const auto& r : rows) {
    out.cells += r.cells;
    out.failures += r.failures;
    out.skipped += r.skipped;
  }
  out.rows = std::move(rows);
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

void note_failure(CellOutcome& row, const std::string& detail) {
  ++row.failures;
  if (row.first_failure.empty()) row.first_failure = detail;
}

// (P,Q) pairs satisfying the standing hypotheses (P, Q nonzero, Delta != 0),
// optionally restricted to coprime P,Q and to nondegenerate pairs.
std::vector<std::pair<long, long>> lucas_pairs(const GridSpec& spec, bool need_coprime,
                                               bool need_nondegenerate) {
  std::vector<std::pair<long, long>> pairs;
  for (long P = -spec.pmax; P <= spec.pmax; ++P) {
    if (P == 0) continue;
    for (long Q = -spec.qmax; Q <= spec.qmax; ++Q) {
      if (Q == 0 || P * P == 4 * Q) continue;
      if (need_coprime && gcd(BigInt(P), BigInt(Q)) != 1) continue;
      if (need_nondegenerate && is_degenerate(validate(P, Q, 0, 1))) continue;
      pairs.emplace_back(P, Q);
    }
  }
  return pairs;
}

// (R0,R1) companions for a fixed (P,Q): |R0|+|R1| > 0 and gcd(R1,Q)=1.
std::vector<std::pair<long, long>> r_tuples(const GridSpec& spec, long Q) {
  std::vector<std::pair<long, long>> out;
  for (long R0 = -spec.r0max; R0 <= spec.r0max; ++R0)
    for (long R1 = -spec.r1max; R1 <= spec.r1max; ++R1) {
      if (R0 == 0 && R1 == 0) continue;
      if (gcd(BigInt(R1), BigInt(Q)) != 1) continue;
      out.emplace_back(R0, R1);
    }
  return out;
}

unsigned long exponent_f(unsigned long j, unsigned long k, unsigned long n) {
  // sum of min(i,j) over i in [k,n], i != j:
  // indices below j contribute i, indices above j contribute j
  const unsigned long below = (k + j) * (j - k + 1) / 2 - j;  // sum k..j-1
  return below + (n - j) * j;
}

}  // namespace

std::vector<PfWindow> sample_pf_windows(const GridSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  // draw via modulo so the stream depends only on mt19937_64, which is
  // specified bit-for-bit; distribution classes are not portable
  auto draw = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  std::vector<PfWindow> out;
  out.reserve(spec.pf_windows);
  while (out.size() < spec.pf_windows) {
    PfWindow w;
    w.P = draw(-spec.pmax, spec.pmax);
    w.Q = draw(-spec.qmax, spec.qmax);
    w.R0 = draw(-spec.r0max, spec.r0max);
    w.R1 = draw(-spec.r1max, spec.r1max);
    const unsigned long k = static_cast<unsigned long>(draw(1, 12));
    const unsigned long n = k + static_cast<unsigned long>(draw(0, static_cast<long>(spec.pf_span)));
    if (n < 2) continue;
    if (w.P == 0 || w.Q == 0 || w.P * w.P == 4 * w.Q) continue;
    if (w.R0 == 0 && w.R1 == 0) continue;
    RecurrenceParams params = validate(w.P, w.Q, w.R0, w.R1);
    if (!params.theorem_scope || is_degenerate(params)) continue;
    // the decomposition needs every window term nonzero
    std::vector<BigInt> terms = term_list(params, n);
    bool nonzero = true;
    for (unsigned long i = k; i <= n; ++i)
      if (terms[i] == 0) {
        nonzero = false;
        break;
      }
    if (!nonzero) continue;
    w.k = k;
    w.n = n;
    out.push_back(w);
  }
  return out;
}

SuiteResult run_cert_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Tuple {
    long P, Q, R0, R1;
  };
  std::vector<Tuple> tuples;
  for (const auto& [P, Q] : lucas_pairs(spec, /*coprime=*/true, /*nondeg=*/true))
    for (const auto& [R0, R1] : r_tuples(spec, Q)) tuples.push_back({P, Q, R0, R1});

  const unsigned long nmax = spec.cert_nmax;
  auto rows = parallel_rows(tuples.size(), spec.jobs, [&](std::size_t idx) {
    const Tuple t = tuples[idx];
    CellOutcome row;
    row.suite = "cert";
    row.key = fmt_key("P=%ld Q=%ld R0=%ld R1=%ld", t.P, t.Q, t.R0, t.R1);
    const RecurrenceParams params = validate(t.P, t.Q, t.R0, t.R1);
    const std::vector<BigInt> R = term_list(params, nmax);
    const std::vector<BigInt> U = lucas_u_list(params, nmax);
    // F[j] = U_1 * ... * U_j (signs kept: the quotient only needs to be an
    // integer, not positive)
    std::vector<BigInt> F(nmax + 1);
    F[0] = 1;
    for (unsigned long j = 1; j <= nmax; ++j) F[j] = F[j - 1] * U[j];
    const BigInt g = params.gcd_r0_r1;
    for (unsigned long k = 1; k <= nmax; ++k) {
      BigInt prod = 1, l = 1, gpow = 1;
      // gpow tracks g^(n-k); divisor = F[n-k] * g^(n-k), and the quotient
      // lcm * divisor / product must be an integer for every window
      for (unsigned long n = k; n <= nmax; ++n) {
        if (R[n] == 0) {
          row.skipped += nmax - n + 1;  // every window [k, n'] with n' >= n
          break;
        }
        prod *= R[n];
        l = (n == k) ? BigInt(abs(R[n])) : lcm(l, R[n]);
        if (n > k) gpow *= g;
        ++row.cells;
        if (!divides(prod, l * F[n - k] * gpow))
          note_failure(row, fmt_key("k=%lu n=%lu: quotient is not an integer", k, n));
      }
    }
    return row;
  });
  return finish("cert", std::move(rows), t0);
}

SuiteResult run_identity_grid(const GridSpec& spec, IdentityTag tag) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pairs = lucas_pairs(spec, /*coprime=*/true, /*nondeg=*/true);
  const unsigned long nmax = spec.ident_nmax;
  const char* label = tag_label(tag);

  auto rows = parallel_rows(pairs.size(), spec.jobs, [&](std::size_t idx) {
    const auto [P, Q] = pairs[idx];
    CellOutcome row;
    row.suite = label;
    row.key = fmt_key("P=%ld Q=%ld", P, Q);
    const RecurrenceParams lucas = validate(P, Q, 0, 1);
    const std::vector<BigInt> U = lucas_u_list(lucas, nmax + 1);
    for (unsigned long m = 1; m <= nmax + 1; ++m)
      if (U[m] == 0)  // cannot happen for nondegenerate pairs; bail defensively
        throw std::runtime_error(fmt_key("U_%lu = 0 for nondegenerate parameters", m));
    // prefix[k] = lcm(U_1..U_k), the denominator of the lcm-binomial
    std::vector<BigInt> prefix(nmax + 1);
    prefix[0] = 1;
    for (unsigned long k = 1; k <= nmax; ++k)
      prefix[k] = (k == 1) ? BigInt(abs(U[1])) : lcm(prefix[k - 1], U[k]);

    for (unsigned long n = 1; n <= nmax; ++n) {
      const unsigned long k_hi = (tag == IdentityTag::DERRR) ? (n + 1) / 2 : n;
      BigInt window = 1;   // lcm(U_n .. U_{n-k+1})
      BigInt binom = 1;    // C_U(n, k), built up one factor at a time
      BigInt rhs_co = 1;   // lcm{ |U_m * C_U(n,m)| : m <= k }
      BigInt lhs_co2 = 1;  // lcm{ |C_U(n,m)| : m <= k }
      BigInt ext = abs(U[n + 1]);  // lcm(U_{n+1} .. U_{n-k+1})
      for (unsigned long k = 1; k <= k_hi; ++k) {
        window = (k == 1) ? BigInt(abs(U[n])) : lcm(window, U[n - k + 1]);
        const BigInt num = binom * U[n - k + 1];
        if (!divides(U[k], num)) {
          note_failure(row, fmt_key("n=%lu k=%lu: U-binomial is not an integer", n, k));
          ++row.cells;
          break;  // later k would inherit a bogus binom value
        }
        binom = num / U[k];
        switch (tag) {
          case IdentityTag::CO: {
            const BigInt entry = U[k] * binom;
            rhs_co = (k == 1) ? BigInt(abs(entry)) : lcm(rhs_co, entry);
            ++row.cells;
            if (window != rhs_co)
              note_failure(row, fmt_key("n=%lu k=%lu: window lcm != binomial lcm", n, k));
            break;
          }
          case IdentityTag::CO2: {
            lhs_co2 = (k == 1) ? BigInt(abs(binom)) : lcm(lhs_co2, binom);
            ext = lcm(ext, U[n - k + 1]);
            ++row.cells;
            // ext is a multiple of |U_{n+1}| by construction
            if (lhs_co2 * abs(U[n + 1]) != ext)
              note_failure(row, fmt_key("n=%lu k=%lu: binomial lcm != extended window / |U_{n+1}|", n, k));
            break;
          }
          case IdentityTag::TRI: {
            ++row.cells;
            if (!divides(prefix[k], window)) {
              note_failure(row, fmt_key("n=%lu k=%lu: lcm-binomial is not an integer", n, k));
            } else {
              const BigInt tri = window / prefix[k];
              if (!(tri > 0) || !divides(tri, abs(binom)))
                note_failure(row, fmt_key("n=%lu k=%lu: lcm-binomial does not divide the U-binomial", n, k));
            }
            break;
          }
          case IdentityTag::DERRR: {
            if (k == k_hi) {
              ++row.cells;
              if (window != prefix[n])
                note_failure(row, fmt_key("n=%lu: half window lcm != full prefix lcm", n));
            }
            break;
          }
          default:
            throw std::logic_error("identity grid supports co/co2/tri/derrr");
        }
      }
    }
    return row;
  });
  return finish(label, std::move(rows), t0);
}

SuiteResult run_dif_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  // the case-split identity needs only the standing hypotheses
  const auto pairs = lucas_pairs(spec, /*coprime=*/false, /*nondeg=*/false);
  const unsigned long imax = spec.dif_max;

  auto rows = parallel_rows(pairs.size(), spec.jobs, [&](std::size_t idx) {
    const auto [P, Q] = pairs[idx];
    CellOutcome row;
    row.suite = "dif";
    row.key = fmt_key("P=%ld Q=%ld", P, Q);
    const RecurrenceParams lucas = validate(P, Q, 0, 1);
    const std::vector<BigInt> U = lucas_u_list(lucas, imax);
    std::vector<BigInt> Qp(imax);  // Qp[e] = Q^e
    Qp[0] = 1;
    for (unsigned long e = 1; e < imax; ++e) Qp[e] = Qp[e - 1] * Q;
    for (unsigned long i = 1; i <= imax; ++i)
      for (unsigned long j = 1; j <= imax; ++j) {
        const BigInt lhs = U[i] * U[j - 1] - U[i - 1] * U[j];
        const BigInt rhs = (i >= j) ? BigInt(-Qp[j - 1] * U[i - j]) : BigInt(Qp[i - 1] * U[j - i]);
        ++row.cells;
        if (lhs != rhs) note_failure(row, fmt_key("i=%lu j=%lu: case split mismatch", i, j));
      }
    return row;
  });
  return finish("dif", std::move(rows), t0);
}

SuiteResult run_pf_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<PfWindow> windows = sample_pf_windows(spec);

  auto rows = parallel_rows(windows.size(), spec.jobs, [&](std::size_t idx) {
    const PfWindow& w = windows[idx];
    CellOutcome row;
    row.suite = "pf";
    row.key = fmt_key("w=%03zu P=%ld Q=%ld R0=%ld R1=%ld k=%lu n=%lu", idx, w.P, w.Q, w.R0,
                      w.R1, w.k, w.n);
    const RecurrenceParams params = validate(w.P, w.Q, w.R0, w.R1);
    for (const IdentityReport& rep : check_partial_fractions(params, w.k, w.n)) {
      ++row.cells;
      if (!rep.pass)
        note_failure(row, fmt_key("%s k=%lu n=%lu: decomposition mismatch", tag_label(rep.tag),
                                  w.k, w.n));
    }
    return row;
  });
  return finish("pf", std::move(rows), t0);
}

SuiteResult run_gcd_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pairs = lucas_pairs(spec, /*coprime=*/true, /*nondeg=*/false);
  const unsigned long mmax = spec.gcd_mmax;

  auto rows = parallel_rows(pairs.size(), spec.jobs, [&](std::size_t idx) {
    const auto [P, Q] = pairs[idx];
    CellOutcome row;
    row.suite = "gcd";
    row.key = fmt_key("P=%ld Q=%ld", P, Q);
    const long q = Q < 0 ? -Q : Q;
    // gcd(x, Q) depends only on x mod |Q|, so the whole sweep runs on
    // word-sized residues
    auto coprime_q = [q](long r) { return std::gcd(r, q) == 1; };
    auto step = [&](long a, long b) {  // next term of the recurrence mod q
      long v = (P % q * b - Q % q * a) % q;
      if (v < 0) v += q;
      return v;
    };
    long u_prev = 0 % q, u_cur = 1 % q;  // U_0, U_1 mod q
    for (unsigned long m = 1; m <= mmax; ++m) {
      ++row.cells;
      if (!coprime_q(u_cur)) note_failure(row, fmt_key("gcd(U_%lu, Q) > 1", m));
      const long nxt = step(u_prev, u_cur);
      u_prev = u_cur;
      u_cur = nxt;
    }
    for (const auto& [R0, R1] : r_tuples(spec, Q)) {
      long r_prev = ((R0 % q) + q) % q, r_cur = ((R1 % q) + q) % q;
      for (unsigned long m = 1; m <= mmax; ++m) {
        ++row.cells;
        if (!coprime_q(r_cur))
          note_failure(row, fmt_key("R0=%ld R1=%ld: gcd(R_%lu, Q) > 1", R0, R1, m));
        const long nxt = step(r_prev, r_cur);
        r_prev = r_cur;
        r_cur = nxt;
      }
    }
    return row;
  });
  return finish("gcd", std::move(rows), t0);
}

SuiteResult run_e15_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pairs = lucas_pairs(spec, /*coprime=*/true, /*nondeg=*/true);
  const unsigned long nmax = spec.e15_nmax;

  auto rows = parallel_rows(pairs.size(), spec.jobs, [&](std::size_t idx) {
    const auto [P, Q] = pairs[idx];
    CellOutcome row;
    row.suite = "e15";
    row.key = fmt_key("P=%ld Q=%ld", P, Q);
    const RecurrenceParams lucas = validate(P, Q, 0, 1);
    const std::vector<BigInt> U = lucas_u_list(lucas, nmax);
    std::vector<BigInt> F(nmax + 1);  // |[j]_U!|
    F[0] = 1;
    for (unsigned long j = 1; j <= nmax; ++j) F[j] = F[j - 1] * abs(U[j]);
    // largest exponent used is h(k,n) <= g(1,nmax) = nmax(nmax+1)/2
    const unsigned long emax = nmax * (nmax + 1) / 2;
    std::vector<BigInt> Qp(emax + 1);  // |Q|^e
    Qp[0] = 1;
    const BigInt qa = abs(BigInt(Q));
    for (unsigned long e = 1; e <= emax; ++e) Qp[e] = Qp[e - 1] * qa;

    for (unsigned long k = 1; k <= nmax; ++k)
      for (unsigned long n = k; n <= nmax; ++n) {
        unsigned long h = 0;
        BigInt lhs = 1, lhs_shift = 1;
        for (unsigned long j = k; j <= n; ++j) {
          const unsigned long f = exponent_f(j, k, n);
          h = std::max(h, f);
          const BigInt tail = F[j - k] * F[n - j];
          lhs = lcm(lhs, BigInt(Qp[f] * tail));
          // the shifted relation lowers every exponent by n-k
          lhs_shift = lcm(lhs_shift, BigInt(Qp[f - (n - k)] * tail));
        }
        const BigInt rhs = Qp[h] * F[n - k];
        row.cells += 2;
        if (!divides(lhs, rhs))
          note_failure(row, fmt_key("k=%lu n=%lu: exponent lcm does not divide Q^h [n-k]!", k, n));
        if (!divides(lhs_shift, rhs))
          note_failure(row, fmt_key("k=%lu n=%lu: shifted exponent lcm does not divide Q^h [n-k]!", k, n));
      }
    return row;
  });
  return finish("e15", std::move(rows), t0);
}

SuiteResult run_bound_t2_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Tuple {
    long P, Q, c, d;
  };
  std::vector<Tuple> tuples;
  for (long P = 1; P <= spec.pmax; ++P)
    for (long Q = 1; Q <= spec.qmax; ++Q) {
      if (P * P <= 4 * Q || gcd(BigInt(P), BigInt(Q)) != 1) continue;
      for (long c = 1; c <= spec.bound_coeff_max; ++c)
        for (long d = 1; d <= spec.bound_coeff_max; ++d) {
          // the combined sequence starts R0=c, R1=cP+d; the theorem's
          // coprimality hypothesis gcd(R1,Q)=1 applies to it
          if (gcd(BigInt(c * P + d), BigInt(Q)) != 1) continue;
          tuples.push_back({P, Q, c, d});
        }
    }

  const unsigned long nmax = spec.bound_nmax;
  auto rows = parallel_rows(tuples.size(), spec.jobs, [&](std::size_t idx) {
    const Tuple t = tuples[idx];
    CellOutcome row;
    row.suite = "t2";
    row.key = fmt_key("P=%ld Q=%ld c=%ld d=%ld", t.P, t.Q, t.c, t.d);
    for (unsigned long n = 2; n <= nmax; ++n)
      for (unsigned long m = 1; m <= n / 2; ++m) {
        ++row.cells;
        const BoundReport rep = bound_t2(t.P, t.Q, t.c, t.d, m, n);
        if (!rep.verdict)
          note_failure(row, fmt_key("m=%lu n=%lu: bound not certified", m, n));
      }
    return row;
  });
  return finish("t2", std::move(rows), t0);
}

SuiteResult run_bound_t6_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Tuple {
    long P, Q, R0, R1;
  };
  std::vector<Tuple> tuples;
  for (long P = 1; P <= spec.pmax; ++P)
    for (long Q = -spec.qmax; Q <= -1; ++Q) {
      if (gcd(BigInt(P), BigInt(Q)) != 1) continue;
      for (long R0 = 1; R0 <= spec.bound_coeff_max; ++R0)
        for (long R1 = 1; R1 <= spec.bound_coeff_max; ++R1) {
          if (gcd(BigInt(R1), BigInt(Q)) != 1) continue;
          tuples.push_back({P, Q, R0, R1});
        }
    }

  const unsigned long nmax = spec.bound_nmax;
  auto rows = parallel_rows(tuples.size(), spec.jobs, [&](std::size_t idx) {
    const Tuple t = tuples[idx];
    CellOutcome row;
    row.suite = "t6";
    row.key = fmt_key("P=%ld Q=%ld R0=%ld R1=%ld", t.P, t.Q, t.R0, t.R1);
    const RecurrenceParams params = validate(t.P, t.Q, t.R0, t.R1);
    for (unsigned long n = 2; n <= nmax; ++n)
      for (unsigned long m = 1; m <= (n + 1) / 2 + 1; ++m) {
        ++row.cells;
        const BoundReport rep = bound_t6(params, m, n);
        if (!rep.verdict)
          note_failure(row, fmt_key("m=%lu n=%lu: bound not certified", m, n));
      }
    return row;
  });
  return finish("t6", std::move(rows), t0);
}

SuiteResult run_bound_t3_grid(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Tuple {
    long q, u0, r;
  };
  std::vector<Tuple> tuples;
  for (long q = 2; q <= spec.qmax; ++q)
    for (long u0 = 1; u0 <= spec.bound_coeff_max; ++u0)
      for (long r = 1; r <= spec.bound_coeff_max; ++r) {
        if (gcd(BigInt(u0 + r), BigInt(q)) != 1) continue;
        tuples.push_back({q, u0, r});
      }

  const unsigned long nmax = spec.bound_nmax;
  auto rows = parallel_rows(tuples.size(), spec.jobs, [&](std::size_t idx) {
    const Tuple t = tuples[idx];
    CellOutcome row;
    row.suite = "t3";
    row.key = fmt_key("q=%ld u0=%ld r=%ld", t.q, t.u0, t.r);
    for (unsigned long n = 2; n <= nmax; ++n)
      for (unsigned long m = 1; m <= n / 2; ++m) {
        ++row.cells;
        const BoundReport rep = bound_t3(t.q, t.u0, t.r, m, n);
        if (!rep.verdict)
          note_failure(row, fmt_key("m=%lu n=%lu: bound not certified", m, n));
      }
    return row;
  });
  return finish("t3", std::move(rows), t0);
}

SuiteResult run_bf_range(const GridSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  auto rows = parallel_rows(spec.bf_nmax, spec.jobs, [&](std::size_t idx) {
    const unsigned long n = idx + 1;
    CellOutcome row;
    row.suite = "bf";
    row.key = fmt_key("n=%03lu", n);
    ++row.cells;
    const BoundReport rep = check_bousla_farhi(n);
    if (!rep.verdict) note_failure(row, fmt_key("n=%lu: sandwich not certified", n));
    return row;
  });
  return finish("bf", std::move(rows), t0);
}

std::optional<SuiteResult> run_suite(const std::string& name, const GridSpec& spec) {
  if (name == "cert") return run_cert_grid(spec);
  if (name == "co") return run_identity_grid(spec, IdentityTag::CO);
  if (name == "co2") return run_identity_grid(spec, IdentityTag::CO2);
  if (name == "tri") return run_identity_grid(spec, IdentityTag::TRI);
  if (name == "derrr") return run_identity_grid(spec, IdentityTag::DERRR);
  if (name == "dif") return run_dif_grid(spec);
  if (name == "pf") return run_pf_grid(spec);
  if (name == "gcd") return run_gcd_grid(spec);
  if (name == "e15") return run_e15_grid(spec);
  if (name == "t2") return run_bound_t2_grid(spec);
  if (name == "t6") return run_bound_t6_grid(spec);
  if (name == "t3") return run_bound_t3_grid(spec);
  if (name == "bf") return run_bf_range(spec);
  return std::nullopt;
}

std::vector<std::string> verify_all_suites() {
  return {"co", "co2", "tri", "derrr", "dif", "pf", "gcd"};
}

}  // namespace lcmlab
