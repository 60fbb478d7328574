// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Ground truth here is computed locally (plain sieve, direct enumeration)
// rather than through the library's oracle module.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "odsq/ascending.hpp"
#include "odsq/oracle.hpp"
#include "odsq/primegen.hpp"
#include "odsq/sequences.hpp"
#include "odsq/zfuncs.hpp"

using namespace odsq;

namespace {

std::vector<char> plain_sieve(std::uint64_t limit) {
  std::vector<char> is(limit + 1, 1);
  is[0] = 0;
  is[1] = 0;
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!is[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) is[m] = 0;
  }
  return is;
}

const std::vector<std::uint64_t> kZPrimes = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                             47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Fails the outcome with the first message only.
void expect(Outcome& o, bool ok, const std::string& msg) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = msg;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome pi_correctness() {
  constexpr std::uint64_t kMax = 1'000'000;
  constexpr double kBudget = 60.0;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  const auto is_prime = plain_sieve(kMax);
  const auto table = oracle::sieve_build(kMax);
  std::int64_t running = 0;
  for (std::uint64_t x = 2; x <= kMax; ++x) {
    running += is_prime[x];
    const auto b = pi_of(static_cast<double>(x), Strategy::OracleExact, &table);
    if (b.pi != running) {
      expect(o, false, "pi(" + std::to_string(x) + ") = " + std::to_string(b.pi) + ", expected " +
                           std::to_string(running));
      break;
    }
  }
  expect(o, running == 78498, "local sieve count at 10^6 is " + std::to_string(running));
  expect(o, pi_of(10, Strategy::OracleExact).pi == 4, "pi(10) != 4");
  expect(o, pi_of(100, Strategy::OracleExact).pi == 25, "pi(100) != 25");
  expect(o, pi_of(1000, Strategy::OracleExact).pi == 168, "pi(1000) != 168");
  expect(o, pi_of(1e6, Strategy::OracleExact, &table).pi == 78498, "pi(10^6) != 78498");
  const double elapsed = seconds_since(t0);
  expect(o, elapsed < kBudget, "runtime " + std::to_string(elapsed) + " s over budget");
  if (o.pass) {
    std::ostringstream s;
    s << "x in [2, 10^6] exact, pi(10^6) = 78498, " << elapsed << " s (< 60 s)";
    o.detail = s.str();
  }
  return o;
}

Outcome zfunction_fidelity() {
  constexpr std::uint64_t kMaxN = 100'000;
  Outcome o;
  for (std::uint64_t p : {7, 11}) {
    std::uint64_t brute = 0;
    for (std::uint64_t n = 0; n <= kMaxN; ++n) {
      const std::uint64_t u = 3 + 2 * n;
      if (u % p == 0 && u / p >= p && (u / p) % 3 != 0) ++brute;
      if (count_p_paper(p, SequenceIndex{n}) != brute) {
        expect(o, false, "printed p=" + std::to_string(p) + " differs from enumeration at n=" + std::to_string(n));
        break;
      }
    }
  }
  // p = 5 printed form: 1{n>=11} floor(floor((n-11)/5)/3 + 1/3), evaluated here over rationals
  for (std::uint64_t n = 0; n <= kMaxN; ++n) {
    std::uint64_t printed = 0;
    if (n >= 11) {
      const std::uint64_t q = (n - 11) / 5;
      printed = (q + 1) / 3;  // floor(q/3 + 1/3) = floor((q + 1) / 3)
    }
    if (count_p_paper(5, SequenceIndex{n}) != printed) {
      expect(o, false, "printed p=5 form not reproduced at n=" + std::to_string(n));
      break;
    }
  }
  const auto report = cli::run_verify(kMaxN + 1, {"p:5"}, cli::Variant::Paper);
  expect(o, report.rows.size() == 1, "verify report for p:5 missing");
  if (report.rows.size() == 1) {
    const auto& row = report.rows.front();
    expect(o, row.location == 11 && row.paper_value == 0 && row.oracle_value == 1 && row.status() == "WARN",
           "first p=5 deviation not documented at n=11 (paper 0 vs enumeration 1)");
    if (o.pass) {
      o.detail = "p=7,11 exact for n <= 10^5; p=5 printed form reproduced, first deviation n=11 (paper 0 vs 1), " +
                 std::to_string(row.mismatches) + " deviating indices reported";
    }
  }
  return o;
}

Outcome generalized_counter() {
  constexpr std::uint64_t kMaxN = 100'000;
  Outcome o;
  for (std::uint64_t p : kZPrimes) {
    std::uint64_t brute = 0;
    for (std::uint64_t n = 0; n <= kMaxN; ++n) {
      const std::uint64_t u = 3 + 2 * n;
      if (u % p == 0 && u / p >= p && (u / p) % 3 != 0) ++brute;
      if (count_p_corrected(p, SequenceIndex{n}) != brute) {
        expect(o, false, "p=" + std::to_string(p) + " n=" + std::to_string(n));
        break;
      }
    }
  }
  std::uint64_t threes = 0;
  for (std::uint64_t n = 0; n <= kMaxN; ++n) {
    const std::uint64_t u = 3 + 2 * n;
    if (u > 3 && u % 3 == 0) ++threes;
    if (count_3(SequenceIndex{n}) != threes) {
      expect(o, false, "p=3 n=" + std::to_string(n));
      break;
    }
  }
  if (o.pass) o.detail = "p in {5..97} (23 primes) and the p=3 counter exact for n <= 10^5";
  return o;
}

Outcome ascending_counters() {
  constexpr std::uint64_t kMaxN = 10'000;
  const std::uint64_t last = 3 + 2 * kMaxN;
  Outcome o;
  // histograms by index, then cumulative
  auto cumulative = [](std::vector<std::uint64_t> v) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];
    return v;
  };
  std::vector<std::uint64_t> kl(kMaxN + 1, 0);
  std::vector<std::uint64_t> kkl(kMaxN + 1, 0);
  for (std::uint64_t k = 3; k * k <= last; k += 2) {
    for (std::uint64_t l = k; k * l <= last; l += 2) ++kl[(k * l - 3) / 2];
    for (std::uint64_t l = k; k * k * l <= last; l += 2) ++kkl[(k * k * l - 3) / 2];
  }
  kl = cumulative(kl);
  kkl = cumulative(kkl);
  std::vector<std::vector<std::uint64_t>> pow(7, std::vector<std::uint64_t>(kMaxN + 1, 0));
  for (unsigned j = 1; j <= 6; ++j) {
    for (std::uint64_t k = 3;; k += 2) {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < j; ++i) v *= k;
      if (v > last) break;
      ++pow[j][(v - 3) / 2];
    }
    pow[j] = cumulative(pow[j]);
  }
  for (std::uint64_t n = 0; n <= kMaxN && o.pass; ++n) {
    const SequenceIndex idx{n};
    expect(o, count_kl(idx) == kl[n], "count_kl at n=" + std::to_string(n));
    expect(o, count_kkl(idx) == kkl[n], "count_kkl at n=" + std::to_string(n));
    for (unsigned j = 1; j <= 6; ++j) {
      expect(o, count_kpow(j, idx) == pow[j][n], "count_kpow j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "k*l, k*k*l, k^j (j <= 6) exact for n <= 10^4";
  return o;
}

Outcome prime_generator() {
  constexpr std::uint64_t kCount = 100'000;
  constexpr double kBudget = 30.0;
  Outcome o;
  const auto is_prime = plain_sieve(1'400'000);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t v = 2; expected.size() < kCount; ++v) {
    if (is_prime[v]) expected.push_back(v);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto got = first_n_primes(kCount);
  const double elapsed = seconds_since(t0);
  expect(o, got.size() == kCount, "wrong length");
  for (std::size_t i = 0; i < got.size() && i < expected.size() && o.pass; ++i) {
    expect(o, got[i] == expected[i], "element " + std::to_string(i + 1) + " is " + std::to_string(got[i]));
  }
  expect(o, elapsed < kBudget, "runtime " + std::to_string(elapsed) + " s over budget");
  if (o.pass) {
    std::ostringstream s;
    s << "first 10^5 primes identical, last " << got.back() << ", " << elapsed << " s (< 30 s)";
    o.detail = s.str();
  }
  return o;
}

Outcome threshold_property() {
  Outcome o;
  for (std::uint64_t p : kZPrimes) {
    const std::uint64_t t = (p * p - 3) / 2;
    expect(o, make_zcounter(p).threshold == SequenceIndex{t}, "threshold field for p=" + std::to_string(p));
    expect(o, count_p_corrected(p, SequenceIndex{t - 1}) == 0, "nonzero below threshold for p=" + std::to_string(p));
    expect(o, count_p_corrected(p, SequenceIndex{t}) == 1, "not 1 at threshold for p=" + std::to_string(p));
  }
  expect(o, make_zcounter(5).threshold == SequenceIndex{11}, "p=5 threshold != 11");
  expect(o, make_zcounter(7).threshold == SequenceIndex{23}, "p=7 threshold != 23");
  expect(o, make_zcounter(11).threshold == SequenceIndex{59}, "p=11 threshold != 59");
  if (o.pass) o.detail = "0 -> 1 at (p^2-3)/2 for all primes in [5, 97]; 11, 23, 59 for p = 5, 7, 11";
  return o;
}

Outcome wheel_completeness() {
  constexpr std::uint64_t kLimit = 100'000;
  Outcome o;
  const auto is_prime = plain_sieve(kLimit);
  for (const auto& ds : std::vector<std::vector<std::uint64_t>>{{3}, {5}, {3, 5}}) {
    const auto stream = wheel_stream(wheel_build(ds), kLimit);
    std::vector<char> present(kLimit + 1, 0);
    for (std::uint64_t v : stream) {
      present[v] = 1;
      for (std::uint64_t d : ds) expect(o, v % d != 0, std::to_string(v) + " divisible by " + std::to_string(d));
    }
    for (std::uint64_t p = ds.back() + 1; p <= kLimit; ++p) {
      if (is_prime[p]) expect(o, present[p] != 0, "prime " + std::to_string(p) + " missing");
    }
  }
  if (o.pass) o.detail = "{3}, {5}, {3,5} up to 10^5: all primes above max(D) present, no multiples of D";
  return o;
}

Outcome complexity_informational() {
  Outcome o;
  std::ostringstream s;
  s << "out of scope; informational timings:";
  for (std::uint64_t x : {10'000ULL, 100'000ULL, 1'000'000ULL}) {
    const auto rows = cli::run_bench(x, 3);
    s << " x=" << x << " pi(oracle) " << rows[1].median_ns << " ns, pi(paper) " << rows[2].median_ns << " ns;";
  }
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 pi correctness", pi_correctness},
      {"AC2 Z-function fidelity", zfunction_fidelity},
      {"AC3 generalized counter", generalized_counter},
      {"AC4 ascending-factorization counters", ascending_counters},
      {"AC5 prime generator", prime_generator},
      {"AC6 threshold property", threshold_property},
      {"AC7 wheel completeness", wheel_completeness},
      {"AC8 complexity claim (informational)", complexity_informational},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
