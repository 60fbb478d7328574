#pragma once

// Ascending-factorization composite counters over {U_n}, the non-prime
// count W_n built from them, and pi(x) = M_n - W_n + m.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "odsq/oracle.hpp"
#include "odsq/pattern.hpp"
#include "odsq/sequences.hpp"

namespace odsq {

/// sigma(isqrt(U_n)): the largest odd k with k^2 <= U_n. Requires n >= eta(9).
std::uint64_t chi(SequenceIndex n);

/// Pairs (k, l), 3 <= k <= l odd, k*l <= U_n:
/// sum over odd k <= chi(n) of floor((U_n - k^2) / 2k) + 1.
std::uint64_t count_kl(SequenceIndex n);

/// Pairs (k, l), 3 <= k <= l odd, k^2*l <= U_n.
std::uint64_t count_kkl(SequenceIndex n);

/// The printed k*k*l sum: over odd k <= chi(n) of floor(n/k^2 + xi(k)/k^2)
/// with xi(k) = (3 - k^2)/2. It counts k^2*l for every odd l >= 3, so it
/// exceeds count_kkl as soon as some k^2*l <= U_n has l < k (first at U_n = 75).
std::uint64_t count_kkl_paper(SequenceIndex n);

/// Odd bases k >= 3 with k^j <= U_n, via an exact integer j-th root.
std::uint64_t count_kpow(unsigned j, SequenceIndex n);

/// Pairs (k, l), 3 <= k <= l odd, k^j*l <= U_n, j >= 2.
std::uint64_t count_kpow_l(unsigned j, SequenceIndex n);

/// Tuples of r distinct odd primes k1 < ... < kr with product <= U_n.
std::uint64_t count_multi(unsigned r, SequenceIndex n);

/// Dispatch on pattern shape.
std::uint64_t count_class(const CompositePattern& pattern, SequenceIndex n);

enum class Strategy { PaperEq6, OracleExact };

/// "paper" / "oracle"; std::invalid_argument for anything else.
Strategy parse_strategy(std::string_view text);
std::string_view to_string(Strategy s);

struct Eq6Term {
  CompositePattern pattern;
  std::int64_t coefficient = 0;
  std::uint64_t count = 0;
};

/// Evaluates the alternating non-prime combination
///
///   W = count(k*l)
///     - count(k*k*l)   + count(k^3)
///     - count(k^3*l)   + count(k^4)   - ...
///     - 2 count(k1*k2*k3) - 3 count(k1*k2*k3*k4) - ...
///
/// truncated where every further term is zero. The count(k1*k2*l) row has
/// no defined class and is left out, so W over-counts the true number of
/// odd composites; the residual is reported by the verify command.
class Eq6Assembler {
 public:
  /// Caches the odd primes needed for every U_n <= max_element.
  explicit Eq6Assembler(std::uint64_t max_element);

  std::vector<Eq6Term> terms(SequenceIndex n) const;
  std::int64_t w(SequenceIndex n) const;

 private:
  std::uint64_t count_multi_cached(unsigned r, std::uint64_t last) const;

  std::uint64_t max_element_;
  std::vector<std::uint64_t> primes_;
};

/// Number of non-primes among U_0..U_n. OracleExact counts odd composites
/// with the sieve in `table` (or a fresh one when it does not cover U_n).
std::int64_t assemble_w(SequenceIndex n, Strategy strategy, const oracle::SieveTable* table = nullptr);

struct PiBreakdown {
  double x = 0;
  std::optional<SequenceIndex> n;  // absent for 2 <= x < 3
  std::uint64_t m_n = 0;
  std::map<CompositePattern, std::uint64_t> class_counts;  // terms used by PaperEq6
  std::int64_t w_n = 0;
  std::int64_t m_corr = 0;
  std::int64_t pi = 0;
  Strategy strategy = Strategy::OracleExact;

  bool operator==(const PiBreakdown&) const = default;
};

/// pi(x) = M_n - W_n + 1 with n = eta(sigma(x)); the +1 is the prime 2.
/// std::domain_error for x < 2 or NaN.
PiBreakdown pi_of(double x, Strategy strategy, const oracle::SieveTable* table = nullptr);

}  // namespace odsq
