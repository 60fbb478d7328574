#pragma once

// Ground truth for differential testing: a bit-packed odd-only sieve of
// Eratosthenes, exhaustive enumerators for the composite classes, and
// trial-division factorization. Nothing here calls into the closed-form
// modules it is used to check.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "odsq/pattern.hpp"
#include "odsq/sequences.hpp"

namespace odsq::oracle {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

/// Primality over [2, limit], one bit per odd number (bit i <-> 3 + 2i).
/// Immutable after construction.
class SieveTable {
 public:
  SieveTable() = default;

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t v) const;
  /// Number of primes <= x; requires x <= limit().
  std::uint64_t pi(std::uint64_t x) const;
  /// All primes <= bound (bound clamped to limit()).
  std::vector<std::uint64_t> primes(std::uint64_t bound) const;
  std::span<const std::uint64_t> words() const { return words_; }

  static SieveTable from_words(std::uint64_t limit, std::vector<std::uint64_t> words);

 private:
  friend SieveTable sieve_build(std::uint64_t limit, std::uint64_t cap);

  SieveTable(std::uint64_t limit, std::vector<std::uint64_t> words);
  void build_rank();

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> rank_;  // set bits in words_[0..i)
};

/// Throws std::domain_error for limit < 2, odsq::resource_error above cap.
SieveTable sieve_build(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

/// Exact pi(x) for 2 <= x <= table.limit(); std::domain_error otherwise.
std::uint64_t oracle_pi(const SieveTable& table, std::uint64_t x);

/// Distinct odd composites among U_0..U_n, i.e. the exact W_n.
std::uint64_t oracle_odd_composites(const SieveTable& table, SequenceIndex n);

/// Exhaustive tuple count for `pattern` with product <= U_n. Multi(r) needs
/// primes, taken from `table` when it covers U_n and from a fresh sieve otherwise.
std::uint64_t oracle_count_class(const CompositePattern& pattern, SequenceIndex n,
                                 const SieveTable* table = nullptr);

/// oracle_count_class for every index 0..n_max at once (histogram + prefix sum).
std::vector<std::uint64_t> oracle_class_profile(const CompositePattern& pattern, SequenceIndex n_max,
                                                const SieveTable* table = nullptr);

/// p-composites (p*m, m odd, m >= p, 3 not dividing m) among U_0..U_n by scanning the sequence.
std::uint64_t oracle_count_p_composites(std::uint64_t p, SequenceIndex n);
std::vector<std::uint64_t> oracle_p_composite_profile(std::uint64_t p, SequenceIndex n_max);

/// k^2 * l <= U_n over odd k >= 3 and any odd l >= 3 (the printed k*k*l sum's class).
std::vector<std::uint64_t> oracle_square_times_odd_profile(SequenceIndex n_max);

struct AscendingFactorization {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // (prime, multiplicity), primes ascending

  std::uint64_t value() const;
  bool operator==(const AscendingFactorization&) const = default;
};

AscendingFactorization factorize_ascending(std::uint64_t u);

// Binary dump: "ODSQ", u32 format version, u64 limit, u64 word count, then the
// words. All integers little-endian.
inline constexpr std::uint32_t kSieveFormatVersion = 1;

void save_sieve(const SieveTable& table, std::ostream& out);
SieveTable load_sieve(std::istream& in);
void save_sieve(const SieveTable& table, const std::filesystem::path& path);
SieveTable load_sieve(const std::filesystem::path& path);

}  // namespace odsq::oracle
