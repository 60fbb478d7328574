#pragma once

// Partition-based generator for the first N primes.
//
// Partition k is anchored by consecutive primes a < b. It walks indices of
// {U_n} in steps of a, so each visited element is a * c for an odd
// candidate c, and it keeps c when no modulus (the odd primes up to a)
// divides it. The walk starts just past the last prime found and stops
// below eta(a * b^2), which means c stays below b^2 and the moduli suffice.
// Rollover then appends b to the moduli and moves to the anchors (b, next prime).

#include <cstdint>
#include <functional>
#include <vector>

#include "odsq/sequences.hpp"

namespace odsq {

inline constexpr std::uint64_t kDefaultMaxPrimeCount = 50'000'000;

enum class LoopGuard {
  Verbatim,   // while (index < endpoint - a): candidates stop at b^2 - 2
  Inclusive,  // while (index <= endpoint - a): also visits b^2, pruned by b as well
};

struct GeneratorState {
  std::vector<std::uint64_t> prime_sequence{3, 5};
  std::vector<std::uint64_t> modulo_sequence{3, 5};
  std::uint64_t prime_a = 5;
  std::uint64_t prime_b = 7;
  SequenceIndex index{11};  // eta(5 * 5)
  std::uint64_t partition_counter = 1;
  std::uint64_t last_element = 1;
  // Candidate values visited by the most recent partition; zero before the first.
  std::uint64_t scan_first = 0;
  std::uint64_t scan_last = 0;
};

/// Called once per candidate with the cursor index, the candidate and whether it was kept.
using CandidateVisitor = std::function<void(SequenceIndex index, std::uint64_t candidate, bool kept)>;

/// Runs one partition and the rollover that follows it.
GeneratorState step_partition(GeneratorState state, LoopGuard guard = LoopGuard::Verbatim,
                              const CandidateVisitor& visit = {});

struct GeneratorOptions {
  bool include_two = true;
  LoopGuard guard = LoopGuard::Verbatim;
  std::uint64_t max_count = kDefaultMaxPrimeCount;
};

/// First `count` primes, from 2 when include_two, from 3 otherwise.
/// std::domain_error for count == 0, odsq::resource_error above max_count.
std::vector<std::uint64_t> first_n_primes(std::uint64_t count, const GeneratorOptions& options = {});

/// Every prime p with 3 <= p <= limit, produced by the same partition walk.
std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit, LoopGuard guard = LoopGuard::Verbatim);

}  // namespace odsq
