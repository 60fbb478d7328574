#include "odsq/primegen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "odsq/errors.hpp"
#include "odsq/intmath.hpp"

namespace odsq {

GeneratorState step_partition(GeneratorState state, LoopGuard guard, const CandidateVisitor& visit) {
  const std::uint64_t a = state.prime_a;
  const std::uint64_t b = state.prime_b;

  if (state.partition_counter > 1) {
    // resume right after the last prime found by the prior partition
    state.index = eta(intmath::checked_mul(state.last_element, a, "step_partition"));
  }
  const std::uint64_t endpoint =
      eta(intmath::checked_mul(a, intmath::checked_mul(b, b, "step_partition"), "step_partition")).value;
  const std::uint64_t stop = endpoint - a;

  state.scan_first = 0;
  state.scan_last = 0;
  auto more = [&] { return guard == LoopGuard::Verbatim ? state.index.value < stop : state.index.value <= stop; };
  while (more()) {
    state.index = SequenceIndex{state.index.value + a};  // periodicity
    const std::uint64_t candidate = element_at(state.index) / a;

    bool is_prime = std::ranges::none_of(state.modulo_sequence,
                                         [candidate](std::uint64_t m) { return candidate % m == 0; });
    if (guard == LoopGuard::Inclusive && candidate != b && candidate % b == 0) is_prime = false;
    if (is_prime) state.prime_sequence.push_back(candidate);

    if (state.scan_first == 0) state.scan_first = candidate;
    state.scan_last = candidate;
    if (visit) visit(state.index, candidate, is_prime);
  }

  // rollover
  state.modulo_sequence.push_back(b);
  state.prime_a = b;
  const auto pos = std::ranges::find(state.prime_sequence, b);
  if (pos == state.prime_sequence.end() || pos + 1 == state.prime_sequence.end()) {
    throw std::logic_error("step_partition: anchor " + std::to_string(b) + " has no successor");
  }
  state.prime_b = *(pos + 1);
  ++state.partition_counter;
  state.last_element = state.prime_sequence.back();
  return state;
}

std::vector<std::uint64_t> first_n_primes(std::uint64_t count, const GeneratorOptions& options) {
  if (count == 0) throw std::domain_error("first_n_primes: count must be >= 1");
  if (count > options.max_count) {
    throw resource_error("first_n_primes: count " + std::to_string(count) + " exceeds limit " +
                         std::to_string(options.max_count));
  }
  const std::uint64_t odd_needed = options.include_two ? count - 1 : count;

  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (options.include_two) out.push_back(2);
  if (odd_needed == 0) return out;

  GeneratorState state;
  while (state.prime_sequence.size() <= odd_needed) state = step_partition(std::move(state), options.guard);
  out.insert(out.end(), state.prime_sequence.begin(),
             state.prime_sequence.begin() + static_cast<std::ptrdiff_t>(odd_needed));
  return out;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit, LoopGuard guard) {
  GeneratorState state;
  // every odd value up to `covered` has been decided
  std::uint64_t covered = 5;
  while (covered < limit) {
    state = step_partition(std::move(state), guard);
    covered = std::max(covered, state.scan_last);
  }
  auto& primes = state.prime_sequence;
  primes.erase(std::ranges::upper_bound(primes, limit), primes.end());
  return std::move(primes);
}

}  // namespace odsq
