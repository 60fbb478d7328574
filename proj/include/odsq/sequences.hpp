#pragma once

// The main sequence of odd numbers U_n = 3 + 2n, its index arithmetic, and
// T-series wheels: the odd numbers coprime to a set of odd primes.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace odsq {

/// Position n in the main sequence {U_n}.
struct SequenceIndex {
  std::uint64_t value = 0;

  constexpr SequenceIndex() = default;
  constexpr explicit SequenceIndex(std::uint64_t v) : value(v) {}

  constexpr auto operator<=>(const SequenceIndex&) const = default;
};

/// U_n = 3 + 2n. Throws std::overflow_error past the 64-bit range.
std::uint64_t element_at(SequenceIndex n);

/// Index of an element: (u - 3) / 2. Throws std::domain_error for even u or u < 3.
SequenceIndex eta(std::uint64_t u);

/// Largest odd u >= 3 with u <= x. Throws std::domain_error for x < 3 or NaN.
std::uint64_t sigma(double x);

/// Integer form of sigma; exact over the whole 64-bit range.
std::uint64_t sigma_exact(std::uint64_t x);

/// Number of elements of {U_n} not exceeding x, i.e. |{3, 5, ..., sigma(x)}|.
std::uint64_t m_count(double x);
std::uint64_t m_count_exact(std::uint64_t x);

/// Index of the last element not exceeding x: eta(sigma(x)).
SequenceIndex index_at(double x);

struct WheelSpec {
  std::vector<std::uint64_t> divisors;  // sorted, distinct odd primes
  std::uint64_t period = 0;             // 2 * prod(divisors)
  std::vector<std::uint64_t> offsets;   // residues mod period of the stream, sorted
  std::vector<std::uint64_t> seeds;     // first offsets.size() elements of the stream

  /// First element of the stream: the smallest admissible odd above max(divisors).
  std::uint64_t start() const { return seeds.front(); }
  /// Differences between consecutive stream elements over one period, starting at start().
  std::vector<std::uint64_t> gaps() const;
  bool admits(std::uint64_t u) const;
};

/// Largest period wheel_build accepts (2*3*5*7*11*13*17*19).
inline constexpr std::uint64_t kMaxWheelPeriod = 19'399'380;

WheelSpec wheel_build(std::span<const std::uint64_t> divisors);

/// All wheel elements in [spec.start(), limit], strictly increasing.
std::vector<std::uint64_t> wheel_stream(const WheelSpec& spec, std::uint64_t limit);

/// The {S_n} sequence: 5, 7, 11, 13, ... (odds not divisible by 3).
WheelSpec s_sequence();

}  // namespace odsq
