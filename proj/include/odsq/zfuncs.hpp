#pragma once

// Closed-form counters for p-composites inside {U_n}.
//
// For p >= 5 a p-composite is p*m with m odd, m >= p and 3 not dividing m.
// Its index is eta(p^2) + p*t for m = p + 2t, so the stream starts at the
// threshold eta(p^2), advances in steps of p, and drops every third step
// (the t with p + 2t divisible by 3). The dropped phase depends on p mod 3.

#include <cstdint>
#include <vector>

#include "odsq/sequences.hpp"

namespace odsq {

/// Which residue of t (mod 3) is dropped, expressed as the floor-correction
/// constant c in 1 + q - floor(q/3 + c).
enum class Phase : unsigned {
  OneThird = 1,   // p = 2 (mod 3): t = 2 (mod 3) dropped
  TwoThirds = 2,  // p = 1 (mod 3): t = 1 (mod 3) dropped
};

struct ZCounter {
  std::uint64_t p = 0;
  SequenceIndex threshold;  // eta(p^2)
  std::uint64_t period = 0; // index step, equal to p
  Phase phase = Phase::OneThird;

  std::uint64_t count(SequenceIndex n) const;
};

/// Requires p prime and p >= 5; std::domain_error otherwise.
ZCounter make_zcounter(std::uint64_t p);

/// Odd multiples of 3 above 3 among U_0..U_n: floor(n/3).
std::uint64_t count_3(SequenceIndex n);

/// The printed counters for p = 5, 7, 11, evaluated literally. The p = 5
/// form lacks the leading 1 + floor((n-11)/5) term and undercounts.
/// Throws std::domain_error for any other p.
std::uint64_t count_p_paper(std::uint64_t p, SequenceIndex n);

/// Closed form valid for every prime p >= 5.
std::uint64_t count_p_corrected(std::uint64_t p, SequenceIndex n);

/// Explicit p-composites p*m <= U_n, increasing.
std::vector<std::uint64_t> enumerate_p_composites(std::uint64_t p, SequenceIndex n);

}  // namespace odsq
