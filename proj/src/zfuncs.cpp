#include "odsq/zfuncs.hpp"

#include <stdexcept>
#include <string>

#include "odsq/intmath.hpp"

namespace odsq {

namespace {

void require_zprime(std::uint64_t p) {
  if (p < 5 || !intmath::is_prime_trial(p)) {
    throw std::domain_error("p-composite counter: p = " + std::to_string(p) +
                            " must be a prime >= 5");
  }
}

// floor(q/3 + c/3) for c in {1, 2}.
constexpr std::uint64_t phase_floor(std::uint64_t q, unsigned c) { return (q + c) / 3; }

}  // namespace

std::uint64_t ZCounter::count(SequenceIndex n) const {
  if (n < threshold) return 0;
  const std::uint64_t q = (n.value - threshold.value) / period;
  return 1 + q - phase_floor(q, static_cast<unsigned>(phase));
}

ZCounter make_zcounter(std::uint64_t p) {
  require_zprime(p);
  ZCounter z;
  z.p = p;
  z.threshold = eta(intmath::checked_mul(p, p, "make_zcounter"));
  z.period = p;
  z.phase = p % 3 == 1 ? Phase::TwoThirds : Phase::OneThird;
  return z;
}

std::uint64_t count_3(SequenceIndex n) { return n.value / 3; }

std::uint64_t count_p_paper(std::uint64_t p, SequenceIndex n) {
  switch (p) {
    case 5: {
      if (n.value < 11) return 0;
      const std::uint64_t q = (n.value - 11) / 5;
      return phase_floor(q, 1);
    }
    case 7: {
      if (n.value < 23) return 0;
      const std::uint64_t q = (n.value - 23) / 7;
      return 1 + q - phase_floor(q, 2);
    }
    case 11: {
      if (n.value < 59) return 0;
      const std::uint64_t q = (n.value - 59) / 11;
      return 1 + q - phase_floor(q, 1);
    }
    default:
      throw std::domain_error("count_p_paper: printed counters exist only for p in {5, 7, 11}, got " +
                              std::to_string(p));
  }
}

std::uint64_t count_p_corrected(std::uint64_t p, SequenceIndex n) { return make_zcounter(p).count(n); }

std::vector<std::uint64_t> enumerate_p_composites(std::uint64_t p, SequenceIndex n) {
  require_zprime(p);
  const std::uint64_t last = element_at(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = p; m <= last / p; m += 2) {
    if (m % 3 != 0) out.push_back(p * m);
  }
  return out;
}

}  // namespace odsq
