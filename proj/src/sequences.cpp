#include "odsq/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "odsq/errors.hpp"
#include "odsq/intmath.hpp"

namespace odsq {

std::uint64_t element_at(SequenceIndex n) {
  if (n.value > (intmath::kMaxU64 - 3) / 2) {
    throw std::overflow_error("element_at: index " + std::to_string(n.value) +
                              " exceeds 64-bit range");
  }
  return 3 + 2 * n.value;
}

SequenceIndex eta(std::uint64_t u) {
  if (u < 3 || u % 2 == 0) {
    throw std::domain_error("eta: " + std::to_string(u) +
                            " is not an element of the odd sequence (odd, >= 3)");
  }
  return SequenceIndex{(u - 3) / 2};
}

std::uint64_t sigma_exact(std::uint64_t x) {
  if (x < 3) throw std::domain_error("sigma: argument must be >= 3");
  return x % 2 == 0 ? x - 1 : x;
}

std::uint64_t sigma(double x) {
  if (std::isnan(x) || x < 3.0) throw std::domain_error("sigma: argument must be >= 3");
  // 2^64 is exactly representable; anything at or above it has no u64 floor.
  if (x >= 18446744073709551616.0) throw std::overflow_error("sigma: argument exceeds 64-bit range");
  return sigma_exact(static_cast<std::uint64_t>(std::floor(x)));
}

std::uint64_t m_count_exact(std::uint64_t x) { return (sigma_exact(x) - 3) / 2 + 1; }

std::uint64_t m_count(double x) { return (sigma(x) - 3) / 2 + 1; }

SequenceIndex index_at(double x) { return eta(sigma(x)); }

std::vector<std::uint64_t> WheelSpec::gaps() const {
  std::vector<std::uint64_t> out;
  out.reserve(seeds.size());
  for (std::size_t i = 0; i + 1 < seeds.size(); ++i) out.push_back(seeds[i + 1] - seeds[i]);
  if (!seeds.empty()) out.push_back(seeds.front() + period - seeds.back());
  return out;
}

bool WheelSpec::admits(std::uint64_t u) const {
  if (u % 2 == 0 || u < start()) return false;
  return std::ranges::none_of(divisors, [u](std::uint64_t d) { return u % d == 0; });
}

WheelSpec wheel_build(std::span<const std::uint64_t> divisors) {
  if (divisors.empty()) throw std::domain_error("wheel_build: divisor set is empty");

  WheelSpec spec;
  spec.divisors.assign(divisors.begin(), divisors.end());
  std::ranges::sort(spec.divisors);
  if (std::ranges::adjacent_find(spec.divisors) != spec.divisors.end()) {
    throw std::domain_error("wheel_build: repeated divisor");
  }
  std::uint64_t period = 2;
  for (std::uint64_t d : spec.divisors) {
    if (d % 2 == 0 || !intmath::is_prime_trial(d)) {
      throw std::domain_error("wheel_build: divisor " + std::to_string(d) + " is not an odd prime");
    }
    if (period > kMaxWheelPeriod / d) {
      throw resource_error("wheel_build: period exceeds " + std::to_string(kMaxWheelPeriod));
    }
    period *= d;
  }
  spec.period = period;

  auto coprime = [&](std::uint64_t r) {
    return std::ranges::none_of(spec.divisors, [r](std::uint64_t d) { return r % d == 0; });
  };
  for (std::uint64_t r = 1; r < period; r += 2) {
    if (coprime(r)) spec.offsets.push_back(r);
  }

  // Seeds begin strictly above the largest divisor and cover one full period.
  std::uint64_t u = spec.divisors.back() + 2;
  while (spec.seeds.size() < spec.offsets.size()) {
    if (coprime(u)) spec.seeds.push_back(u);
    u += 2;
  }
  return spec;
}

std::vector<std::uint64_t> wheel_stream(const WheelSpec& spec, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (spec.seeds.empty() || limit < spec.start()) return out;

  const std::uint64_t first = spec.start();
  std::uint64_t base = first - first % spec.period;
  auto it = std::ranges::lower_bound(spec.offsets, first % spec.period);
  while (true) {
    for (; it != spec.offsets.end(); ++it) {
      std::uint64_t v = 0;
      if (__builtin_add_overflow(base, *it, &v) || v > limit) return out;
      out.push_back(v);
    }
    if (__builtin_add_overflow(base, spec.period, &base)) return out;
    it = spec.offsets.begin();
  }
}

WheelSpec s_sequence() {
  static constexpr std::uint64_t kThree[] = {3};
  return wheel_build(kThree);
}

}  // namespace odsq
