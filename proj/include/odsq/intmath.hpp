#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace odsq::intmath {

inline constexpr std::uint64_t kMaxU64 = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error(std::string(what) + ": product exceeds 64-bit range");
  }
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error(std::string(what) + ": sum exceeds 64-bit range");
  }
  return r;
}

// base^exp, or nullopt once the value passes `cap`.
constexpr std::optional<std::uint64_t> pow_capped(std::uint64_t base, unsigned exp,
                                                  std::uint64_t cap = kMaxU64) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(acc, base, &next) || next > cap) return std::nullopt;
    acc = next;
  }
  return acc;
}

/// Largest r with r^j <= value. Binary search with exact integer comparison,
/// so perfect powers such as 3^40 land on the right side of the boundary.
constexpr std::uint64_t iroot(std::uint64_t value, unsigned j) {
  if (j == 0) throw std::domain_error("iroot: exponent must be >= 1");
  if (j == 1 || value < 2) return value;
  std::uint64_t lo = 1;
  std::uint64_t hi = j >= 64 ? 2 : (std::uint64_t{1} << (64 / j + 1));
  // invariant: lo^j <= value < hi^j (hi^j >= 2^64 initially)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (pow_capped(mid, j, value)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

constexpr std::uint64_t isqrt(std::uint64_t value) { return iroot(value, 2); }

constexpr bool is_prime_trial(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d <= v / d; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

}  // namespace odsq::intmath
