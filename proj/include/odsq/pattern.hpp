#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace odsq {

/// Shape of an ascending-factorization composite class.
///
///   KL        k*l      with 3 <= k <= l, both odd
///   KKL       k*k*l    with 3 <= k <= l, both odd
///   KPow(j)   k^j      with odd k >= 3, j >= 1
///   KPowL(j)  k^j*l    with 3 <= k <= l, both odd, j >= 2 (KPowL(2) is KKL)
///   Multi(r)  k1*...*kr distinct odd primes k1 < ... < kr, r >= 2
///
/// Counts are taken with multiplicity over the defining tuples, not over
/// distinct products.
struct CompositePattern {
  enum class Shape { KL, KKL, KPow, KPowL, Multi };

  Shape shape = Shape::KL;
  unsigned param = 0;  // j for KPow/KPowL, r for Multi, unused otherwise

  static CompositePattern kl() { return {Shape::KL, 0}; }
  static CompositePattern kkl() { return {Shape::KKL, 0}; }
  static CompositePattern kpow(unsigned j);
  static CompositePattern kpow_l(unsigned j);
  static CompositePattern multi(unsigned r);

  /// "kl", "kkl", "kpow:3", "kpowl:3", "multi:3"
  std::string to_string() const;
  /// Inverse of to_string; std::invalid_argument on malformed input.
  static CompositePattern parse(std::string_view text);

  auto operator<=>(const CompositePattern&) const = default;
};

}  // namespace odsq
