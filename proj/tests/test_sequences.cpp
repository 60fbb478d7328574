#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "odsq/errors.hpp"
#include "odsq/intmath.hpp"
#include "odsq/sequences.hpp"

using namespace odsq;

namespace {

bool slow_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> filter_odds(std::uint64_t from, std::uint64_t limit, const std::vector<std::uint64_t>& ds) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = from | 1; u <= limit; u += 2) {
    if (std::ranges::none_of(ds, [u](std::uint64_t d) { return u % d == 0; })) out.push_back(u);
  }
  return out;
}

}  // namespace

TEST_CASE("element_at and eta") {
  CHECK(element_at(SequenceIndex{0}) == 3);
  CHECK(element_at(SequenceIndex{11}) == 25);
  CHECK(element_at(SequenceIndex{59}) == 121);
  CHECK(eta(3) == SequenceIndex{0});
  CHECK(eta(25) == SequenceIndex{11});
  CHECK(eta(49) == SequenceIndex{23});

  CHECK_THROWS_AS(eta(4), std::domain_error);
  CHECK_THROWS_AS(eta(1), std::domain_error);
  CHECK_THROWS_AS(element_at(SequenceIndex{std::numeric_limits<std::uint64_t>::max() / 2}), std::overflow_error);
  const std::uint64_t top = (std::numeric_limits<std::uint64_t>::max() - 3) / 2;
  CHECK(element_at(SequenceIndex{top}) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("index round trip up to 10^6") {
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    if (eta(element_at(SequenceIndex{n})).value != n) FAIL("round trip broke at n = " << n);
  }
}

TEST_CASE("sigma") {
  CHECK(sigma(10.0) == 9);
  CHECK(sigma(12.5) == 11);  // threshold for p = 5
  CHECK(sigma(3.0) == 3);
  CHECK(sigma(3.999) == 3);
  CHECK_THROWS_AS(sigma(2.99), std::domain_error);
  CHECK_THROWS_AS(sigma(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(sigma(1e30), std::overflow_error);
  CHECK(sigma_exact(std::numeric_limits<std::uint64_t>::max()) == std::numeric_limits<std::uint64_t>::max());

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(3.0, 1e9);
  for (int i = 0; i < 10000; ++i) {
    const double x = dist(rng);
    const std::uint64_t s = sigma(x);
    CHECK(sigma(static_cast<double>(s)) == s);
    CHECK(s % 2 == 1);
    CHECK(static_cast<double>(s) <= x);
    CHECK(static_cast<double>(s + 2) > x);
  }
}

TEST_CASE("sigma(p^2 / 2) equals eta(p^2) for odd p") {
  for (std::uint64_t p = 3; p < 2000; p += 2) {
    CHECK(sigma(static_cast<double>(p * p) / 2.0) == eta(p * p).value);
  }
}

TEST_CASE("m_count matches enumeration") {
  CHECK(m_count(10.0) == 4);
  CHECK(m_count(3.0) == 1);
  CHECK(m_count(100.0) == 49);
  std::uint64_t brute = 0;
  for (std::uint64_t x = 3; x <= 100'000; ++x) {
    if (x % 2 == 1) ++brute;
    if (m_count_exact(x) != brute) FAIL("m_count(" << x << ")");
  }
  CHECK(index_at(100.0) == SequenceIndex{48});
}

TEST_CASE("wheel_build shapes") {
  const std::uint64_t three[] = {3};
  const std::uint64_t five[] = {5};
  const std::uint64_t three_five[] = {5, 3};

  const WheelSpec s = wheel_build(three);
  CHECK(s.period == 6);
  CHECK(s.seeds == std::vector<std::uint64_t>{5, 7});
  CHECK(s.gaps() == std::vector<std::uint64_t>{2, 4});

  const WheelSpec w5 = wheel_build(five);
  CHECK(w5.period == 10);
  CHECK(w5.offsets == std::vector<std::uint64_t>{1, 3, 7, 9});
  // the listed values 7, 11, 13, 19 all belong to the stream, which also holds 9 and 17
  CHECK(w5.seeds == std::vector<std::uint64_t>{7, 9, 11, 13});
  for (std::uint64_t v : {7, 11, 13, 19}) CHECK(w5.admits(v));

  const WheelSpec w15 = wheel_build(three_five);
  CHECK(w15.period == 30);
  CHECK(w15.divisors == std::vector<std::uint64_t>{3, 5});
  CHECK(w15.offsets.size() == 8);
  CHECK(w15.seeds == std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23, 29, 31});
  CHECK(w15.gaps() == std::vector<std::uint64_t>{4, 2, 4, 2, 4, 6, 2, 6});

  CHECK(s_sequence().seeds == s.seeds);
}

TEST_CASE("wheel_build rejects bad divisor sets") {
  CHECK_THROWS_AS(wheel_build(std::vector<std::uint64_t>{}), std::domain_error);
  CHECK_THROWS_AS(wheel_build(std::vector<std::uint64_t>{3, 3}), std::domain_error);
  CHECK_THROWS_AS(wheel_build(std::vector<std::uint64_t>{2}), std::domain_error);
  CHECK_THROWS_AS(wheel_build(std::vector<std::uint64_t>{9}), std::domain_error);
  CHECK_THROWS_AS(wheel_build(std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23}), resource_error);
}

TEST_CASE("wheel_stream examples") {
  CHECK(wheel_stream(wheel_build(std::vector<std::uint64_t>{3}), 20) ==
        std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19});
  CHECK(wheel_stream(wheel_build(std::vector<std::uint64_t>{3, 5}), 31) ==
        std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23, 29, 31});
  CHECK(wheel_stream(wheel_build(std::vector<std::uint64_t>{5}), 7) == std::vector<std::uint64_t>{7});
  CHECK(wheel_stream(wheel_build(std::vector<std::uint64_t>{5}), 6).empty());
}

TEST_CASE("wheel_stream equals filtered odds") {
  const std::vector<std::vector<std::uint64_t>> sets = {{3}, {5}, {7}, {3, 5}, {3, 7}, {3, 5, 7}, {5, 11, 13}};
  for (const auto& ds : sets) {
    const WheelSpec spec = wheel_build(ds);
    const auto stream = wheel_stream(spec, 100'000);
    CHECK(stream == filter_odds(ds.back() + 1, 100'000, ds));
    CHECK(std::ranges::is_sorted(stream));
    CHECK(std::ranges::adjacent_find(stream) == stream.end());
    // gap pattern repeats with the period
    const auto gaps = spec.gaps();
    for (std::size_t i = 0; i + 1 < stream.size(); ++i) {
      REQUIRE(stream[i + 1] - stream[i] == gaps[i % gaps.size()]);
    }
  }
}

TEST_CASE("wheel_stream stops at the top of the integer range") {
  const WheelSpec spec = wheel_build(std::vector<std::uint64_t>{3});
  const auto top = std::numeric_limits<std::uint64_t>::max();
  WheelSpec shifted = spec;
  shifted.seeds = {top - 10};  // start near the end of the range
  const auto tail = wheel_stream(shifted, top);
  CHECK(!tail.empty());
  CHECK(tail.back() <= top);
  CHECK(std::ranges::is_sorted(tail));
}

TEST_CASE("completeness: every prime above max(D) is in the stream") {
  for (const auto& ds : std::vector<std::vector<std::uint64_t>>{{3}, {5}, {3, 5}, {3, 5, 7}}) {
    const auto stream = wheel_stream(wheel_build(ds), 50'000);
    for (std::uint64_t p = ds.back() + 1; p <= 50'000; ++p) {
      if (slow_prime(p)) REQUIRE(std::ranges::binary_search(stream, p));
    }
  }
}

TEST_CASE("S-sequence propositions hold empirically") {
  // a prime above 7 minus 6 is an element of {S_n}
  const WheelSpec s = s_sequence();
  const auto stream = wheel_stream(s, 200'000);
  for (std::uint64_t p = 11; p <= 200'000; p += 2) {
    if (!slow_prime(p)) continue;
    REQUIRE(std::ranges::binary_search(stream, p - 6));
    // p + 6 is prime or a product of {S_n} elements: no factor 2 or 3
    const std::uint64_t q = p + 6;
    REQUIRE(q % 2 != 0);
    REQUIRE(q % 3 != 0);
  }
}

TEST_CASE("integer roots are exact at perfect-power boundaries") {
  using intmath::iroot;
  CHECK(iroot(0, 3) == 0);
  CHECK(iroot(1, 5) == 1);
  CHECK(iroot(26, 3) == 2);
  CHECK(iroot(27, 3) == 3);
  CHECK(iroot(28, 3) == 3);
  CHECK(iroot(std::numeric_limits<std::uint64_t>::max(), 2) == 4294967295ULL);
  CHECK(iroot(std::numeric_limits<std::uint64_t>::max(), 64) == 1);
  CHECK_THROWS_AS(iroot(5, 0), std::domain_error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const unsigned j = 2 + static_cast<unsigned>(rng() % 12);
    const std::uint64_t v = rng() >> (rng() % 60);
    const std::uint64_t r = iroot(v, j);
    REQUIRE(intmath::pow_capped(r, j, v).has_value());
    REQUIRE(!intmath::pow_capped(r + 1, j, v).has_value());
  }
  for (std::uint64_t base = 3; base < 200; base += 2) {
    for (unsigned j = 2; j <= 8; ++j) {
      const auto p = intmath::pow_capped(base, j);
      if (!p) break;
      REQUIRE(iroot(*p, j) == base);
      REQUIRE(iroot(*p - 1, j) == base - 1);
    }
  }
}
