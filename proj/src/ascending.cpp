#include "odsq/ascending.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "odsq/intmath.hpp"
#include "odsq/primegen.hpp"

namespace odsq {

namespace {

// Largest odd value <= v, or 0 when v < 3.
constexpr std::uint64_t odd_floor(std::uint64_t v) {
  if (v < 3) return 0;
  return v % 2 == 0 ? v - 1 : v;
}

std::uint64_t count_tuples(std::span<const std::uint64_t> primes, unsigned r, std::uint64_t last) {
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, std::size_t from, std::uint64_t prod, unsigned left) -> void {
    if (left == 0) {
      ++count;
      return;
    }
    for (std::size_t i = from; i < primes.size(); ++i) {
      // the remaining `left` factors are all at least primes[i]
      if (!intmath::pow_capped(primes[i], left, last / prod)) return;
      self(self, i + 1, prod * primes[i], left - 1);
    }
  };
  dfs(dfs, 0, 1, r);
  return count;
}

// Product of the r smallest odd primes, or nullopt past `cap`.
std::optional<std::uint64_t> smallest_multi(unsigned r, std::uint64_t cap) {
  static constexpr std::uint64_t kOddPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (r > std::size(kOddPrimes)) return std::nullopt;
  std::uint64_t prod = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (prod > cap / kOddPrimes[i]) return std::nullopt;
    prod *= kOddPrimes[i];
  }
  return prod;
}

// Upper bound on the largest prime in an r-tuple with product <= last.
std::uint64_t multi_prime_bound(unsigned r, std::uint64_t last) {
  const auto rest = smallest_multi(r - 1, last);
  return rest ? last / *rest : 0;
}

}  // namespace

std::uint64_t chi(SequenceIndex n) {
  if (n.value < 3) throw std::domain_error("chi: requires n >= eta(9) = 3");
  return odd_floor(intmath::isqrt(element_at(n)));
}

std::uint64_t count_kl(SequenceIndex n) {
  if (n.value < 3) return 0;
  const std::uint64_t u = element_at(n);
  const std::uint64_t k_max = chi(n);
  std::uint64_t total = 0;
  for (std::uint64_t k = 3; k <= k_max; k += 2) total += (u - k * k) / (2 * k) + 1;
  return total;
}

std::uint64_t count_kpow_l(unsigned j, SequenceIndex n) {
  if (j < 2) throw std::domain_error("count_kpow_l: j must be >= 2");
  const std::uint64_t u = element_at(n);
  const std::uint64_t k_max = odd_floor(intmath::iroot(u, j + 1));
  std::uint64_t total = 0;
  for (std::uint64_t k = 3; k <= k_max; k += 2) {
    const std::uint64_t kj = *intmath::pow_capped(k, j);
    total += (u - kj * k) / (2 * kj) + 1;
  }
  return total;
}

std::uint64_t count_kkl(SequenceIndex n) { return count_kpow_l(2, n); }

std::uint64_t count_kkl_paper(SequenceIndex n) {
  if (n.value < 3) return 0;
  const std::uint64_t k_max = chi(n);
  std::uint64_t total = 0;
  for (std::uint64_t k = 3; k <= k_max; k += 2) {
    // xi(k) = (3 - k^2)/2 = -eta(k^2), and k^2 <= U_n keeps n + xi(k) >= 0
    const std::uint64_t k2 = k * k;
    total += (n.value - eta(k2).value) / k2;
  }
  return total;
}

std::uint64_t count_kpow(unsigned j, SequenceIndex n) {
  if (j < 1) throw std::domain_error("count_kpow: j must be >= 1");
  const std::uint64_t root = intmath::iroot(element_at(n), j);
  return root < 3 ? 0 : (root - 3) / 2 + 1;
}

std::uint64_t count_multi(unsigned r, SequenceIndex n) {
  if (r < 2) throw std::domain_error("count_multi: r must be >= 2");
  const std::uint64_t last = element_at(n);
  const std::uint64_t bound = multi_prime_bound(r, last);
  if (bound < 3) return 0;
  const auto primes = odd_primes_up_to(bound);
  return count_tuples(primes, r, last);
}

std::uint64_t count_class(const CompositePattern& pattern, SequenceIndex n) {
  using Shape = CompositePattern::Shape;
  switch (pattern.shape) {
    case Shape::KL:
      return count_kl(n);
    case Shape::KKL:
      return count_kkl(n);
    case Shape::KPow:
      return count_kpow(pattern.param, n);
    case Shape::KPowL:
      return count_kpow_l(pattern.param, n);
    case Shape::Multi:
      return count_multi(pattern.param, n);
  }
  throw std::invalid_argument("count_class: unknown pattern");
}

Strategy parse_strategy(std::string_view text) {
  if (text == "paper" || text == "paper_eq6") return Strategy::PaperEq6;
  if (text == "oracle" || text == "oracle_exact") return Strategy::OracleExact;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "' (expected paper or oracle)");
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::PaperEq6:
      return "paper";
    case Strategy::OracleExact:
      return "oracle";
  }
  return "?";
}

Eq6Assembler::Eq6Assembler(std::uint64_t max_element) : max_element_(max_element) {
  const std::uint64_t bound = multi_prime_bound(3, max_element);
  if (bound >= 3) primes_ = odd_primes_up_to(bound);
}

std::uint64_t Eq6Assembler::count_multi_cached(unsigned r, std::uint64_t last) const {
  const std::uint64_t bound = multi_prime_bound(r, last);
  const auto end = std::ranges::upper_bound(primes_, bound);
  return count_tuples(std::span(primes_.begin(), end), r, last);
}

std::vector<Eq6Term> Eq6Assembler::terms(SequenceIndex n) const {
  const std::uint64_t last = element_at(n);
  if (last > max_element_) {
    throw std::domain_error("Eq6Assembler: U_n = " + std::to_string(last) + " beyond prepared bound " +
                            std::to_string(max_element_));
  }
  std::vector<Eq6Term> out;
  out.push_back({CompositePattern::kl(), 1, count_kl(n)});
  for (unsigned j = 2; intmath::pow_capped(3, j + 1, last); ++j) {
    const auto shape = j == 2 ? CompositePattern::kkl() : CompositePattern::kpow_l(j);
    out.push_back({shape, -1, count_kpow_l(j, n)});
    out.push_back({CompositePattern::kpow(j + 1), 1, count_kpow(j + 1, n)});
  }
  for (unsigned r = 3; smallest_multi(r, last); ++r) {
    out.push_back({CompositePattern::multi(r), -static_cast<std::int64_t>(r - 1), count_multi_cached(r, last)});
  }
  return out;
}

std::int64_t Eq6Assembler::w(SequenceIndex n) const {
  std::int64_t total = 0;
  for (const auto& t : terms(n)) total += t.coefficient * static_cast<std::int64_t>(t.count);
  return total;
}

namespace {

std::int64_t oracle_w(SequenceIndex n, const oracle::SieveTable* table) {
  const std::uint64_t last = element_at(n);
  if (table != nullptr && table->limit() >= last) {
    return static_cast<std::int64_t>(oracle::oracle_odd_composites(*table, n));
  }
  const auto local = oracle::sieve_build(last);
  return static_cast<std::int64_t>(oracle::oracle_odd_composites(local, n));
}

}  // namespace

std::int64_t assemble_w(SequenceIndex n, Strategy strategy, const oracle::SieveTable* table) {
  switch (strategy) {
    case Strategy::PaperEq6:
      return Eq6Assembler(element_at(n)).w(n);
    case Strategy::OracleExact:
      return oracle_w(n, table);
  }
  throw std::invalid_argument("assemble_w: unknown strategy");
}

PiBreakdown pi_of(double x, Strategy strategy, const oracle::SieveTable* table) {
  if (std::isnan(x) || x < 2.0) throw std::domain_error("pi_of: x must be >= 2");
  PiBreakdown r;
  r.x = x;
  r.strategy = strategy;
  r.m_corr = 1;
  if (x < 3.0) {
    r.pi = 1;
    return r;
  }
  const SequenceIndex n = index_at(x);
  r.n = n;
  r.m_n = n.value + 1;
  switch (strategy) {
    case Strategy::PaperEq6: {
      const Eq6Assembler eq6(element_at(n));
      for (const auto& t : eq6.terms(n)) {
        r.class_counts[t.pattern] = t.count;
        r.w_n += t.coefficient * static_cast<std::int64_t>(t.count);
      }
      break;
    }
    case Strategy::OracleExact:
      r.w_n = oracle_w(n, table);
      break;
  }
  r.pi = static_cast<std::int64_t>(r.m_n) - r.w_n + r.m_corr;
  return r;
}

}  // namespace odsq
