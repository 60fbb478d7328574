#include "odsq/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "odsq/errors.hpp"

namespace odsq::oracle {

namespace {

std::uint64_t last_element(SequenceIndex n) {
  if (n.value > (UINT64_MAX - 3) / 2) throw std::overflow_error("oracle: index out of range");
  return 3 + 2 * n.value;
}

std::uint64_t odd_count(std::uint64_t limit) { return limit < 3 ? 0 : (limit - 3) / 2 + 1; }

// Histogram over odd values 3..last, then cumulative counts by index.
class OddHistogram {
 public:
  explicit OddHistogram(std::uint64_t last) : last_(last), hits_((last - 3) / 2 + 1, 0) {}

  std::uint64_t last() const { return last_; }
  void hit(std::uint64_t odd_value) { ++hits_[(odd_value - 3) / 2]; }

  std::vector<std::uint64_t> cumulative() && {
    std::uint64_t acc = 0;
    for (auto& h : hits_) {
      acc += h;
      h = acc;
    }
    return std::move(hits_);
  }

 private:
  std::uint64_t last_;
  std::vector<std::uint64_t> hits_;
};

// Calls visit(product) for every tuple of the class with product <= last.
template <class Visit>
void walk_class(const CompositePattern& pattern, std::uint64_t last, const SieveTable* table, Visit&& visit) {
  using Shape = CompositePattern::Shape;
  switch (pattern.shape) {
    case Shape::KL:
      for (std::uint64_t k = 3; k <= last / k; k += 2) {
        for (std::uint64_t l = k; l <= last / k; l += 2) visit(k * l);
      }
      return;
    case Shape::KKL:
    case Shape::KPowL: {
      const unsigned j = pattern.shape == Shape::KKL ? 2 : pattern.param;
      for (std::uint64_t k = 3;; k += 2) {
        // kj = k^j, stop once k^j * k > last
        std::uint64_t kj = 1;
        bool over = false;
        for (unsigned i = 0; i < j && !over; ++i) {
          if (kj > last / k) over = true;
          else kj *= k;
        }
        if (over || kj > last / k) return;
        for (std::uint64_t l = k; l <= last / kj; l += 2) visit(kj * l);
      }
    }
    case Shape::KPow:
      for (std::uint64_t k = 3;; k += 2) {
        std::uint64_t kj = 1;
        for (unsigned i = 0; i < pattern.param; ++i) {
          if (kj > last / k) return;
          kj *= k;
        }
        visit(kj);
      }
    case Shape::Multi: {
      SieveTable local;
      const SieveTable* src = table;
      const std::uint64_t need = std::max<std::uint64_t>(last / 3, 3);
      if (src == nullptr || src->limit() < need) {
        local = sieve_build(need);
        src = &local;
      }
      std::vector<std::uint64_t> primes = src->primes(need);
      primes.erase(primes.begin());  // drop 2
      const unsigned r = pattern.param;
      auto dfs = [&](auto&& self, std::size_t from, std::uint64_t prod, unsigned left) -> void {
        if (left == 0) {
          visit(prod);
          return;
        }
        for (std::size_t i = from; i < primes.size(); ++i) {
          // remaining factors are all >= primes[i]
          std::uint64_t bound = prod;
          bool over = false;
          for (unsigned t = 0; t < left && !over; ++t) {
            if (bound > last / primes[i]) over = true;
            else bound *= primes[i];
          }
          if (over) return;
          self(self, i + 1, prod * primes[i], left - 1);
        }
      };
      dfs(dfs, 0, 1, r);
      return;
    }
  }
}

}  // namespace

SieveTable::SieveTable(std::uint64_t limit, std::vector<std::uint64_t> words)
    : limit_(limit), words_(std::move(words)) {
  build_rank();
}

void SieveTable::build_rank() {
  rank_.assign(words_.size() + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    rank_[i + 1] = rank_[i] + static_cast<std::uint64_t>(std::popcount(words_[i]));
  }
}

SieveTable SieveTable::from_words(std::uint64_t limit, std::vector<std::uint64_t> words) {
  if (limit < 2) throw std::domain_error("sieve: limit must be >= 2");
  const std::uint64_t bits = odd_count(limit);
  if (words.size() != (bits + 63) / 64) throw std::runtime_error("sieve: word count does not match limit");
  if (bits % 64 != 0 && !words.empty() && (words.back() >> (bits % 64)) != 0) {
    throw std::runtime_error("sieve: bits set beyond limit");
  }
  return SieveTable(limit, std::move(words));
}

bool SieveTable::is_prime(std::uint64_t v) const {
  if (v > limit_) throw std::domain_error("sieve: " + std::to_string(v) + " beyond limit");
  if (v < 3) return v == 2;
  if (v % 2 == 0) return false;
  const std::uint64_t i = (v - 3) / 2;
  return (words_[i / 64] >> (i % 64)) & 1U;
}

std::uint64_t SieveTable::pi(std::uint64_t x) const {
  if (x > limit_) throw std::domain_error("sieve: " + std::to_string(x) + " beyond limit");
  if (x < 2) return 0;
  if (x < 3) return 1;
  const std::uint64_t bits = (x - 3) / 2 + 1;  // odd values 3..x
  std::uint64_t count = rank_[bits / 64];
  if (bits % 64 != 0) {
    const std::uint64_t mask = (std::uint64_t{1} << (bits % 64)) - 1;
    count += static_cast<std::uint64_t>(std::popcount(words_[bits / 64] & mask));
  }
  return count + 1;
}

std::vector<std::uint64_t> SieveTable::primes(std::uint64_t bound) const {
  bound = std::min(bound, limit_);
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  out.push_back(2);
  for (std::uint64_t v = 3; v <= bound; v += 2) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

SieveTable sieve_build(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 2) throw std::domain_error("sieve_build: limit must be >= 2");
  if (limit > cap) {
    throw resource_error("sieve_build: limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));
  }
  const std::uint64_t bits = odd_count(limit);
  std::vector<std::uint64_t> words((bits + 63) / 64, ~std::uint64_t{0});
  if (bits % 64 != 0) words.back() = (std::uint64_t{1} << (bits % 64)) - 1;
  for (std::uint64_t p = 3; p <= limit / p; p += 2) {
    const std::uint64_t ip = (p - 3) / 2;
    if (!((words[ip / 64] >> (ip % 64)) & 1U)) continue;
    // odd multiples of p from p^2, stepping 2p in value = p in bit index
    for (std::uint64_t i = (p * p - 3) / 2; i < bits; i += p) {
      words[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  }
  return SieveTable(limit, std::move(words));
}

std::uint64_t oracle_pi(const SieveTable& table, std::uint64_t x) {
  if (x < 2) throw std::domain_error("oracle_pi: x must be >= 2");
  if (x > table.limit()) {
    throw std::domain_error("oracle_pi: x = " + std::to_string(x) + " exceeds sieve limit " +
                            std::to_string(table.limit()));
  }
  return table.pi(x);
}

std::uint64_t oracle_odd_composites(const SieveTable& table, SequenceIndex n) {
  const std::uint64_t last = last_element(n);
  if (last > table.limit()) throw std::domain_error("oracle_odd_composites: U_n exceeds sieve limit");
  return (n.value + 1) - (table.pi(last) - 1);
}

std::uint64_t oracle_count_class(const CompositePattern& pattern, SequenceIndex n, const SieveTable* table) {
  std::uint64_t count = 0;
  walk_class(pattern, last_element(n), table, [&](std::uint64_t) { ++count; });
  return count;
}

std::vector<std::uint64_t> oracle_class_profile(const CompositePattern& pattern, SequenceIndex n_max,
                                                const SieveTable* table) {
  OddHistogram hist(last_element(n_max));
  walk_class(pattern, hist.last(), table, [&](std::uint64_t v) { hist.hit(v); });
  return std::move(hist).cumulative();
}

std::uint64_t oracle_count_p_composites(std::uint64_t p, SequenceIndex n) {
  const std::uint64_t last = last_element(n);
  std::uint64_t count = 0;
  for (std::uint64_t u = 3; u <= last; u += 2) {
    if (u % p == 0 && u / p >= p && (u / p) % 3 != 0) ++count;
  }
  return count;
}

std::vector<std::uint64_t> oracle_p_composite_profile(std::uint64_t p, SequenceIndex n_max) {
  std::vector<std::uint64_t> out(n_max.value + 1, 0);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i <= n_max.value; ++i) {
    const std::uint64_t u = 3 + 2 * i;
    if (u % p == 0 && u / p >= p && (u / p) % 3 != 0) ++count;
    out[i] = count;
  }
  return out;
}

std::vector<std::uint64_t> oracle_square_times_odd_profile(SequenceIndex n_max) {
  OddHistogram hist(last_element(n_max));
  const std::uint64_t last = hist.last();
  for (std::uint64_t k = 3; k * k <= last / 3; k += 2) {
    for (std::uint64_t l = 3; l <= last / (k * k); l += 2) hist.hit(k * k * l);
  }
  return std::move(hist).cumulative();
}

std::uint64_t AscendingFactorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, m] : factors) {
    for (unsigned i = 0; i < m; ++i) v *= p;
  }
  return v;
}

AscendingFactorization factorize_ascending(std::uint64_t u) {
  if (u < 2) throw std::domain_error("factorize_ascending: u must be >= 2");
  AscendingFactorization f;
  auto strip = [&](std::uint64_t d) {
    unsigned m = 0;
    while (u % d == 0) {
      u /= d;
      ++m;
    }
    if (m > 0) f.factors.emplace_back(d, m);
  };
  strip(2);
  for (std::uint64_t d = 3; d <= u / d; d += 2) strip(d);
  if (u > 1) f.factors.emplace_back(u, 1);
  return f;
}

namespace {

constexpr std::array<char, 4> kMagic = {'O', 'D', 'S', 'Q'};

template <class T>
void put_le(std::ostream& out, T v) {
  std::array<char, sizeof(T)> buf{};
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(buf.data(), buf.size());
}

template <class T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> buf{};
  if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size())) {
    throw std::runtime_error("sieve dump: truncated input");
  }
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void save_sieve(const SieveTable& table, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kSieveFormatVersion);
  put_le<std::uint64_t>(out, table.limit());
  put_le<std::uint64_t>(out, table.words().size());
  for (std::uint64_t w : table.words()) put_le<std::uint64_t>(out, w);
  if (!out) throw std::runtime_error("sieve dump: write failed");
}

SieveTable load_sieve(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("sieve dump: bad magic");
  }
  const auto version = get_le<std::uint32_t>(in);
  if (version != kSieveFormatVersion) {
    throw std::runtime_error("sieve dump: unsupported version " + std::to_string(version));
  }
  const auto limit = get_le<std::uint64_t>(in);
  const auto count = get_le<std::uint64_t>(in);
  if (limit < 2 || count != (odd_count(limit) + 63) / 64) {
    throw std::runtime_error("sieve dump: header inconsistent");
  }
  std::vector<std::uint64_t> words;
  words.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) words.push_back(get_le<std::uint64_t>(in));
  return SieveTable::from_words(limit, std::move(words));
}

void save_sieve(const SieveTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("sieve dump: cannot open " + path.string());
  save_sieve(table, out);
}

SieveTable load_sieve(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("sieve dump: cannot open " + path.string());
  return load_sieve(in);
}

}  // namespace odsq::oracle
