#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "odsq/oracle.hpp"
#include "odsq/report.hpp"

namespace odsq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without argv[0]) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Variant { Corrected, Paper, Both };

/// Differential check of each class over indices 0..max_n-1.
VerifyReport run_verify(std::uint64_t max_n, const std::vector<std::string>& classes, Variant variant);

std::vector<BenchRow> run_bench(std::uint64_t x_max, std::uint64_t repeats);

/// Sieve covering `limit`, read from $ODSQ_SIEVE_CACHE when it holds a large
/// enough dump and written back there after a fresh build.
oracle::SieveTable cached_sieve(std::uint64_t limit);

}  // namespace odsq::cli
