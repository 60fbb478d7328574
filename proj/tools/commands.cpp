#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "odsq/ascending.hpp"
#include "odsq/errors.hpp"
#include "odsq/primegen.hpp"
#include "odsq/sequences.hpp"
#include "odsq/zfuncs.hpp"

namespace odsq::cli {

namespace {

using nlohmann::json;

double parse_real(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a finite number");
  }
  return v;
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  const double v = parse_real(text, what);
  if (v < 0 || std::floor(v) != v || v >= 18446744073709551616.0) {
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class Range>
void print_spaced(std::ostream& out, const Range& values) {
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << '\n';
}

// ---- count --------------------------------------------------------------

struct ClassSpec {
  enum class Kind { Three, P, KL, KKL, KPow, W };
  Kind kind = Kind::Three;
  std::uint64_t param = 0;
  std::string text;
};

ClassSpec parse_class(const std::string& text) {
  ClassSpec c;
  c.text = text;
  if (text == "3") {
    c.kind = ClassSpec::Kind::Three;
  } else if (text == "kl") {
    c.kind = ClassSpec::Kind::KL;
  } else if (text == "kkl") {
    c.kind = ClassSpec::Kind::KKL;
  } else if (text == "w") {
    c.kind = ClassSpec::Kind::W;
  } else if (text.starts_with("p:")) {
    c.kind = ClassSpec::Kind::P;
    c.param = parse_count(text.substr(2), "class p:<prime>");
    make_zcounter(c.param);  // validates
  } else if (text.starts_with("kpow:")) {
    c.kind = ClassSpec::Kind::KPow;
    c.param = parse_count(text.substr(5), "class kpow:<j>");
    if (c.param < 1 || c.param > 64) throw std::invalid_argument("class kpow:<j>: j must be in [1, 64]");
  } else {
    throw std::invalid_argument("unknown class '" + text + "' (expected 3, p:<prime>, kl, kkl, kpow:<j>)");
  }
  return c;
}

bool has_paper_form(const ClassSpec& c) {
  return c.kind == ClassSpec::Kind::KKL ||
         (c.kind == ClassSpec::Kind::P && (c.param == 5 || c.param == 7 || c.param == 11));
}

std::uint64_t closed_form(const ClassSpec& c, SequenceIndex n, bool paper) {
  switch (c.kind) {
    case ClassSpec::Kind::Three:
      return count_3(n);
    case ClassSpec::Kind::P:
      return paper ? count_p_paper(c.param, n) : count_p_corrected(c.param, n);
    case ClassSpec::Kind::KL:
      return count_kl(n);
    case ClassSpec::Kind::KKL:
      return paper ? count_kkl_paper(n) : count_kkl(n);
    case ClassSpec::Kind::KPow:
      return count_kpow(static_cast<unsigned>(c.param), n);
    case ClassSpec::Kind::W:
      break;
  }
  throw std::invalid_argument("class '" + c.text + "' has no single closed-form counter");
}

struct CountArgs {
  std::string cls;
  std::uint64_t at_n = 0;
  std::string at_x;
  bool paper = false;
  bool corrected = false;
  std::string format = "text";
};

int cmd_count(const CountArgs& a, bool have_n, std::ostream& out) {
  const ClassSpec c = parse_class(a.cls);
  const SequenceIndex n = have_n ? SequenceIndex{a.at_n} : index_at(parse_real(a.at_x, "--at-x"));
  const bool want_paper = a.paper;
  const bool want_corrected = a.corrected || !a.paper;
  if (want_paper && c.kind == ClassSpec::Kind::P && !has_paper_form(c)) {
    throw std::invalid_argument("--paper: printed counters exist only for p:5, p:7, p:11");
  }
  const bool both = want_paper && want_corrected && has_paper_form(c);

  std::uint64_t paper_value = 0;
  std::uint64_t corrected_value = 0;
  if (want_paper) paper_value = closed_form(c, n, true);
  if (want_corrected || !both) corrected_value = closed_form(c, n, false);
  const std::uint64_t single = want_paper && !want_corrected ? paper_value : corrected_value;

  if (a.format == "json") {
    json j{{"class", c.text}, {"n", n.value}, {"u_n", element_at(n)}};
    if (both) {
      j["paper"] = paper_value;
      j["corrected"] = corrected_value;
    } else {
      j["value"] = single;
    }
    out << j.dump() << '\n';
  } else if (a.format == "csv") {
    if (both) {
      out << "class,n,paper,corrected\n" << c.text << ',' << n.value << ',' << paper_value << ','
          << corrected_value << '\n';
    } else {
      out << "class,n,value\n" << c.text << ',' << n.value << ',' << single << '\n';
    }
  } else if (both) {
    out << "paper=" << paper_value << " corrected=" << corrected_value << '\n';
  } else {
    out << single << '\n';
  }
  return kExitOk;
}

// ---- pi -----------------------------------------------------------------

void render_pi(const PiBreakdown& b, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << json(b).dump() << '\n';
    return;
  }
  const std::string n_text = b.n ? std::to_string(b.n->value) : "";
  if (format == "csv") {
    out << "x,n,m_n,w_n,m,pi,strategy\n"
        << number_json(b.x).dump() << ',' << n_text << ',' << b.m_n << ',' << b.w_n << ',' << b.m_corr << ','
        << b.pi << ',' << to_string(b.strategy) << '\n';
    return;
  }
  out << "x        " << number_json(b.x).dump() << '\n'
      << "n        " << (b.n ? n_text : "-") << '\n'
      << "M_n      " << b.m_n << '\n';
  for (const auto& [pattern, count] : b.class_counts) {
    out << "  count(" << pattern.to_string() << ") " << count << '\n';
  }
  out << "W_n      " << b.w_n << '\n'
      << "m        " << b.m_corr << '\n'
      << "pi       " << b.pi << '\n'
      << "strategy " << to_string(b.strategy) << '\n';
}

// ---- verify -------------------------------------------------------------

ReportRow compare(std::string quantity, std::string variant, bool gating, std::uint64_t count,
                  const auto& closed, const auto& truth) {
  ReportRow row;
  row.quantity = std::move(quantity);
  row.variant = std::move(variant);
  row.gating = gating;
  row.checked = count;
  auto record = [&](std::uint64_t i, std::int64_t lhs, std::int64_t rhs) {
    row.location = i;
    row.paper_value = lhs;
    row.oracle_value = rhs;
    row.delta = lhs - rhs;
  };
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto lhs = static_cast<std::int64_t>(closed(i));
    const auto rhs = static_cast<std::int64_t>(truth(i));
    if (lhs != rhs && row.mismatches++ == 0) record(i, lhs, rhs);
    if (i + 1 == count && row.mismatches == 0) record(i, lhs, rhs);
  }
  return row;
}

void render_verify(const VerifyReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << json(r).dump() << '\n';
    return;
  }
  if (format == "csv") {
    out << "quantity,variant,status,checked,mismatches,location_kind,location,paper,oracle,delta\n";
    for (const auto& row : r.rows) {
      out << row.quantity << ',' << row.variant << ',' << row.status() << ',' << row.checked << ','
          << row.mismatches << ',' << row.location_kind << ',' << row.location << ',' << row.paper_value << ','
          << row.oracle_value << ',' << row.delta << '\n';
    }
    return;
  }
  out << std::left << std::setw(10) << "quantity" << std::setw(13) << "variant" << std::setw(7) << "status"
      << std::setw(9) << "checked" << std::setw(11) << "mismatches" << std::setw(10) << "at n" << std::setw(10)
      << "paper" << std::setw(10) << "oracle" << "delta\n";
  for (const auto& row : r.rows) {
    out << std::left << std::setw(10) << row.quantity << std::setw(13) << row.variant << std::setw(7)
        << row.status() << std::setw(9) << row.checked << std::setw(11) << row.mismatches << std::setw(10)
        << row.location << std::setw(10) << row.paper_value << std::setw(10) << row.oracle_value << row.delta
        << '\n';
  }
  out << "verify: " << (r.passed() ? "PASS" : "FAIL") << " (" << r.rows.size() << " rows";
  if (r.has_warnings()) out << ", WARN: informational deviations present";
  out << ")\n";
}

// ---- bench --------------------------------------------------------------

template <class F>
std::uint64_t median_ns(std::uint64_t repeats, F&& f) {
  std::vector<std::uint64_t> samples;
  samples.reserve(repeats);
  for (std::uint64_t i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
  }
  std::ranges::sort(samples);
  return samples[samples.size() / 2];
}

void render_bench(const std::vector<BenchRow>& rows, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << json(rows).dump() << '\n';
    return;
  }
  if (format == "csv") {
    out << "name,x_max,repeats,median_ns,result\n";
    for (const auto& r : rows) {
      out << r.name << ',' << r.x_max << ',' << r.repeats << ',' << r.median_ns << ',' << r.result << '\n';
    }
    return;
  }
  out << std::left << std::setw(14) << "name" << std::setw(12) << "x_max" << std::setw(9) << "repeats"
      << std::setw(16) << "median_ns" << "result\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(14) << r.name << std::setw(12) << r.x_max << std::setw(9) << r.repeats
        << std::setw(16) << r.median_ns << r.result << '\n';
  }
}

}  // namespace

oracle::SieveTable cached_sieve(std::uint64_t limit) {
  limit = std::max<std::uint64_t>(limit, 2);
  const char* env = std::getenv("ODSQ_SIEVE_CACHE");
  if (env == nullptr || *env == '\0') return oracle::sieve_build(limit);

  const std::filesystem::path path(env);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      auto table = oracle::load_sieve(path);
      if (table.limit() >= limit) return table;
    } catch (const std::runtime_error&) {
      // unreadable or stale dump: rebuild below
    }
  }
  auto table = oracle::sieve_build(limit);
  try {
    oracle::save_sieve(table, path);
  } catch (const std::runtime_error&) {
    // cache is best effort
  }
  return table;
}

VerifyReport run_verify(std::uint64_t max_n, const std::vector<std::string>& classes, Variant variant) {
  VerifyReport report;
  report.max_n = max_n;
  if (max_n == 0) return report;

  const SequenceIndex last{max_n - 1};
  const bool corrected = variant != Variant::Paper;
  const bool paper = variant != Variant::Corrected;
  auto at = [](std::uint64_t i) { return SequenceIndex{i}; };

  for (const auto& text : classes) {
    const ClassSpec c = parse_class(text);
    switch (c.kind) {
      case ClassSpec::Kind::Three: {
        std::vector<std::uint64_t> threes(max_n, 0);
        std::uint64_t acc = 0;
        for (std::uint64_t i = 0; i < max_n; ++i) {
          const std::uint64_t u = 3 + 2 * i;
          if (u > 3 && u % 3 == 0) ++acc;
          threes[i] = acc;
        }
        report.rows.push_back(compare(c.text, "closed-form", true, max_n, [&](std::uint64_t i) { return count_3(at(i)); },
                                      [&](std::uint64_t i) { return threes[i]; }));
        break;
      }
      case ClassSpec::Kind::P: {
        const auto truth = oracle::oracle_p_composite_profile(c.param, last);
        if (corrected) {
          report.rows.push_back(compare(c.text, "corrected", true, max_n,
                                        [&](std::uint64_t i) { return count_p_corrected(c.param, at(i)); },
                                        [&](std::uint64_t i) { return truth[i]; }));
        }
        if (paper && has_paper_form(c)) {
          report.rows.push_back(compare(c.text, "paper", false, max_n,
                                        [&](std::uint64_t i) { return count_p_paper(c.param, at(i)); },
                                        [&](std::uint64_t i) { return truth[i]; }));
        }
        break;
      }
      case ClassSpec::Kind::KL: {
        const auto truth = oracle::oracle_class_profile(CompositePattern::kl(), last);
        report.rows.push_back(compare(c.text, "closed-form", true, max_n, [&](std::uint64_t i) { return count_kl(at(i)); },
                                      [&](std::uint64_t i) { return truth[i]; }));
        break;
      }
      case ClassSpec::Kind::KKL: {
        const auto truth = oracle::oracle_class_profile(CompositePattern::kkl(), last);
        if (corrected) {
          report.rows.push_back(compare(c.text, "corrected", true, max_n,
                                        [&](std::uint64_t i) { return count_kkl(at(i)); },
                                        [&](std::uint64_t i) { return truth[i]; }));
        }
        if (paper) {
          report.rows.push_back(compare(c.text, "paper", false, max_n,
                                        [&](std::uint64_t i) { return count_kkl_paper(at(i)); },
                                        [&](std::uint64_t i) { return truth[i]; }));
        }
        break;
      }
      case ClassSpec::Kind::KPow: {
        const auto j = static_cast<unsigned>(c.param);
        const auto truth = oracle::oracle_class_profile(CompositePattern::kpow(j), last);
        report.rows.push_back(compare(c.text, "closed-form", true, max_n,
                                      [&](std::uint64_t i) { return count_kpow(j, at(i)); },
                                      [&](std::uint64_t i) { return truth[i]; }));
        break;
      }
      case ClassSpec::Kind::W: {
        const auto table = cached_sieve(element_at(last));
        const Eq6Assembler eq6(element_at(last));
        report.rows.push_back(compare(c.text, "paper_eq6", false, max_n, [&](std::uint64_t i) { return eq6.w(at(i)); },
                                      [&](std::uint64_t i) { return oracle::oracle_odd_composites(table, at(i)); }));
        break;
      }
    }
  }
  return report;
}

std::vector<BenchRow> run_bench(std::uint64_t x_max, std::uint64_t repeats) {
  if (x_max < 2) throw std::invalid_argument("bench: --x-max must be >= 2");
  if (repeats < 1) throw std::invalid_argument("bench: --repeats must be >= 1");
  const double x = static_cast<double>(x_max);
  std::vector<BenchRow> rows;

  oracle::SieveTable table;
  rows.push_back({"sieve_build", x_max, repeats, median_ns(repeats, [&] { table = oracle::sieve_build(x_max); }),
                  static_cast<std::int64_t>(table.limit())});

  std::int64_t result = 0;
  rows.push_back({"pi(oracle)", x_max, repeats,
                  median_ns(repeats, [&] { result = pi_of(x, Strategy::OracleExact, &table).pi; }), result});
  rows.push_back({"pi(paper)", x_max, repeats,
                  median_ns(repeats, [&] { result = pi_of(x, Strategy::PaperEq6).pi; }), result});

  const std::uint64_t count = oracle::oracle_pi(table, x_max);
  rows.push_back({"gen", x_max, repeats, median_ns(repeats, [&] {
                    result = static_cast<std::int64_t>(first_n_primes(count).back());
                  }),
                  result});
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"odsq: prime counting and generation over the sequence of odd numbers"};
  app.name("odsq");
  app.require_subcommand(1, 1);
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  // pi
  auto* pi_cmd = app.add_subcommand("pi", "pi(x) = M_n - W_n + m with the full breakdown");
  std::string pi_x;
  std::string pi_strategy = "oracle";
  std::string pi_format = "text";
  pi_cmd->add_option("x", pi_x, "Upper bound x >= 2")->required();
  pi_cmd->add_option("--strategy", pi_strategy, "How W_n is assembled")->check(CLI::IsMember({"paper", "oracle"}));
  pi_cmd->add_option("--format", pi_format)->check(formats);

  // count
  auto* count_cmd = app.add_subcommand("count", "Closed-form composite counters");
  CountArgs count_args;
  count_cmd->add_option("class", count_args.cls, "3, p:<prime>, kl, kkl or kpow:<j>")->required();
  auto* at_n = count_cmd->add_option("--at-n", count_args.at_n, "Raw sequence index n");
  auto* at_x = count_cmd->add_option("--at-x", count_args.at_x, "Position x, converted to n = eta(sigma(x))");
  at_n->excludes(at_x);
  count_cmd->add_flag("--paper", count_args.paper, "Printed form (p:5, p:7, p:11, kkl)");
  count_cmd->add_flag("--corrected", count_args.corrected, "Oracle-matching form (default)");
  count_cmd->add_option("--format", count_args.format)->check(formats);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "First N primes by the partition walk");
  std::string gen_n;
  bool include_two = true;
  bool strict_paper = true;
  std::uint64_t max_count = kDefaultMaxPrimeCount;
  std::string gen_format = "text";
  gen_cmd->add_option("N", gen_n, "Number of primes")->required();
  gen_cmd->add_flag("--include-two,!--no-include-two", include_two, "Start the list at 2 (default)");
  gen_cmd->add_flag("--strict-paper,!--no-strict-paper", strict_paper,
                    "Exclusive partition loop guard (default); --no-strict-paper visits b^2 too");
  gen_cmd->add_option("--max-count", max_count, "Safety limit on N");
  gen_cmd->add_option("--format", gen_format)->check(formats);

  // tseries
  auto* ts_cmd = app.add_subcommand("tseries", "Odd numbers coprime to a set of odd primes");
  std::string ts_divisors;
  std::string ts_limit;
  std::string ts_format = "text";
  ts_cmd->add_option("divisors", ts_divisors, "Comma-separated odd primes, e.g. 3,5")->required();
  ts_cmd->add_option("--limit", ts_limit, "Largest value to emit")->required();
  ts_cmd->add_option("--format", ts_format)->check(formats);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms against the oracle for n < max-n");
  std::string v_max_n = "10000";
  std::string v_classes = "3,p:5,p:7,p:11,p:13,kl,kkl,kpow:2,kpow:3,w";
  std::string v_variant = "corrected";
  std::string v_format = "text";
  verify_cmd->add_option("--max-n", v_max_n, "Number of indices checked (0..max-n-1)");
  verify_cmd->add_option("--classes", v_classes, "Comma-separated classes: 3, p:<prime>, kl, kkl, kpow:<j>, w");
  verify_cmd->add_option("--variant", v_variant)->check(CLI::IsMember({"corrected", "paper", "both"}));
  verify_cmd->add_option("--format", v_format)->check(formats);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Median timings per strategy (informational)");
  std::string b_x_max = "1e6";
  std::string b_repeats = "5";
  std::string b_format = "text";
  bench_cmd->add_option("--x-max", b_x_max);
  bench_cmd->add_option("--repeats", b_repeats);
  bench_cmd->add_option("--format", b_format)->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "odsq: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*pi_cmd) {
      render_pi(pi_of(parse_real(pi_x, "x"), parse_strategy(pi_strategy), nullptr), pi_format, out);
      return kExitOk;
    }
    if (*count_cmd) {
      if (at_n->count() == 0 && at_x->count() == 0) throw std::invalid_argument("count: one of --at-n or --at-x is required");
      return cmd_count(count_args, at_n->count() > 0, out);
    }
    if (*gen_cmd) {
      GeneratorOptions opts;
      opts.include_two = include_two;
      opts.guard = strict_paper ? LoopGuard::Verbatim : LoopGuard::Inclusive;
      opts.max_count = max_count;
      const auto primes = first_n_primes(parse_count(gen_n, "N"), opts);
      if (gen_format == "json") {
        out << json{{"count", primes.size()},
                    {"include_two", include_two},
                    {"guard", strict_paper ? "verbatim" : "inclusive"},
                    {"primes", primes}}
                   .dump()
            << '\n';
      } else if (gen_format == "csv") {
        out << "index,prime\n";
        for (std::size_t i = 0; i < primes.size(); ++i) out << i + 1 << ',' << primes[i] << '\n';
      } else {
        print_spaced(out, primes);
      }
      return kExitOk;
    }
    if (*ts_cmd) {
      std::vector<std::uint64_t> divisors;
      for (const auto& d : split_list(ts_divisors)) divisors.push_back(parse_count(d, "divisor"));
      const WheelSpec spec = wheel_build(divisors);
      const auto elements = wheel_stream(spec, parse_count(ts_limit, "--limit"));
      if (ts_format == "json") {
        out << json{{"divisors", spec.divisors}, {"period", spec.period}, {"offsets", spec.offsets},
                    {"seeds", spec.seeds},       {"elements", elements}}
                   .dump()
            << '\n';
      } else if (ts_format == "csv") {
        out << "index,element\n";
        for (std::size_t i = 0; i < elements.size(); ++i) out << i << ',' << elements[i] << '\n';
      } else {
        print_spaced(out, elements);
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      const Variant variant = v_variant == "paper" ? Variant::Paper : v_variant == "both" ? Variant::Both : Variant::Corrected;
      const auto report = run_verify(parse_count(v_max_n, "--max-n"), split_list(v_classes), variant);
      render_verify(report, v_format, out);
      if (report.has_warnings()) err << "WARN: paper-variant deviations are informational\n";
      return report.passed() ? kExitOk : kExitMismatch;
    }
    if (*bench_cmd) {
      render_bench(run_bench(parse_count(b_x_max, "--x-max"), parse_count(b_repeats, "--repeats")), b_format, out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "odsq: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace odsq::cli
