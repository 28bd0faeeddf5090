#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahjong/montecarlo.hpp"

namespace mahjong {

// Pattern and draw-way totals for one hand size, partitioned by rank-1 count
// so the scan can run on several workers. Merging is plain addition.
struct WinningStats {
  std::uint64_t winning_patterns = 0;
  std::uint64_t total_patterns = 0;
  std::uint64_t winning_ways = 0;
};

inline WinningStats winning_stats(int size, int jobs = 1) {
  if (size < 2 || size > kPoolSize || size % 3 != 2)
    throw std::invalid_argument("winning-count needs a size of 2 mod 3 in 2..36, got " +
                                std::to_string(size));
  std::array<WinningStats, kMaxCopies + 1> partials{};
  const auto run_partition = [&](int p, MeldDecomposer& decomposer) {
    auto& part = partials[static_cast<std::size_t>(p)];
    for_each_hand_in_partition(size, p, [&](const Hand& h) {
      ++part.total_patterns;
      Counts c = h.counts();
      if (decomposer.can_win(c, size)) {
        ++part.winning_patterns;
        part.winning_ways += draw_ways(h);
      }
    });
  };
  const int workers = std::clamp(jobs, 1, kMaxCopies + 1);
  if (workers <= 1) {
    MeldDecomposer decomposer;
    for (int p = 0; p <= kMaxCopies; ++p) run_partition(p, decomposer);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t)
      threads.emplace_back([&, t] {
        MeldDecomposer decomposer;
        for (int p = t; p <= kMaxCopies; p += workers) run_partition(p, decomposer);
      });
    for (auto& th : threads) th.join();
  }
  WinningStats out;
  for (const auto& part : partials) {
    out.winning_patterns += part.winning_patterns;
    out.total_patterns += part.total_patterns;
    out.winning_ways += part.winning_ways;
  }
  return out;
}

}  // namespace mahjong

namespace mahjong::cli {

inline constexpr std::string_view kToolName = "mjgates";
inline constexpr std::string_view kVersion = "1.0.0";

namespace detail {

inline std::string fraction(std::uint64_t num, const BigInt& den) {
  return std::to_string(num) + "/" + den.str();
}

inline std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Resolves --out against MJGATES_OUT_DIR and owns the chosen stream.
class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    std::filesystem::path p(path);
    if (p.is_relative()) {
      if (const char* dir = std::getenv("MJGATES_OUT_DIR"); dir && *dir)
        p = std::filesystem::path(dir) / p;
    }
    file_.open(p, std::ios::binary);
    if (!file_) throw std::invalid_argument("cannot open output file " + p.string());
    os_ = &file_;
  }

  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

inline void report_preamble(std::ostream& os, const std::string& command_echo) {
  os << "# " << kToolName << " " << kVersion << "\n";
  os << "# command: " << command_echo << "\n";
}

inline void run_enumerate(int size, const std::string& format, std::ostream& os) {
  HandStream stream(size);
  const bool digits = format == "digits";
  while (auto h = stream.next()) {
    if (digits) {
      os << h->str() << "\n";
    } else {
      const auto& c = h->counts();
      for (int i = 0; i < kNumRanks; ++i) os << (i ? "," : "") << int(c[i]);
      os << "\n";
    }
  }
}

inline void run_check(const std::string& hand_text, std::ostream& os) {
  const Hand h = Hand::parse(hand_text);
  if (const auto win = is_winning(h)) {
    os << "winning\n";
    os << "pair " << char('0' + win->pair_rank) << char('0' + win->pair_rank) << "\n";
    for (const auto& m : win->melds) os << "meld " << m.str() << "\n";
  } else {
    os << "not winning\n";
  }
}

inline void run_gates(const std::string& hand_text, std::ostream& os) {
  const Hand h = Hand::parse(hand_text);
  os << winning_tiles(h).str() << "\n";
}

inline void run_dual(const std::string& hand_text, std::ostream& os) {
  os << Hand::parse(hand_text).dual().str() << "\n";
}

inline void run_prob(const std::string& hand_text, int places, std::ostream& os) {
  const Hand h = Hand::parse(hand_text);
  const std::uint64_t ways = draw_ways(h);
  const BigInt den = binomial(kPoolSize, h.size());
  os << fraction(ways, den) << " ≈ " << Rational(BigInt(ways), den).decimal(places) << "\n";
}

inline void run_winning_count(int size, int places, int jobs, std::ostream& os) {
  const WinningStats stats = winning_stats(size, jobs);
  const BigInt den = binomial(kPoolSize, size);
  os << stats.winning_patterns << " / " << stats.total_patterns << " patterns; probability "
     << Rational(BigInt(stats.winning_patterns), BigInt(stats.total_patterns)).decimal(places)
     << "\n";
  os << "draw-weighted: " << fraction(stats.winning_ways, den) << " ≈ "
     << Rational(BigInt(stats.winning_ways), den).decimal(places) << "\n";
}

// Gate classes with at most this many hands are listed in full by default;
// --full lists every class.
inline constexpr std::uint64_t kDefaultRecordLimit = 100;

inline void run_classify(int size, bool full, const std::string& format, int places, int jobs,
                         std::ostream& os) {
  const Classification cls = classify_all(size, jobs, true);
  const BigInt den = binomial(kPoolSize, size);
  const auto list_class = [&](int g) {
    const auto n = cls.histogram.hands[static_cast<std::size_t>(g)];
    return n > 0 && (full || n <= kDefaultRecordLimit);
  };

  if (format == "tsv") {
    report_preamble(os, "classify --size " + std::to_string(size) + (full ? " --full" : "") +
                            " --format tsv --places " + std::to_string(places));
    os << "# denominator: C(36," << size << ") = " << den.str() << "\n";
    os << "# section: histogram\n";
    os << "gates\thands\tways\tprobability\tdecimal\n";
    for (int g = kNumRanks; g >= 0; --g) {
      const auto gi = static_cast<std::size_t>(g);
      os << g << "\t" << cls.histogram.hands[gi] << "\t" << cls.histogram.ways[gi] << "\t"
         << fraction(cls.histogram.ways[gi], den) << "\t"
         << cls.histogram.probability(g).decimal(places) << "\n";
    }
    os << "total\t" << cls.histogram.total_hands() << "\t" << cls.histogram.total_ways() << "\t"
       << fraction(cls.histogram.total_ways(), den) << "\t"
       << cls.histogram.total_probability().decimal(places) << "\n";
    for (int g = kNumRanks; g >= 0; --g) {
      if (!list_class(g)) continue;
      os << "# section: hands gates=" << g << " ("
         << cls.histogram.hands[static_cast<std::size_t>(g)] << ")\n";
      os << "hand\twinning\tgates\tways\tprobability\tdecimal\n";
      for (const auto& rec : cls.records) {
        if (rec.gates() != g) continue;
        os << rec.hand.str() << "\t" << rec.winning.compact() << "\t" << g << "\t" << rec.ways
           << "\t" << fraction(rec.ways, den) << "\t"
           << Rational(BigInt(rec.ways), den).decimal(places) << "\n";
      }
    }
    return;
  }

  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = "classify";
  j["parameters"] = {{"size", size}, {"full", full}, {"places", places}};
  j["denominator"] = den.str();
  auto& hist = j["histogram"] = nlohmann::ordered_json::array();
  for (int g = kNumRanks; g >= 0; --g) {
    const auto gi = static_cast<std::size_t>(g);
    hist.push_back({{"gates", g},
                    {"hands", cls.histogram.hands[gi]},
                    {"ways", cls.histogram.ways[gi]},
                    {"probability", fraction(cls.histogram.ways[gi], den)},
                    {"decimal", cls.histogram.probability(g).decimal(places)}});
  }
  j["total"] = {{"hands", cls.histogram.total_hands()},
                {"ways", cls.histogram.total_ways()},
                {"probability", cls.histogram.total_probability().str()}};
  auto& hands = j["hands"] = nlohmann::ordered_json::object();
  for (int g = kNumRanks; g >= 0; --g) {
    if (!list_class(g)) continue;
    auto& arr = hands[std::to_string(g)] = nlohmann::ordered_json::array();
    for (const auto& rec : cls.records) {
      if (rec.gates() != g) continue;
      arr.push_back({{"hand", rec.hand.str()},
                     {"winning", rec.winning.ranks()},
                     {"ways", rec.ways}});
    }
  }
  os << j.dump(2) << "\n";
}

inline void run_coverage_triples(const std::string& format, int jobs, std::ostream& os) {
  const auto coverage = triples_coverage(jobs);
  int realized = 0;
  for (const auto& [triple, ok] : coverage) realized += ok ? 1 : 0;

  if (format == "tsv") {
    report_preamble(os, "coverage-triples --format tsv");
    os << "# size: 13\n";
    os << "# realized: " << realized << " of " << coverage.size() << "\n";
    os << "triple\trealized\n";
    for (const auto& [triple, ok] : coverage)
      os << triple[0] << triple[1] << triple[2] << "\t" << (ok ? "yes" : "no") << "\n";
    return;
  }

  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = "coverage-triples";
  j["size"] = 13;
  j["realized"] = realized;
  j["excluded"] = coverage.size() - static_cast<std::size_t>(realized);
  auto& arr = j["triples"] = nlohmann::ordered_json::array();
  for (const auto& [triple, ok] : coverage)
    arr.push_back({{"triple", triple}, {"realized", ok}});
  os << j.dump(2) << "\n";
}

inline void run_montecarlo(const McConfig& cfg, int places, const std::string& format,
                           std::ostream& os) {
  const McReport report = sample_gate_distribution(cfg);
  const auto frequency = [&](std::uint64_t count) {
    return Rational(BigInt(count), BigInt(cfg.trials)).decimal(places);
  };

  if (format == "tsv") {
    report_preamble(os, "montecarlo --size " + std::to_string(cfg.hand_size) + " --trials " +
                            std::to_string(cfg.trials) + " --seed " + std::to_string(cfg.seed) +
                            " --places " + std::to_string(places));
    os << "# rng: " << report.rng << "\n";
    os << "# denominator: C(36," << cfg.hand_size << ") = "
       << binomial(kPoolSize, cfg.hand_size).str() << "\n";
    os << "class\tcount\tfrequency\texact\texact_decimal\tz\tflagged\n";
    for (const auto& s : report.classes) {
      os << s.label << "\t" << s.count << "\t" << frequency(s.count) << "\t" << s.exact.str()
         << "\t" << s.exact.decimal(places) << "\t"
         << (s.low_expectation ? "-" : fixed3(s.z)) << "\t"
         << (s.low_expectation ? "yes" : "no") << "\n";
    }
    return;
  }

  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = "montecarlo";
  j["parameters"] = {{"size", cfg.hand_size},
                     {"trials", cfg.trials},
                     {"seed", cfg.seed},
                     {"places", places}};
  j["rng"] = report.rng;
  auto& arr = j["classes"] = nlohmann::ordered_json::array();
  for (const auto& s : report.classes) {
    nlohmann::ordered_json row = {{"class", s.label},
                                  {"count", s.count},
                                  {"frequency", frequency(s.count)},
                                  {"exact", s.exact.str()},
                                  {"exact_decimal", s.exact.decimal(places)},
                                  {"flagged", s.low_expectation}};
    if (!s.low_expectation) row["z"] = fixed3(s.z);
    arr.push_back(std::move(row));
  }
  os << j.dump(2) << "\n";
}

}  // namespace detail

// Entry point shared by the binary and the tests. `args` excludes the
// program name. Returns 0 on success, 1 on a domain error, 2 on usage.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exhaustive analysis of single-suit (dot) mahjong hands"};
  app.name(std::string(kToolName));
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string hand_text;
  std::string format_handlist = "digits";
  std::string format_report = "tsv";
  std::string out_path;
  int size = 13;
  int places = 6;
  int jobs = 1;
  bool full = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  auto* enumerate = app.add_subcommand("enumerate", "list every hand of a size, one per line");
  enumerate->add_option("--size", size, "hand size (0..36)")->required();
  enumerate->add_option("--format", format_handlist, "digits or counts")
      ->check(CLI::IsMember({"digits", "counts"}));
  enumerate->add_option("--out", out_path, "write to file instead of stdout");

  auto* check = app.add_subcommand("check", "is the hand one pair plus melds?");
  check->add_option("hand", hand_text, "hand (digit string or 9 comma-separated counts)")
      ->required();

  auto* gates = app.add_subcommand("gates", "ranks whose addition completes the hand");
  gates->add_option("hand", hand_text, "hand of 1 mod 3 tiles")->required();

  auto* dual = app.add_subcommand("dual", "rank-reflected hand (j -> 10-j)");
  dual->add_option("hand", hand_text, "hand in either notation")->required();

  auto* prob = app.add_subcommand("prob", "exact draw probability of the hand pattern");
  prob->add_option("hand", hand_text, "hand in either notation")->required();
  prob->add_option("--places", places, "decimal places (half-even), default 6");

  auto* classify = app.add_subcommand("classify", "gate histogram over all hands of a size");
  classify->footer("TSV columns: gates, hands, ways, probability (ways over C(36,size)), decimal.\n"
                   "Hand sections list: hand, winning (concatenated ranks), gates, ways, "
                   "probability, decimal.\nClasses of at most 100 hands are listed by default.");
  classify->add_option("--size", size, "hand size, 1 mod 3 (e.g. 13 or 16)")->required();
  classify->add_flag("--full", full, "list every hand of every class");
  classify->add_option("--format", format_report, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  classify->add_option("--places", places, "decimal places (half-even), default 6");
  classify->add_option("--jobs", jobs, "worker threads (never changes the output)");
  classify->add_option("--out", out_path, "write to file instead of stdout");

  auto* coverage = app.add_subcommand("coverage-triples",
                                      "which rank triples occur as exact winning sets (size 13)");
  coverage->footer("TSV columns: triple (concatenated ranks), realized (yes/no).");
  coverage->add_option("--format", format_report, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  coverage->add_option("--jobs", jobs, "worker threads (never changes the output)");
  coverage->add_option("--out", out_path, "write to file instead of stdout");

  auto* winning_count = app.add_subcommand("winning-count", "how many hands of a size win");
  winning_count->add_option("--size", size, "hand size, 2 mod 3 (e.g. 14 or 17)")->required();
  winning_count->add_option("--places", places, "decimal places (half-even), default 6");
  winning_count->add_option("--jobs", jobs, "worker threads (never changes the output)");

  auto* montecarlo = app.add_subcommand("montecarlo", "seeded sampling check of exact values");
  montecarlo->footer("TSV columns: class, count, frequency (count/trials), exact, exact_decimal, "
                     "z, flagged.\nClasses whose expected count is below 10 are flagged instead "
                     "of z-tested.");
  montecarlo->add_option("--size", size, "hand size, 1 mod 3 (gate classes) or 2 mod 3 (winning rate)")
      ->required();
  montecarlo->add_option("--trials", trials, "number of sampled draws")->required();
  montecarlo->add_option("--seed", seed, "master RNG seed, default 0");
  montecarlo->add_option("--places", places, "decimal places (half-even), default 6");
  montecarlo->add_option("--jobs", jobs, "worker threads (never changes the output)");
  montecarlo->add_option("--format", format_report, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  montecarlo->add_option("--out", out_path, "write to file instead of stdout");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    detail::OutputSink sink(out_path, out);
    std::ostream& os = sink.stream();
    if (*enumerate) {
      detail::run_enumerate(size, format_handlist, os);
    } else if (*check) {
      detail::run_check(hand_text, os);
    } else if (*gates) {
      detail::run_gates(hand_text, os);
    } else if (*dual) {
      detail::run_dual(hand_text, os);
    } else if (*prob) {
      detail::run_prob(hand_text, places, os);
    } else if (*classify) {
      detail::run_classify(size, full, format_report, places, jobs, os);
    } else if (*coverage) {
      detail::run_coverage_triples(format_report, jobs, os);
    } else if (*winning_count) {
      detail::run_winning_count(size, places, jobs, os);
    } else if (*montecarlo) {
      detail::run_montecarlo(McConfig{size, trials, seed, jobs}, places, format_report, os);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mahjong::cli
