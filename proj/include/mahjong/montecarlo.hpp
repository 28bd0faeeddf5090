#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mahjong/gates.hpp"

namespace mahjong {

struct McConfig {
  int hand_size = 13;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int jobs = 1;  // execution detail; never affects the sampled statistics

  friend bool operator==(const McConfig&, const McConfig&) = default;
};

struct McClassStat {
  std::string label;
  std::uint64_t count = 0;
  Rational exact;
  double z = 0.0;              // meaningless when low_expectation is set
  bool low_expectation = false;  // expected count < 10: flagged, not z-tested

  friend bool operator==(const McClassStat&, const McClassStat&) = default;
};

struct McReport {
  McConfig config;
  std::string rng;
  std::vector<McClassStat> classes;

  std::uint64_t total_count() const {
    std::uint64_t t = 0;
    for (const auto& c : classes) t += c.count;
    return t;
  }

  friend bool operator==(const McReport&, const McReport&) = default;
};

// Trials are processed in fixed blocks of this many draws; each block seeds
// its own generator from the master seed, so the tallies are identical for
// any worker count.
inline constexpr std::uint64_t kMcBlockSize = 1u << 16;

inline constexpr std::string_view kMcRngId =
    "mt19937_64, one generator per 65536-trial block, block seed = splitmix64(master_seed + "
    "block_index), bounded draws by rejection";

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform value in [0, n) with no modulo bias; identical on every platform.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = gen();
  while (x >= limit) x = gen();
  return x % n;
}

}  // namespace detail

// Draws `trials` uniform size-subsets of the 36 physical tiles (tiles of one
// rank are interchangeable only in the resulting pattern), classifies each
// via a precomputed exact table, and compares class frequencies against the
// exact probabilities. Deterministic given the config.
inline McReport sample_gate_distribution(const McConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("montecarlo needs at least one trial");
  require_hand_size(cfg.hand_size);
  const int mode = cfg.hand_size % 3;
  if (mode == 0 || cfg.hand_size == 0 || cfg.hand_size > kPoolSize - 1)
    throw std::invalid_argument(
        "montecarlo hand size must be 1 mod 3 (gate classes) or 2 mod 3 (winning rate), got " +
        std::to_string(cfg.hand_size));

  // Class index per canonical key, plus exact probability per class.
  std::vector<std::int8_t> table(kKeySpace, -1);
  std::vector<std::string> labels;
  std::vector<Rational> exact;
  if (mode == 1) {
    const Classification cls = classify_all(cfg.hand_size, cfg.jobs, true);
    for (const auto& rec : cls.records)
      table[rec.hand.key()] = static_cast<std::int8_t>(rec.gates());
    for (int g = 0; g <= kNumRanks; ++g) {
      labels.push_back("gates=" + std::to_string(g));
      exact.push_back(cls.histogram.probability(g));
    }
  } else {
    MeldDecomposer decomposer;
    std::uint64_t winning_ways = 0;
    for_each_hand(cfg.hand_size, [&](const Hand& h) {
      Counts c = h.counts();
      const bool win = decomposer.can_win(c, cfg.hand_size);
      table[h.key()] = win ? 1 : 0;
      if (win) winning_ways += draw_ways(h);
    });
    const BigInt denom = binomial(kPoolSize, cfg.hand_size);
    labels = {"not-winning", "winning"};
    exact = {Rational(denom - winning_ways, denom), Rational(BigInt(winning_ways), denom)};
  }
  const auto num_classes = labels.size();

  const std::uint64_t blocks = (cfg.trials + kMcBlockSize - 1) / kMcBlockSize;
  const auto run_block = [&](std::uint64_t b, std::vector<std::uint64_t>& tally) {
    std::mt19937_64 gen(detail::splitmix64(cfg.seed + b));
    const std::uint64_t begin = b * kMcBlockSize;
    const std::uint64_t end = std::min(cfg.trials, begin + kMcBlockSize);
    std::array<std::uint8_t, kPoolSize> pool{};
    for (std::uint64_t t = begin; t < end; ++t) {
      std::iota(pool.begin(), pool.end(), std::uint8_t{0});
      Counts c{};
      for (int i = 0; i < cfg.hand_size; ++i) {
        const auto j = i + detail::bounded(gen, static_cast<std::uint64_t>(kPoolSize - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        ++c[pool[static_cast<std::size_t>(i)] >> 2];
      }
      ++tally[static_cast<std::size_t>(table[encode_counts(c)])];
    }
  };

  std::vector<std::uint64_t> counts(num_classes, 0);
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(std::max(cfg.jobs, 1), std::max<std::uint64_t>(blocks, 1)));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b, counts);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(num_classes, 0));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::uint64_t b = static_cast<std::uint64_t>(w); b < blocks;
             b += static_cast<std::uint64_t>(workers))
          run_block(b, partial[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& part : partial)
      for (std::size_t k = 0; k < num_classes; ++k) counts[k] += part[k];
  }

  McReport report;
  report.config = cfg;
  report.rng = std::string(kMcRngId);
  for (std::size_t k = 0; k < num_classes; ++k) {
    McClassStat stat;
    stat.label = labels[k];
    stat.count = counts[k];
    stat.exact = exact[k];
    const double p = exact[k].to_double();
    const double expected = p * static_cast<double>(cfg.trials);
    stat.low_expectation = expected < 10.0;
    if (!stat.low_expectation && p < 1.0) {
      const double sd = std::sqrt(expected * (1.0 - p));
      stat.z = (static_cast<double>(stat.count) - expected) / sd;
    }
    report.classes.push_back(std::move(stat));
  }
  return report;
}

}  // namespace mahjong
