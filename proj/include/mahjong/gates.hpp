#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <thread>
#include <unordered_set>
#include <vector>

#include "mahjong/decomposition.hpp"
#include "mahjong/enumeration.hpp"

namespace mahjong {

inline void require_waiting_size(int size) {
  if (size % 3 != 1)
    throw std::invalid_argument("winning-tile query needs a hand of 1 mod 3 tiles, got " +
                                std::to_string(size));
}

// Ranks whose addition completes the hand. A rank with all four copies in
// hand can never be drawn and is never a member.
inline WinningSet winning_tiles(const Hand& h, MeldDecomposer& decomposer) {
  require_waiting_size(h.size());
  WinningSet ws;
  Counts c = h.counts();
  for (int r = 0; r < kNumRanks; ++r) {
    if (c[r] == kMaxCopies) continue;
    ++c[r];
    if (decomposer.can_win(c, h.size() + 1)) ws.add(r + 1);
    --c[r];
  }
  return ws;
}

inline WinningSet winning_tiles(const Hand& h) {
  MeldDecomposer decomposer;
  return winning_tiles(h, decomposer);
}

struct GateRecord {
  Hand hand;
  WinningSet winning;
  std::uint64_t ways = 0;

  int gates() const { return winning.count(); }

  friend bool operator==(const GateRecord&, const GateRecord&) = default;
};

// Per-gate-count aggregate over all hands of one size.
struct GateHistogram {
  int hand_size = 0;
  std::array<std::uint64_t, kNumRanks + 1> hands{};
  std::array<std::uint64_t, kNumRanks + 1> ways{};

  std::uint64_t total_hands() const {
    std::uint64_t t = 0;
    for (const auto v : hands) t += v;
    return t;
  }

  std::uint64_t total_ways() const {
    std::uint64_t t = 0;
    for (const auto v : ways) t += v;
    return t;
  }

  // Exact draw probability of the gate class: ways / C(36, size).
  Rational probability(int gates) const {
    return Rational(BigInt(ways.at(static_cast<std::size_t>(gates))),
                    binomial(kPoolSize, hand_size));
  }

  Rational total_probability() const {
    return Rational(BigInt(total_ways()), binomial(kPoolSize, hand_size));
  }

  friend bool operator==(const GateHistogram&, const GateHistogram&) = default;
};

struct Classification {
  GateHistogram histogram;
  std::vector<GateRecord> records;  // canonical order; empty unless requested
};

// Classifies every hand of the given size by winning-tile set. Partitions the
// stream by rank-1 count; each worker owns a decomposer and a partial result,
// and partials merge by plain addition and ordered concatenation, so the
// outcome does not depend on the worker count.
inline Classification classify_all(int size, int jobs = 1, bool keep_records = true) {
  require_waiting_size(size);
  require_hand_size(size);

  struct Partial {
    GateHistogram hist;
    std::vector<GateRecord> records;
  };
  std::array<Partial, kMaxCopies + 1> partials;

  const auto run_partition = [&](int p, MeldDecomposer& decomposer) {
    Partial& part = partials[static_cast<std::size_t>(p)];
    part.hist.hand_size = size;
    for_each_hand_in_partition(size, p, [&](const Hand& h) {
      const WinningSet ws = winning_tiles(h, decomposer);
      const std::uint64_t w = draw_ways(h);
      const auto g = static_cast<std::size_t>(ws.count());
      ++part.hist.hands[g];
      part.hist.ways[g] += w;
      if (keep_records) part.records.push_back({h, ws, w});
    });
  };

  const int workers = std::clamp(jobs, 1, kMaxCopies + 1);
  if (workers <= 1) {
    MeldDecomposer decomposer;
    for (int p = 0; p <= kMaxCopies; ++p) run_partition(p, decomposer);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        MeldDecomposer decomposer;
        for (int p = t; p <= kMaxCopies; p += workers) run_partition(p, decomposer);
      });
    }
    for (auto& th : threads) th.join();
  }

  Classification out;
  out.histogram.hand_size = size;
  for (const auto& part : partials) {
    for (std::size_t g = 0; g <= kNumRanks; ++g) {
      out.histogram.hands[g] += part.hist.hands[g];
      out.histogram.ways[g] += part.hist.ways[g];
    }
  }
  if (keep_records) {
    std::size_t n = 0;
    for (const auto& part : partials) n += part.records.size();
    out.records.reserve(n);
    for (auto& part : partials)
      out.records.insert(out.records.end(), part.records.begin(), part.records.end());
  }
  return out;
}

// All records of one gate count, canonical order.
inline std::vector<GateRecord> hands_with_gate_count(int size, int gates, int jobs = 1) {
  if (gates < 0 || gates > kNumRanks)
    throw std::invalid_argument("gate count must be in 0..9, got " + std::to_string(gates));
  Classification cls = classify_all(size, jobs, true);
  std::vector<GateRecord> out;
  for (auto& rec : cls.records)
    if (rec.gates() == gates) out.push_back(std::move(rec));
  return out;
}

// For every 3-subset of ranks: is it the exact winning set of some 13-tile
// hand? 84 entries, keyed by the ascending triple.
inline std::map<std::array<int, 3>, bool> triples_coverage(int jobs = 1) {
  const Classification cls = classify_all(13, jobs, true);
  std::unordered_set<std::uint16_t> realized;
  for (const auto& rec : cls.records)
    if (rec.gates() == 3) realized.insert(rec.winning.bits());

  std::map<std::array<int, 3>, bool> out;
  for (int i = 1; i <= kNumRanks; ++i)
    for (int j = i + 1; j <= kNumRanks; ++j)
      for (int k = j + 1; k <= kNumRanks; ++k) {
        WinningSet ws;
        ws.add(i);
        ws.add(j);
        ws.add(k);
        out[{i, j, k}] = realized.contains(ws.bits());
      }
  return out;
}

}  // namespace mahjong
