#pragma once

#include <cstdint>
#include <optional>

#include "mahjong/combinatorics.hpp"
#include "mahjong/hand.hpp"

namespace mahjong {

inline void require_hand_size(int size) {
  if (size < 0 || size > kPoolSize)
    throw std::invalid_argument("hand size must be in 0..36, got " + std::to_string(size));
}

// Number of distinct hands of the given size, via the generating function.
inline std::uint64_t count_hands(int size) {
  require_hand_size(size);
  static const CoeffVector coeffs = gf_expand(kMaxCopies, kNumRanks);
  return coeffs[static_cast<std::size_t>(size)].convert_to<std::uint64_t>();
}

namespace detail {

// Walks counts[index..] over 0..4 with sum pruning; every leaf reached is a
// valid hand, visited in ascending canonical-key order.
template <class F>
void enumerate_suffix(Counts& c, int index, int remaining, F& f) {
  if (index == kNumRanks) {
    f(Hand(c));
    return;
  }
  const int capacity_after = kMaxCopies * (kNumRanks - index - 1);
  const int lo = std::max(0, remaining - capacity_after);
  const int hi = std::min(kMaxCopies, remaining);
  for (int v = lo; v <= hi; ++v) {
    c[index] = static_cast<std::uint8_t>(v);
    enumerate_suffix(c, index + 1, remaining - v, f);
  }
  c[index] = 0;
}

}  // namespace detail

// Calls f(const Hand&) for every hand of the given size, each exactly once,
// in ascending canonical-key order.
template <class F>
void for_each_hand(int size, F&& f) {
  require_hand_size(size);
  Counts c{};
  detail::enumerate_suffix(c, 0, size, f);
}

// Sub-stream holding rank-1 count fixed. The five partitions are disjoint,
// cover the full stream, and concatenate (rank1_count ascending) back into
// canonical order, so workers can consume them independently.
template <class F>
void for_each_hand_in_partition(int size, int rank1_count, F&& f) {
  require_hand_size(size);
  if (rank1_count < 0 || rank1_count > kMaxCopies)
    throw std::invalid_argument("rank-1 count must be in 0..4");
  const int rest = size - rank1_count;
  if (rest < 0 || rest > kMaxCopies * (kNumRanks - 1)) return;
  Counts c{};
  c[0] = static_cast<std::uint8_t>(rank1_count);
  detail::enumerate_suffix(c, 1, rest, f);
}

// Pull-style stream over the same sequence, for consumers that cannot take a
// callback. Holds one count vector of state; nothing is materialized.
class HandStream {
 public:
  explicit HandStream(int size) : counts_{} {
    require_hand_size(size);
    fill_minimal(0, size);
  }

  std::optional<Hand> next() {
    if (exhausted_) return std::nullopt;
    if (!started_) {
      started_ = true;
      return Hand(counts_);
    }
    if (!advance()) {
      exhausted_ = true;
      return std::nullopt;
    }
    return Hand(counts_);
  }

 private:
  // Lexicographically smallest suffix with the given total: mass packed right.
  void fill_minimal(int from, int amount) {
    for (int i = kNumRanks - 1; i >= from; --i) {
      const int take = std::min(amount, kMaxCopies);
      counts_[i] = static_cast<std::uint8_t>(take);
      amount -= take;
    }
  }

  bool advance() {
    int suffix_sum = counts_[kNumRanks - 1];
    for (int i = kNumRanks - 2; i >= 0; --i) {
      suffix_sum += counts_[i];
      // counts_[i] can grow only if the later ranks hold a tile to give up.
      if (counts_[i] < kMaxCopies && suffix_sum - counts_[i] >= 1) {
        const int rest = suffix_sum - counts_[i] - 1;
        ++counts_[i];
        fill_minimal(i + 1, rest);
        return true;
      }
    }
    return false;
  }

  Counts counts_;
  bool started_ = false;
  bool exhausted_ = false;
};

}  // namespace mahjong
