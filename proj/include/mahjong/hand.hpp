#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mahjong {

inline constexpr int kNumRanks = 9;
inline constexpr int kMaxCopies = 4;
inline constexpr int kPoolSize = kNumRanks * kMaxCopies;  // 36 tiles in one suit

// Number of distinct count vectors, 5^9. Canonical keys live in [0, kKeySpace).
inline constexpr std::uint32_t kKeySpace = 1953125;

// Per-rank tile multiplicities, counts[i] = copies of rank i+1.
using Counts = std::array<std::uint8_t, kNumRanks>;

inline bool is_valid_rank(int rank) { return rank >= 1 && rank <= kNumRanks; }

inline void require_rank(int rank) {
  if (!is_valid_rank(rank))
    throw std::invalid_argument("rank must be in 1..9, got " + std::to_string(rank));
}

// Base-5 positional encoding of a count vector, rank 1 most significant.
// Injective over all valid count vectors; doubles as memo and sort key.
inline std::uint32_t encode_counts(const Counts& c) {
  std::uint32_t key = 0;
  for (int i = 0; i < kNumRanks; ++i) key = key * 5 + c[i];
  return key;
}

// A multiset of tiles from one numeric suit. Immutable after construction.
class Hand {
 public:
  Hand() : counts_{}, size_(0) {}

  explicit Hand(const Counts& counts) : counts_(counts), size_(0) {
    for (int i = 0; i < kNumRanks; ++i) {
      if (counts_[i] > kMaxCopies)
        throw std::invalid_argument("more than 4 copies of rank " + std::to_string(i + 1));
      size_ = static_cast<std::uint8_t>(size_ + counts_[i]);
    }
  }

  // Accepts either a digit string ("1112345678999", any order) or a
  // comma-separated 9-tuple of per-rank counts ("3,1,1,1,1,1,1,1,3").
  static Hand parse(std::string_view text);

  const Counts& counts() const { return counts_; }

  int count(int rank) const {
    require_rank(rank);
    return counts_[rank - 1];
  }

  int size() const { return size_; }

  // Hand with one extra tile of the given rank.
  Hand with_tile(int rank) const {
    require_rank(rank);
    if (counts_[rank - 1] == kMaxCopies)
      throw std::invalid_argument("all 4 copies of rank " + std::to_string(rank) + " already in hand");
    Counts c = counts_;
    ++c[rank - 1];
    return Hand(c);
  }

  // Rank reflection j -> 10-j. An involution; preserves pungs, chows, pairs.
  Hand dual() const {
    Counts c = counts_;
    std::reverse(c.begin(), c.end());
    return Hand(c);
  }

  std::uint32_t key() const { return encode_counts(counts_); }

  // Sorted digit string; parse(str()) reproduces the hand.
  std::string str() const {
    std::string s;
    s.reserve(size_);
    for (int i = 0; i < kNumRanks; ++i)
      s.append(counts_[i], static_cast<char>('1' + i));
    return s;
  }

  friend bool operator==(const Hand&, const Hand&) = default;

 private:
  Counts counts_;
  std::uint8_t size_;
};

inline bool operator<(const Hand& a, const Hand& b) { return a.key() < b.key(); }

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Hand Hand::parse(std::string_view text) {
  text = detail::strip(text);
  Counts c{};
  if (text.find(',') != std::string_view::npos) {
    int fields = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view field =
          detail::strip(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
      if (fields >= kNumRanks)
        throw std::invalid_argument("count tuple must have exactly 9 fields");
      if (field.size() != 1 || field[0] < '0' || field[0] > '9')
        throw std::invalid_argument("bad count field '" + std::string(field) + "' (expect a digit 0-4)");
      const int v = field[0] - '0';
      if (v > kMaxCopies)
        throw std::invalid_argument("count " + std::to_string(v) + " exceeds the 4 copies of rank " +
                                    std::to_string(fields + 1));
      c[fields++] = static_cast<std::uint8_t>(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (fields != kNumRanks)
      throw std::invalid_argument("count tuple must have exactly 9 fields, got " + std::to_string(fields));
  } else {
    for (const char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument(std::string("bad tile digit '") + ch + "' (expect 1-9)");
      if (c[ch - '1'] == kMaxCopies)
        throw std::invalid_argument(std::string("more than 4 copies of rank ") + ch);
      ++c[ch - '1'];
    }
  }
  return Hand(c);
}

// The set of ranks whose addition completes a hand. At most 9 members.
class WinningSet {
 public:
  WinningSet() = default;

  void add(int rank) {
    require_rank(rank);
    bits_ |= static_cast<std::uint16_t>(1u << (rank - 1));
  }

  bool contains(int rank) const {
    require_rank(rank);
    return (bits_ >> (rank - 1)) & 1u;
  }

  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint16_t bits() const { return bits_; }

  static WinningSet from_bits(std::uint16_t bits) {
    if (bits >= (1u << kNumRanks)) throw std::invalid_argument("winning-set bits out of range");
    WinningSet ws;
    ws.bits_ = bits;
    return ws;
  }

  // Image under the dual map r -> 10-r.
  WinningSet mirrored() const {
    WinningSet ws;
    for (int r = 1; r <= kNumRanks; ++r)
      if (contains(r)) ws.add(kNumRanks + 1 - r);
    return ws;
  }

  std::vector<int> ranks() const {
    std::vector<int> out;
    for (int r = 1; r <= kNumRanks; ++r)
      if (contains(r)) out.push_back(r);
    return out;
  }

  // "1 2 9" style; empty string for the empty set.
  std::string str() const {
    std::string s;
    for (int r = 1; r <= kNumRanks; ++r) {
      if (!contains(r)) continue;
      if (!s.empty()) s += ' ';
      s += static_cast<char>('0' + r);
    }
    return s;
  }

  // "129" style, for single-column report fields.
  std::string compact() const {
    std::string s;
    for (int r = 1; r <= kNumRanks; ++r)
      if (contains(r)) s += static_cast<char>('0' + r);
    return s;
  }

  friend bool operator==(const WinningSet&, const WinningSet&) = default;

 private:
  std::uint16_t bits_ = 0;
};

}  // namespace mahjong
