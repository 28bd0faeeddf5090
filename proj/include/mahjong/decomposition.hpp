#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mahjong/enumeration.hpp"
#include "mahjong/hand.hpp"

namespace mahjong {

// A pung (three identical tiles) or a chow (three consecutive ranks).
struct Meld {
  enum class Kind : std::uint8_t { Pung, Chow };
  Kind kind;
  int rank;  // pung rank; chow start rank (<= 7)

  std::string str() const {
    const char a = static_cast<char>('0' + rank);
    if (kind == Kind::Pung) return {a, a, a};
    return {a, static_cast<char>(a + 1), static_cast<char>(a + 2)};
  }

  friend bool operator==(const Meld&, const Meld&) = default;
};

// One pair plus melds; a witness that a hand wins.
struct Decomposition {
  int pair_rank = 0;
  std::vector<Meld> melds;

  // Re-assembles the hand this decomposition covers.
  Hand to_hand() const {
    Counts c{};
    c[pair_rank - 1] = 2;
    for (const auto& m : melds) {
      if (m.kind == Meld::Kind::Pung) {
        c[m.rank - 1] = static_cast<std::uint8_t>(c[m.rank - 1] + 3);
      } else {
        for (int i = 0; i < 3; ++i) ++c[m.rank - 1 + i];
      }
    }
    return Hand(c);
  }
};

namespace detail {

// Meld cover of a count vector by the forced-move walk: at the lowest
// occupied rank, three or more copies must form a pung (any cover using them
// as chows rearranges into one that pungs them), and fewer copies can only
// sit in a chow starting there. Both moves are forced, so the walk is linear
// and complete. Returns the meld list, or nullopt when the cover fails.
inline std::optional<std::vector<Meld>> forced_meld_cover(Counts c, int tiles) {
  std::vector<Meld> melds;
  melds.reserve(static_cast<std::size_t>(tiles / 3));
  while (tiles > 0) {
    int r = 0;
    while (c[r] == 0) ++r;
    if (c[r] >= 3) {
      c[r] = static_cast<std::uint8_t>(c[r] - 3);
      melds.push_back({Meld::Kind::Pung, r + 1});
    } else if (r + 2 < kNumRanks && c[r + 1] > 0 && c[r + 2] > 0) {
      --c[r];
      --c[r + 1];
      --c[r + 2];
      melds.push_back({Meld::Kind::Chow, r + 1});
    } else {
      return std::nullopt;
    }
    tiles -= 3;
  }
  return melds;
}

}  // namespace detail

// Decides meld covers and winning splits. The memo table maps canonical keys
// to cover verdicts; the meld count is implied by the tile total, so the key
// alone is sound. One instance per worker, or share one under external
// synchronization — verdicts are identical either way.
class MeldDecomposer {
 public:
  MeldDecomposer() = default;
  explicit MeldDecomposer(bool use_memo) : use_memo_(use_memo) {}

  // True iff the counts split into tiles/3 melds. Restores `c` before return.
  bool covers_melds(Counts& c, int tiles) {
    if (tiles == 0) return true;
    std::uint32_t key = 0;
    if (use_memo_) {
      key = encode_counts(c);
      if (memo_.empty()) memo_.assign(kKeySpace, 0);
      if (const auto v = memo_[key]) return v == kYes;
    }
    int r = 0;
    while (c[r] == 0) ++r;
    bool ok = false;
    if (c[r] >= 3) {
      c[r] = static_cast<std::uint8_t>(c[r] - 3);
      ok = covers_melds(c, tiles - 3);
      c[r] = static_cast<std::uint8_t>(c[r] + 3);
    } else if (r + 2 < kNumRanks && c[r + 1] > 0 && c[r + 2] > 0) {
      --c[r];
      --c[r + 1];
      --c[r + 2];
      ok = covers_melds(c, tiles - 3);
      ++c[r];
      ++c[r + 1];
      ++c[r + 2];
    }
    if (use_memo_) memo_[key] = ok ? kYes : kNo;
    return ok;
  }

  // True iff some pair can be removed so the rest covers as melds.
  // Pair ranks are probed in ascending order. Restores `c` before return.
  bool can_win(Counts& c, int size) {
    for (int j = 0; j < kNumRanks; ++j) {
      if (c[j] < 2) continue;
      c[j] = static_cast<std::uint8_t>(c[j] - 2);
      const bool ok = covers_melds(c, size - 2);
      c[j] = static_cast<std::uint8_t>(c[j] + 2);
      if (ok) return true;
    }
    return false;
  }

 private:
  static constexpr std::int8_t kYes = 1;
  static constexpr std::int8_t kNo = 2;

  std::vector<std::int8_t> memo_;
  bool use_memo_ = true;
};

// Witness cover of a 3k-tile hand by exactly k melds, or nullopt.
inline std::optional<std::vector<Meld>> decompose_melds_exact(const Hand& h, int k,
                                                              MeldDecomposer& decomposer) {
  if (k < 0 || h.size() != 3 * k)
    throw std::invalid_argument("decompose_melds_exact: hand of " + std::to_string(h.size()) +
                                " tiles cannot form " + std::to_string(k) + " melds");
  Counts c = h.counts();
  if (!decomposer.covers_melds(c, h.size())) return std::nullopt;
  return detail::forced_meld_cover(c, h.size());
}

inline std::optional<std::vector<Meld>> decompose_melds_exact(const Hand& h, int k) {
  if (k < 0 || h.size() != 3 * k)
    throw std::invalid_argument("decompose_melds_exact: hand of " + std::to_string(h.size()) +
                                " tiles cannot form " + std::to_string(k) + " melds");
  return detail::forced_meld_cover(h.counts(), h.size());
}

inline void require_winning_size(int size) {
  if (size % 3 != 2)
    throw std::invalid_argument("winning check needs a hand of 2 mod 3 tiles (pair plus melds), got " +
                                std::to_string(size));
}

// First witness (ascending pair rank) that the hand is one pair plus melds.
// The input hand is never modified.
inline std::optional<Decomposition> is_winning(const Hand& h, MeldDecomposer& decomposer) {
  require_winning_size(h.size());
  Counts c = h.counts();
  for (int j = 0; j < kNumRanks; ++j) {
    if (c[j] < 2) continue;
    c[j] = static_cast<std::uint8_t>(c[j] - 2);
    const bool ok = decomposer.covers_melds(c, h.size() - 2);
    if (ok) {
      auto melds = detail::forced_meld_cover(c, h.size() - 2);
      return Decomposition{j + 1, std::move(*melds)};
    }
    c[j] = static_cast<std::uint8_t>(c[j] + 2);
  }
  return std::nullopt;
}

inline std::optional<Decomposition> is_winning(const Hand& h) {
  MeldDecomposer decomposer(false);
  return is_winning(h, decomposer);
}

// Boolean route without witness construction, for bulk classification.
inline bool can_win(const Hand& h, MeldDecomposer& decomposer) {
  require_winning_size(h.size());
  Counts c = h.counts();
  return decomposer.can_win(c, h.size());
}

// Literal transcription of the rank-ascending greedy check: one pung per rank
// when three copies remain, then min-count chows. Kept for comparison against
// the exact route; published numbers never depend on it.
inline bool greedy_four_sets(const Hand& h) {
  if (h.size() != 12)
    throw std::invalid_argument("greedy_four_sets needs exactly 12 tiles, got " +
                                std::to_string(h.size()));
  Counts c = h.counts();
  int sets_found = 0;
  for (int i = 0; i < kNumRanks; ++i) {
    if (c[i] >= 3) {
      c[i] = static_cast<std::uint8_t>(c[i] - 3);
      ++sets_found;
    }
    if (i + 2 < kNumRanks) {
      const int min_three = std::min({int(c[i]), int(c[i + 1]), int(c[i + 2])});
      c[i] = static_cast<std::uint8_t>(c[i] - min_three);
      c[i + 1] = static_cast<std::uint8_t>(c[i + 1] - min_three);
      c[i + 2] = static_cast<std::uint8_t>(c[i + 2] - min_three);
      sets_found += min_three;
    }
  }
  return sets_found == 4;
}

// Number of winning hands of the given size (pattern count, not draw ways).
inline std::uint64_t count_winning(int size, MeldDecomposer& decomposer) {
  if (size < 2 || size > kPoolSize || size % 3 != 2)
    throw std::invalid_argument("count_winning needs a size of 2 mod 3 in 2..36, got " +
                                std::to_string(size));
  std::uint64_t n = 0;
  for_each_hand(size, [&](const Hand& h) {
    Counts c = h.counts();
    if (decomposer.can_win(c, size)) ++n;
  });
  return n;
}

inline std::uint64_t count_winning(int size) {
  MeldDecomposer decomposer;
  return count_winning(size, decomposer);
}

}  // namespace mahjong
