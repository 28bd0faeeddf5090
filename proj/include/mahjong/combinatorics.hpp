#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mahjong/hand.hpp"
#include "mahjong/rational.hpp"

namespace mahjong {

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n)
    throw std::invalid_argument("binomial requires 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after each step
  }
  return r;
}

inline constexpr std::array<std::uint64_t, kMaxCopies + 1> kChoose4 = {1, 4, 6, 4, 1};

// Number of distinct physical draws realizing this count vector:
// the product over ranks of C(4, copies).
inline std::uint64_t draw_ways(const Hand& h) {
  std::uint64_t w = 1;
  for (const auto c : h.counts()) w *= kChoose4[c];
  return w;
}

// Probability of drawing exactly this pattern from the 36-tile pool.
inline Rational draw_probability(const Hand& h) {
  return Rational(BigInt(draw_ways(h)), binomial(kPoolSize, h.size()));
}

// Probability of drawing any one of the given equal-sized, distinct patterns.
inline Rational combined_probability(const std::vector<Hand>& hands) {
  if (hands.empty()) throw std::invalid_argument("combined_probability needs at least one hand");
  const int size = hands.front().size();
  std::vector<std::uint32_t> keys;
  keys.reserve(hands.size());
  std::uint64_t total = 0;
  for (const auto& h : hands) {
    if (h.size() != size)
      throw std::invalid_argument("combined_probability: hands of mixed sizes");
    keys.push_back(h.key());
    total += draw_ways(h);
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw std::invalid_argument("combined_probability: duplicate hand");
  return Rational(BigInt(total), binomial(kPoolSize, size));
}

// Coefficients of a univariate polynomial, coeffs[i] is the X^i term.
using CoeffVector = std::vector<BigInt>;

// Expansion of (1 + X + ... + X^max_copies)^num_ranks by exact integer
// polynomial multiplication. Coefficient at X^m counts the multisets of m
// tiles over num_ranks kinds with at most max_copies of each.
inline CoeffVector gf_expand(int max_copies, int num_ranks) {
  if (max_copies < 0) throw std::invalid_argument("gf_expand: max_copies must be >= 0");
  if (num_ranks < 1) throw std::invalid_argument("gf_expand: num_ranks must be >= 1");
  CoeffVector acc{BigInt(1)};
  for (int r = 0; r < num_ranks; ++r) {
    CoeffVector next(acc.size() + static_cast<std::size_t>(max_copies), BigInt(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (int d = 0; d <= max_copies; ++d) next[i + d] += acc[i];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace mahjong
