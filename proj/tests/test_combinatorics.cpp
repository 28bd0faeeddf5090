#include <catch2/catch_amalgamated.hpp>

#include "mahjong/combinatorics.hpp"
#include "mahjong/enumeration.hpp"

using namespace mahjong;

TEST_CASE("binomial values") {
  CHECK(binomial(36, 13) == BigInt(2310789600));
  CHECK(binomial(36, 14) == BigInt(3796297200));
  CHECK(binomial(36, 17) == BigInt(8597496600));
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
  CHECK_THROWS_AS(binomial(5, -1), std::invalid_argument);
  CHECK_THROWS_AS(binomial(5, 6), std::invalid_argument);
}

TEST_CASE("draw ways of specific patterns") {
  CHECK(draw_ways(Hand::parse("1112345678999")) == 262144);  // 4^9
  CHECK(draw_ways(Hand::parse("3334567888999")) == 16384);   // 4^7
  CHECK(draw_ways(Hand::parse("3334556677888")) == 13824);   // 4^3 * 6^3
  CHECK(draw_ways(Hand()) == 1);
}

TEST_CASE("draw probability") {
  const Rational p = draw_probability(Hand::parse("1112345678999"));
  CHECK(p == Rational(262144, 2310789600));
  CHECK(p.decimal(6) == "0.000113");
  CHECK(p.decimal(11) == "0.00011344347");

  CHECK(draw_probability(Hand()) == Rational(1, 1));
  CHECK(draw_probability(Hand(Counts{4, 4, 4, 4, 4, 4, 4, 4, 4})) == Rational(1, 1));
}

TEST_CASE("combined probability validation") {
  const std::vector<Hand> single{Hand::parse("1112345678999")};
  CHECK(combined_probability(single) == draw_probability(single[0]));

  CHECK_THROWS_AS(combined_probability({}), std::invalid_argument);
  CHECK_THROWS_AS(combined_probability({Hand::parse("11"), Hand::parse("123")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(combined_probability({Hand::parse("11"), Hand::parse("11")}),
                  std::invalid_argument);
}

TEST_CASE("combined probability over every 13-tile hand telescopes to 1") {
  std::vector<Hand> all;
  all.reserve(93600);
  for_each_hand(13, [&](const Hand& h) { all.push_back(h); });
  CHECK(combined_probability(all) == Rational(1, 1));
}

TEST_CASE("generating function expansion") {
  const CoeffVector gf = gf_expand(4, 9);
  REQUIRE(gf.size() == 37);
  CHECK(gf[0] == 1);
  CHECK(gf[13] == 93600);
  CHECK(gf[14] == 118800);
  CHECK(gf[16] == 162585);
  CHECK(gf[17] == 175725);
  CHECK(gf[36] == 1);

  BigInt sum = 0;
  for (const auto& a : gf) sum += a;
  CHECK(sum == BigInt(1953125));  // 5^9, the polynomial at X = 1

  // palindromic: choosing m tiles mirrors leaving 36 - m behind
  for (int k = 0; k <= 36; ++k) CHECK(gf[k] == gf[36 - k]);

  CHECK(gf_expand(2, 2) == CoeffVector{1, 2, 3, 2, 1});
  CHECK(gf_expand(0, 3) == CoeffVector{1});
  CHECK_THROWS_AS(gf_expand(-1, 9), std::invalid_argument);
  CHECK_THROWS_AS(gf_expand(4, 0), std::invalid_argument);
}

TEST_CASE("draw ways summed over a size equals the binomial") {
  for (const int m : {13, 14, 17}) {
    std::uint64_t total = 0;
    for_each_hand(m, [&](const Hand& h) { total += draw_ways(h); });
    CHECK(BigInt(total) == binomial(36, m));
  }
}

TEST_CASE("draw ways is dual invariant") {
  for_each_hand(13, [](const Hand& h) { REQUIRE(draw_ways(h.dual()) == draw_ways(h)); });
}

TEST_CASE("rational reduction and arithmetic") {
  const Rational r(231424, 2310789600);
  CHECK(r.num() == 7232);
  CHECK(r.den() == 72212175);
  CHECK(r == Rational(7232, 72212175));
  CHECK(r.str() == "7232/72212175");

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1, 1));
  CHECK(Rational(0, 5) == Rational());
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half-even") {
  CHECK(Rational(1, 8).decimal(2) == "0.12");   // 0.125 ties to even
  CHECK(Rational(3, 8).decimal(2) == "0.38");
  CHECK(Rational(1, 4).decimal(1) == "0.2");
  CHECK(Rational(3, 4).decimal(1) == "0.8");
  CHECK(Rational(1, 2).decimal(0) == "0");
  CHECK(Rational(3, 2).decimal(0) == "2");
  CHECK(Rational(1, 3).decimal(6) == "0.333333");
  CHECK(Rational(2, 3).decimal(6) == "0.666667");
  CHECK(Rational(-1, 8).decimal(2) == "-0.12");
  CHECK(Rational(231424, 2310789600).decimal(4) == "0.0001");
  CHECK(Rational(231424, 2310789600).decimal(6) == "0.000100");
  CHECK(Rational(13259, 118800).decimal(5) == "0.11161");
  CHECK(Rational(26414, 175725).decimal(5) == "0.15031");
}
