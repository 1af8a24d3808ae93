#include "paltrip/natural.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <unordered_set>

using namespace paltrip;

TEST(Natural, ParseRendersWithoutLeadingZeros) {
  EXPECT_EQ(Natural::parse("0").str(), "0");
  EXPECT_EQ(Natural::parse("007").str(), "7");
  EXPECT_EQ(Natural::parse("0109").str(), "109");
  EXPECT_EQ(Natural::parse("12003331"), Natural(12003331));
}

TEST(Natural, ParseRejectsNonDigits) {
  EXPECT_THROW(Natural::parse(""), std::invalid_argument);
  EXPECT_THROW(Natural::parse("-5"), std::invalid_argument);
  EXPECT_THROW(Natural::parse("12a"), std::invalid_argument);
  EXPECT_THROW(Natural::parse(" 1"), std::invalid_argument);
}

TEST(Natural, RenderParseRoundTrip) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> len(1, 200);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int i = 0; i < 500; ++i) {
    std::string s(1, static_cast<char>('1' + digit(rng) % 9));
    for (int k = len(rng); k > 1; --k) s += static_cast<char>('0' + digit(rng));
    EXPECT_EQ(Natural::parse(s).str(), s);
  }
}

TEST(Natural, SubtractionUnderflowThrows) {
  EXPECT_EQ(Natural(10) - Natural(10), Natural(0));
  EXPECT_THROW(Natural(3) - Natural(4), std::domain_error);
  EXPECT_THROW(Natural(3) / Natural(0), std::domain_error);
}

TEST(Natural, WideConversions) {
  const unsigned __int128 big = static_cast<unsigned __int128>(0xFFFFFFFFFFFFFFFFULL) * 1000 + 7;
  EXPECT_EQ(Natural::from_u128(big), Natural(0xFFFFFFFFFFFFFFFFULL) * Natural(1000) + Natural(7));
  EXPECT_EQ(Natural(123).to_u64(), 123U);
  EXPECT_FALSE(Natural::from_u128(big).to_u64().has_value());
}

TEST(Natural, SquareRoots) {
  EXPECT_EQ(isqrt(Natural(99)), Natural(9));
  EXPECT_EQ(exact_sqrt(Natural(573049)), Natural(757));
  EXPECT_FALSE(exact_sqrt(Natural(635209 - 354025)).has_value());
  const Natural big = Natural::pow10(60) + Natural(1);
  EXPECT_EQ(exact_sqrt(big * big), big);
}

TEST(Natural, SmallModulusAndGcd) {
  EXPECT_EQ(Natural::parse("55873637855").mod(5), 0U);
  EXPECT_EQ(Natural(2112).mod(11), 0U);
  EXPECT_EQ(gcd(Natural(33), Natural(55)), Natural(11));
}

TEST(Natural, StreamsAndHashes) {
  std::ostringstream os;
  os << Natural::pow10(20);
  EXPECT_EQ(os.str(), "100000000000000000000");
  std::unordered_set<Natural> seen{Natural(5), Natural(5), Natural(6)};
  EXPECT_EQ(seen.size(), 2U);
}
