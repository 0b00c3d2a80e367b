#include <gtest/gtest.h>

#include "generators.hpp"
#include "permuton/permutation.hpp"

using namespace permuton;

TEST(ParseCycles, Examples) {
  EXPECT_EQ(parse_cycles("(2,3)", 3).images(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_TRUE(parse_cycles("()", 3).is_identity());
  EXPECT_EQ(parse_cycles("(1,3,2)", 3).images(), (std::vector<std::size_t>{3, 1, 2}));
  EXPECT_EQ(parse_cycles(" ( 1 , 2 ) (3,4,5) ", 5).to_string(), "(1,2)(3,4,5)");
}

TEST(ParseCycles, ErrorsCarryPositions) {
  try {
    parse_cycles("(1,4)", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
  try {
    parse_cycles("(1,2)(2,3)", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
    EXPECT_NE(std::string(e.what()).find("repeated"), std::string::npos);
  }
  EXPECT_THROW(parse_cycles("(1,2", 3), ParseError);
  EXPECT_THROW(parse_cycles("1,2)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1;2)", 3), ParseError);
  EXPECT_THROW(parse_cycles("", 3), ParseError);
  EXPECT_THROW(parse_cycles("(0,1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("()", 0), ParseError);
}

TEST(Permutation, Operations) {
  auto g2 = parse_cycles("(2,3)", 3);
  EXPECT_EQ(parse_cycles("(1,2,3)", 3).order(), 3u);
  EXPECT_TRUE((g2 * g2).is_identity());
  EXPECT_EQ(parse_cycles("(1,2,3,4,5)", 5).inverse(), parse_cycles("(1,5,4,3,2)", 5));
  EXPECT_THROW(g2 * parse_cycles("(1,2)", 4), Error);
  EXPECT_EQ(parse_cycles("(1,2)(3,4,5)", 5).order(), 6u);
  EXPECT_EQ(parse_cycles("(1,2)(3,4,5)", 6).cycle_type(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(parse_cycles("(1,2)", 4).fixed_points(), 2u);
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), Error);
}

TEST(Permutation, RightActionConvention) {
  // p * q applies p first: 1 -p-> 2 -q-> 3.
  auto p = parse_cycles("(1,2)", 3), q = parse_cycles("(2,3)", 3);
  EXPECT_EQ((p * q)(1), 3u);
  EXPECT_EQ((p * q)(1), q(p(1)));
}

TEST(Permutation, GroupLawsOnRandomPermutations) {
  gen::Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 12));
    auto a = gen::permutation(rng, n), b = gen::permutation(rng, n), c = gen::permutation(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE(a.pow(static_cast<long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
    for (std::size_t s = 1; s <= n; ++s) EXPECT_EQ((a * b)(s), b(a(s)));
    EXPECT_EQ(parse_cycles(a.to_string(), n), a);
    std::size_t total = 0;
    for (auto len : a.cycle_type()) total += len;
    EXPECT_EQ(total, n);
  }
}
