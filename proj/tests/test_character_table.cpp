#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "permuton/character_table.hpp"
#include "permuton/models.hpp"

using namespace permuton;

namespace {

PermGroup s3() { return model_group("s3-natural"); }
PermGroup a5() { return model_group("a5-5"); }

Cyclotomic num(long v) { return Cyclotomic(v); }

long sign_of(const Permutation& p) {
  long s = 1;
  for (auto len : p.cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::size_t fixed_pairs(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t a = 1; a <= p.degree(); ++a)
    for (std::size_t b = a + 1; b <= p.degree(); ++b)
      if ((p(a) == a && p(b) == b) || (p(a) == b && p(b) == a)) ++count;
  return count;
}

// A row as a function on group elements, rendered canonically.
std::string element_function(const CharacterTable& t, std::size_t row) {
  std::string out;
  for (std::size_t e = 0; e < t.group.order(); ++e) out += to_string(minimized(t.value(row, e))) + ";";
  return out;
}

std::multiset<std::string> element_functions(const CharacterTable& t) {
  std::multiset<std::string> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.insert(element_function(t, i));
  return out;
}

}  // namespace

TEST(BuiltinTables, S3MatchesPermutationStatistics) {
  auto t = character_table(s3());
  EXPECT_EQ(t.source, CharacterTable::Source::builtin);
  EXPECT_EQ(t.labels, (std::vector<std::string>{"1", "1'", "2"}));
  EXPECT_EQ(t.dims, (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(t.trivial_row(), 0u);
  for (std::size_t e = 0; e < 6; ++e) {
    const auto& p = t.group.element(e);
    EXPECT_EQ(t.value(0, e), num(1));
    EXPECT_EQ(t.value(1, e), num(sign_of(p)));
    EXPECT_EQ(t.value(2, e), num(static_cast<long>(p.fixed_points()) - 1));
  }
  EXPECT_TRUE(check_character_table(t).empty());
}

TEST(BuiltinTables, A5MatchesPermutationStatistics) {
  auto t = character_table(a5());
  EXPECT_EQ(t.labels, (std::vector<std::string>{"1", "3", "3'", "4", "5"}));
  EXPECT_TRUE(check_character_table(t).empty());
  for (std::size_t e = 0; e < 60; ++e) {
    const auto& p = t.group.element(e);
    long fix = static_cast<long>(p.fixed_points());
    EXPECT_EQ(t.value(3, e), num(fix - 1));
    EXPECT_EQ(t.value(4, e), num(static_cast<long>(fixed_pairs(p)) - fix));
  }
}

TEST(BuiltinTables, ThreeAndThreePrimeOnIcosahedron) {
  // The icosahedral permutation character is 1 + 3 + 3' + 5.
  auto g = model_group("a5-icosahedron");
  auto t = character_table(g);
  for (std::size_t e = 0; e < 60; ++e) {
    const auto& p = g.element(e);
    Cyclotomic sum = t.value(0, e) + t.value(1, e) + t.value(2, e) + t.value(4, e);
    EXPECT_EQ(sum, num(static_cast<long>(p.fixed_points())));
  }
}

TEST(BuiltinTables, GoldenRatioConvention) {
  // "3" takes phi on the class of the first order-5 generator, in every model.
  for (const char* name : {"a5-5", "a5-6", "a5-10", "a5-icosahedron"}) {
    auto g = model_group(name);
    auto t = character_table(g);
    std::size_t a = *g.index_of(g.generators()[0]);
    ASSERT_EQ(g.element(a).order(), 5u);
    EXPECT_EQ(t.value(*t.row_by_label("3"), a), golden_ratio()) << name;
    EXPECT_EQ(t.value(*t.row_by_label("3'"), a), num(1) - golden_ratio()) << name;
    std::size_t a2 = *g.index_of(g.element(a).pow(2));
    EXPECT_EQ(t.value(*t.row_by_label("3"), a2), num(1) - golden_ratio()) << name;
  }
}

TEST(BuiltinTables, NotRecognizedElsewhere) {
  auto c3 = closure({parse_cycles("(1,2,3)", 3)});
  EXPECT_FALSE(builtin_character_table(c3).has_value());
  EXPECT_EQ(character_table(c3).source, CharacterTable::Source::dixon);
}

TEST(Dixon, AgreesWithBuiltinTables) {
  for (const char* name : {"s3-natural", "a5-5", "a5-icosahedron"}) {
    auto g = model_group(name);
    auto computed = dixon_character_table(g);
    EXPECT_TRUE(check_character_table(computed).empty()) << name;
    EXPECT_EQ(element_functions(computed), element_functions(*builtin_character_table(g))) << name;
  }
}

TEST(Dixon, CyclicGroupsMatchRootsOfUnity) {
  for (int n : {2, 5, 6, 8, 12}) {
    std::string cycle = "(";
    for (int i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
    auto x = parse_cycles(cycle, static_cast<std::size_t>(n));
    auto g = closure({x});
    auto t = dixon_character_table(g);
    std::multiset<std::string> expected;
    for (int j = 0; j < n; ++j) {
      std::string f;
      for (std::size_t e = 0; e < g.order(); ++e) {
        long k = 0;
        while (!(x.pow(k) == g.element(e))) ++k;
        f += to_string(minimized(root_of_unity(n, j * k))) + ";";
      }
      expected.insert(f);
    }
    EXPECT_EQ(element_functions(t), expected) << n;
  }
}

TEST(Dixon, DirectProductIsTensorOfFactors) {
  auto g = s3();
  auto d = direct_product(g, g);
  auto t = dixon_character_table(d);
  EXPECT_EQ(t.size(), 9u);
  EXPECT_TRUE(check_character_table(t).empty());
  auto base = character_table(g);
  // element (x, y) of the product acts as x on 1..3 and y on 4..6
  auto split = [&](const Permutation& p) {
    std::vector<std::size_t> lo(3), hi(3);
    for (std::size_t i = 0; i < 3; ++i) {
      lo[i] = p(i + 1);
      hi[i] = p(i + 4) - 3;
    }
    return std::pair{*g.index_of(Permutation::from_images(lo)), *g.index_of(Permutation::from_images(hi))};
  };
  std::multiset<std::string> expected;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::string f;
      for (std::size_t e = 0; e < d.order(); ++e) {
        auto [x, y] = split(d.element(e));
        f += to_string(minimized(base.value(i, x) * base.value(j, y))) + ";";
      }
      expected.insert(f);
    }
  EXPECT_EQ(element_functions(t), expected);
}

TEST(Dixon, WreathProductTable) {
  auto z2 = closure({parse_cycles("(1,2)", 2)});
  auto w = wreath_product(z2, s3(), 3);
  auto t = dixon_character_table(w);
  EXPECT_EQ(t.size(), 10u);
  EXPECT_TRUE(check_character_table(t).empty());
  auto dims = t.dims;
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 3, 3, 3, 3}));
  for (const auto& row : t.rows)
    for (const auto& v : row) EXPECT_TRUE(v.is_rational());
}

TEST(Dixon, Limits) {
  DixonLimits tight;
  tight.max_classes = 4;
  try {
    dixon_character_table(a5(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_group);
  }
  DixonLimits low_exponent;
  low_exponent.max_exponent = 20;
  EXPECT_THROW(dixon_character_table(a5(), low_exponent), Error);
}

TEST(Orthogonality, DetectsCorruption) {
  auto t = character_table(a5());
  auto bad = t;
  bad.rows[1][3] = golden_ratio() + num(1);
  EXPECT_FALSE(check_character_table(bad).empty());
  auto swapped = t;
  std::swap(swapped.rows[1][3], swapped.rows[2][3]);
  swapped.rows[1][4] = t.rows[1][4];
  EXPECT_FALSE(check_character_table(swapped).empty());
  auto short_table = t;
  short_table.rows.pop_back();
  EXPECT_FALSE(check_character_table(short_table).empty());
}

TEST(TableText, RoundTrip) {
  for (const char* name : {"s3-natural", "a5-5"}) {
    auto g = model_group(name);
    auto t = character_table(g);
    auto back = parse_character_table(to_text(t), g);
    EXPECT_EQ(back.rows, t.rows) << name;
    EXPECT_EQ(back.source, CharacterTable::Source::file);
  }
  EXPECT_EQ(to_text(character_table(s3())), "classes: 1, 3, 2\n1, 1, 1\n1, -1, 1\n2, 0, -1\n");
}

TEST(TableText, Errors) {
  auto g = s3();
  try {
    parse_character_table("classes: 1, 3, 2\n1, 1, 1\n1, -1, 1\n2, 0, x\n", g);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_character_table("1, 1, 1\n", g), ParseError);
  EXPECT_THROW(parse_character_table("classes: 1, 2, 3\n1,1,1\n1,-1,1\n2,0,-1\n", g), Error);
  EXPECT_THROW(parse_character_table("classes: 1, 3, 2\n1,1,1\n1,-1,1\n", g), Error);
  EXPECT_THROW(parse_character_table("classes: 1, 3, 2\n1,1,1\n1,-1,1\n2,0\n", g), ParseError);
  const char* tampered = "classes: 1, 3, 2\n1, 1, 1\n1, -1, 1\n2, 1, -1\n";
  EXPECT_THROW(parse_character_table(tampered, g), Error);
  auto loose = parse_character_table(tampered, g, false);
  EXPECT_FALSE(check_character_table(loose).empty());
}
