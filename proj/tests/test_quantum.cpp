#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "permuton/models.hpp"
#include "permuton/quantum.hpp"

using namespace permuton;

namespace {

struct S3Fixture {
  PermGroup group = model_group("s3-natural");
  GroupAction action = GroupAction::natural(group);
  CharacterTable table = character_table(group);
  IsotypicProjector standard = nontrivial_projector(action, table);
};

const S3Fixture& s3() {
  static const S3Fixture f;
  return f;
}

Rational frac(long a, long b) { return make_rational(a, b); }

Permutation cyc(const char* text, std::size_t n = 3) { return parse_cycles(text, n); }

std::map<Permutation, Cyclotomic> random_hermitian(gen::Rng& rng, const PermGroup& g, int conductor) {
  std::map<Permutation, Cyclotomic> out;
  for (const auto& x : g.elements()) {
    if (out.count(x) || gen::uniform(rng, 0, 2) == 0) continue;
    auto inv = x.inverse();
    auto a = x == inv ? gen::real_cyclotomic(rng, conductor) : gen::cyclotomic(rng, conductor);
    out[x] = a;
    out[inv] = conj(a);
  }
  return out;
}

}  // namespace

TEST(BornFull, Examples) {
  EXPECT_EQ(born_full({1, 1, 2}, {1, 1, 2}).rational_probability(), Rational(1));
  auto r = born_full({1, 3, 2}, {1, 1, 2});
  EXPECT_EQ(r.rational_probability(), frac(16, 21));
  EXPECT_EQ(r.amplitude, Cyclotomic(8));
  EXPECT_TRUE(r.is_rational);
  EXPECT_TRUE(born_full({1, 0, 0}, {0, 1, 0}).probability.is_zero());
}

TEST(BornFull, Errors) {
  try {
    born_full({0, 0, 0}, {1, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_state);
  }
  EXPECT_THROW(born_full({1, 1}, {1, 1, 2}), Error);
}

TEST(BornFull, SymmetricScaleFreeAndPermutationInvariant) {
  gen::Rng rng(41);
  const auto& g = s3().group;
  for (int t = 0; t < 200; ++t) {
    auto m = gen::nonzero_natural(rng, 3, 5), n = gen::nonzero_natural(rng, 3, 5);
    auto p = born_full(m, n).probability;
    EXPECT_EQ(p, born_full(n, m).probability);
    std::uint64_t k = static_cast<std::uint64_t>(gen::uniform(rng, 2, 7));
    std::vector<std::uint64_t> scaled;
    for (auto c : m.components()) scaled.push_back(c * k);
    EXPECT_EQ(p, born_full(NaturalVector(scaled), n).probability);
    const auto& x = g.element(static_cast<std::size_t>(gen::uniform(rng, 0, 5)));
    EXPECT_EQ(p, born_full(m.permuted(x), n.permuted(x)).probability);
    EXPECT_NE(sign_of_real(p), Sign::negative);
    EXPECT_NE(sign_of_real(Cyclotomic(1) - p), Sign::negative);
  }
}

TEST(BornFull, PositiveVectorsNeverInterfere) {
  auto all = detail::enumerate_vectors(3, 1, 3);
  ASSERT_EQ(all.size(), 27u);
  for (const auto& m : all)
    for (const auto& n : all) EXPECT_EQ(sign_of_real(born_full(m, n).probability), Sign::positive);
}

TEST(BornSubspace, Examples) {
  const auto& p = s3().standard;
  auto zero = born_subspace({1, 3, 2}, {1, 1, 2}, p);
  EXPECT_TRUE(zero.amplitude.is_zero());
  EXPECT_TRUE(zero.probability.is_zero());
  auto r = born_subspace({1, 2, 3}, {1, 1, 2}, p);
  EXPECT_EQ(r.rational_probability(), frac(3, 4));
  EXPECT_EQ(r.amplitude, Cyclotomic(1));
  EXPECT_EQ(subspace_inner({1, 2, 3}, {1, 2, 3}, p), Cyclotomic(2));
  EXPECT_EQ(subspace_inner({1, 1, 2}, {1, 1, 2}, p), Cyclotomic(frac(2, 3)));
  EXPECT_EQ(born_subspace({2, 0, 5}, {2, 0, 5}, p).rational_probability(), Rational(1));
}

TEST(BornSubspace, DegenerateProjections) {
  const auto& p = s3().standard;
  try {
    born_subspace({2, 2, 2}, {1, 1, 2}, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_state);
  }
  EXPECT_THROW(born_subspace({1, 1, 2}, {0, 0, 0}, p), Error);
}

TEST(BornSubspace, ProbabilityBoundsOnIcosahedron) {
  auto g = model_group("a5-icosahedron");
  auto action = GroupAction::natural(g);
  auto table = character_table(g);
  gen::Rng rng(43);
  for (const char* tag : {"3", "3'", "5", "3+3'"}) {
    auto p = subspace_projector(tag, action, table);
    for (int t = 0; t < 15; ++t) {
      auto m = gen::nonzero_natural(rng, 12, 3), n = gen::nonzero_natural(rng, 12, 3);
      if (subspace_inner(m, m, p).is_zero() || subspace_inner(n, n, p).is_zero()) continue;
      auto r = born_subspace(m, n, p);
      EXPECT_EQ(r.probability, conj(r.probability));
      EXPECT_NE(sign_of_real(r.probability), Sign::negative) << tag;
      EXPECT_NE(sign_of_real(Cyclotomic(1) - r.probability), Sign::negative) << tag;
      EXPECT_EQ(r.probability.is_zero(), r.amplitude.is_zero());
      if (std::string(tag) == "3+3'") {
        EXPECT_TRUE(r.is_rational);
      }
    }
  }
}

TEST(Interference, MatchesDiophantineBruteForce) {
  const auto& p = s3().standard;
  for (std::uint64_t bound = 1; bound <= 3; ++bound) {
    auto vs = detail::enumerate_vectors(3, 0, bound);
    auto L = [](const NaturalVector& v) { return v[0] + v[1] + v[2]; };
    auto Q = [](const NaturalVector& a, const NaturalVector& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    auto constant = [](const NaturalVector& v) { return v[0] == v[1] && v[1] == v[2]; };
    std::vector<std::pair<NaturalVector, NaturalVector>> expected;
    for (const auto& m : vs)
      for (const auto& n : vs)
        if (m < n && !constant(m) && !constant(n) && 3 * Q(m, n) == L(m) * L(n)) expected.emplace_back(m, n);
    auto got = find_interference(p, bound);
    EXPECT_EQ(got.pairs, expected) << "bound " << bound;
  }
  auto three = find_interference(p, 3);
  EXPECT_EQ(three.pairs.size(), 144u);
  EXPECT_EQ(three.orbit_count, 24u);
  auto hit = std::find(three.pairs.begin(), three.pairs.end(),
                       std::pair{NaturalVector{1, 1, 2}, NaturalVector{1, 3, 2}});
  EXPECT_NE(hit, three.pairs.end());
}

TEST(Interference, EdgeCases) {
  EXPECT_TRUE(find_interference(s3().standard, 0).pairs.empty());
  InterferenceOptions positive;
  positive.bound = 3;
  positive.positive_only = true;
  EXPECT_TRUE(find_interference(full_space_projector(s3().action), positive).pairs.empty());
  InterferenceOptions huge;
  huge.bound = 50;
  EXPECT_THROW(find_interference(s3().standard, huge), Error);
}

TEST(Interference, OrbitsAreUnionsOfPairs) {
  const auto& p = s3().standard;
  auto r = find_interference(p, 2);
  std::set<std::pair<NaturalVector, NaturalVector>> keys;
  for (const auto& [m, n] : r.pairs) {
    for (const auto& x : s3().group.elements()) {
      auto a = m.permuted(x), b = n.permuted(x);
      auto canon = a < b ? std::pair{a, b} : std::pair{b, a};
      EXPECT_TRUE(std::binary_search(r.pairs.begin(), r.pairs.end(), canon));
    }
    keys.insert(detail::orbit_key(p.action(), m, n));
  }
  EXPECT_EQ(keys.size(), r.orbit_count);
}

TEST(ObservableTest, Examples) {
  const auto& g = s3().group;
  auto id = observable(g, {{cyc("()"), Cyclotomic(1)}});
  EXPECT_EQ(id.matrix(), CycloMatrix::identity(3));
  EXPECT_TRUE(id.is_hermitian());
  auto sym = observable(g, {{cyc("(1,2,3)"), Cyclotomic(1)}, {cyc("(1,3,2)"), Cyclotomic(1)}});
  EXPECT_TRUE(sym.is_hermitian());
  EXPECT_EQ(sym.matrix(), perm_matrix(cyc("(1,2,3)")).materialize() + perm_matrix(cyc("(1,3,2)")).materialize());
  EXPECT_EQ(sym.matrix(), sym.matrix().transpose());
  auto one_way = observable(g, {{cyc("(1,2,3)"), Cyclotomic(1)}});
  EXPECT_FALSE(one_way.is_hermitian());
  EXPECT_NE(one_way.matrix(), conj_transpose(one_way.matrix()));
  try {
    observable(g, {{cyc("(1,2)", 4), Cyclotomic(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(ObservableTest, HermitianFlagMatchesMatrix) {
  gen::Rng rng(47);
  const auto& g = s3().group;
  for (int t = 0; t < 40; ++t) {
    auto coeffs = random_hermitian(rng, g, 12);
    auto a = observable(g, coeffs);
    EXPECT_TRUE(a.is_hermitian());
    EXPECT_EQ(conj_transpose(a.matrix()), a.matrix());
    if (!coeffs.empty()) {
      coeffs.begin()->second += root_of_unity(4, 1);
      EXPECT_FALSE(observable(g, coeffs).is_hermitian());
    }
  }
}

TEST(Expectation, Examples) {
  const auto& g = s3().group;
  auto id = observable(g, {{cyc("()"), Cyclotomic(1)}});
  gen::Rng rng(53);
  for (int t = 0; t < 10; ++t) EXPECT_EQ(expectation(id, gen::nonzero_natural(rng, 3, 9)), Cyclotomic(1));
  auto sym = observable(g, {{cyc("(1,2,3)"), Cyclotomic(1)}, {cyc("(1,3,2)"), Cyclotomic(1)}});
  EXPECT_EQ(expectation(sym, {1, 1, 2}), Cyclotomic(frac(5, 3)));
  std::map<Permutation, Cyclotomic> avg;
  for (const auto& x : g.elements()) avg[x] = Cyclotomic(frac(1, 6));
  EXPECT_EQ(expectation(observable(g, avg), {1, 1, 2}), Cyclotomic(frac(8, 9)));
}

TEST(Expectation, Errors) {
  const auto& g = s3().group;
  try {
    expectation(observable(g, {{cyc("(1,2,3)"), Cyclotomic(1)}}), {1, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_hermitian);
  }
  try {
    expectation(observable(g, {{cyc("()"), Cyclotomic(1)}}), {0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_state);
  }
}

TEST(Uncertainty, Examples) {
  const auto& g = s3().group;
  auto a = observable(g, {{cyc("(2,3)"), Cyclotomic(1)}});
  auto b = observable(g, {{cyc("(1,3,2)"), Cyclotomic(1)}});
  auto same = uncertainty_check(a, a, {1, 1, 2});
  EXPECT_TRUE(same.difference.is_zero());
  EXPECT_TRUE(same.holds());
  auto r = uncertainty_check(a, b, {1, 1, 2});
  EXPECT_NE(r.sign, Sign::negative);
  EXPECT_TRUE(r.holds());
  // permutation matrices preserve the norm of n
  EXPECT_EQ(r.norm_a, Cyclotomic(6));
  EXPECT_EQ(r.norm_b, Cyclotomic(6));

  std::map<Permutation, Cyclotomic> all_ones;
  for (const auto& x : g.elements()) all_ones[x] = Cyclotomic(1);
  auto kill = observable(g, {{cyc("()"), Cyclotomic(1)}, {cyc("(1,2,3)"), Cyclotomic(-1)}});
  auto k = uncertainty_check(kill, observable(g, all_ones), {2, 2, 2});
  EXPECT_TRUE(k.norm_a.is_zero());
  EXPECT_TRUE(k.difference.is_zero());
  EXPECT_FALSE(k.probability.has_value());
  EXPECT_THROW(uncertainty_check(a, b, {0, 0, 0}), Error);
}

TEST(Uncertainty, RandomHermitianPairsOnS3AndIcosahedron) {
  gen::Rng rng(59);
  for (const char* name : {"s3-natural", "a5-icosahedron"}) {
    auto g = model_group(name);
    for (int t = 0; t < 8; ++t) {
      auto a = observable(g, random_hermitian(rng, g, 5));
      auto b = observable(g, random_hermitian(rng, g, 5));
      auto n = gen::nonzero_natural(rng, g.degree(), 4);
      auto r = uncertainty_check(a, b, n);
      EXPECT_TRUE(r.holds()) << name;
      EXPECT_TRUE(uncertainty_check(a, a, n).difference.is_zero());
    }
  }
}

TEST(SubspaceTags, Resolution) {
  auto g = model_group("a5-icosahedron");
  auto action = GroupAction::natural(g);
  auto table = character_table(g);
  EXPECT_EQ(subspace_projector("full", action, table).rank(), 12u);
  EXPECT_EQ(subspace_projector("trivial-12", action, table).rank(), 1u);
  EXPECT_EQ(subspace_projector("standard", action, table).rank(), 11u);
  EXPECT_EQ(subspace_projector("irr3", action, table).matrix(), subspace_projector("3", action, table).matrix());
  EXPECT_EQ(subspace_projector("irr3prime", action, table).label(), "3'");
  EXPECT_EQ(subspace_projector("irr3plus3prime", action, table).label(), "3+3'");
  EXPECT_EQ(subspace_projector("irr5", action, table).rank(), 5u);
  for (const char* bad : {"trivial-3", "standard-x", "7", "3+9", "", "irr4"})
    EXPECT_THROW(subspace_projector(bad, action, table), Error) << bad;
}
