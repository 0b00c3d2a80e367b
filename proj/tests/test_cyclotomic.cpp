#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <numeric>
#include <thread>

#include "generators.hpp"
#include "permuton/cyclotomic.hpp"
#include "permuton/rational.hpp"

using namespace permuton;

namespace {

Cyclotomic z(int n, long k = 1) { return root_of_unity(n, k); }
Cyclotomic q(long a, long b = 1) { return Cyclotomic(make_rational(a, b)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::invalid_argument;
}

using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

// Independent 200-digit evaluation from the coefficient list.
Big evaluate_real(const Cyclotomic& a) {
  const Big tau = 8 * atan(Big(1));
  Big sum = 0;
  auto coeffs = a.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    sum += Big(coeffs[k].get_num().get_str()) / Big(coeffs[k].get_den().get_str()) *
           cos(tau * k / a.conductor());
  }
  return sum;
}

}  // namespace

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+0/5"), Rational(0));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_EQ(make_rational(4, -6), make_rational(-2, 3));
  EXPECT_EQ(make_rational(4, -6).get_den(), 3);
}

TEST(RootOfUnity, Examples) {
  EXPECT_EQ(z(3, 0), Cyclotomic(1));
  EXPECT_TRUE((z(3, 0) + z(3, 1) + z(3, 2)).is_zero());
  EXPECT_EQ(z(6, 2), z(3, 1));
  // oracle: z6^2 satisfies x^2 + x + 1 = 0
  Cyclotomic w = z(6, 2);
  EXPECT_TRUE((w * w + w + Cyclotomic(1)).is_zero());
  EXPECT_EQ(z(5, -1), z(5, 4));
  EXPECT_EQ(z(1, 7), Cyclotomic(1));
}

TEST(RootOfUnity, MultiplicativeOrder) {
  for (int n = 1; n <= 24; ++n)
    for (long k = 0; k < n; ++k) {
      Cyclotomic w = z(n, k);
      int expected = n / std::gcd(n, static_cast<int>(k));
      Cyclotomic p(1);
      int order = 0;
      do {
        p *= w;
        ++order;
      } while (p != Cyclotomic(1));
      EXPECT_EQ(order, expected) << "n=" << n << " k=" << k;
    }
}

TEST(RootOfUnity, ZeroConductorRejected) {
  EXPECT_EQ(kind_of([] { z(0, 1); }), ErrorKind::invalid_conductor);
  EXPECT_EQ(kind_of([] { z(-3, 1); }), ErrorKind::invalid_conductor);
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(z(5) * z(5, 4), Cyclotomic(1));
  EXPECT_EQ(inverse(Cyclotomic(1) + z(3)), -z(3));
  EXPECT_EQ((Cyclotomic(1) + z(3)) * -z(3), Cyclotomic(1));
  EXPECT_TRUE((z(4) + z(4, 3)).is_zero());
  EXPECT_EQ(kind_of([] { inverse(Cyclotomic(0)); }), ErrorKind::division_by_zero);
  EXPECT_EQ(kind_of([] { (void)(Cyclotomic(1) / Cyclotomic(0)); }), ErrorKind::division_by_zero);
}

TEST(Arithmetic, MixedConductorsLiftToLcm) {
  Cyclotomic s = z(3) + z(4);
  EXPECT_EQ(s.conductor(), 12);
  EXPECT_EQ(s - z(4), z(3));
  // not minimized automatically
  Cyclotomic back = s - z(4);
  EXPECT_EQ(back.conductor(), 12);
  EXPECT_EQ(minimal_conductor(back), 3);
  EXPECT_EQ(minimized(back).conductor(), 3);
}

TEST(Conj, Examples) {
  EXPECT_EQ(conj(z(3)), z(3, 2));
  EXPECT_EQ(conj(q(7, 3)), q(7, 3));
  Cyclotomic a = Cyclotomic(1) + z(3);
  EXPECT_EQ(a * conj(a), Cyclotomic(1));
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(z(n, 1) * conj(z(n, 1)), Cyclotomic(1));
}

TEST(MinimalConductor, Examples) {
  EXPECT_EQ(minimal_conductor(q(7, 3)), 1);
  EXPECT_EQ(minimal_conductor(z(6, 2)), 3);
  EXPECT_EQ(minimal_conductor(sqrt_natural(5)), 5);
  EXPECT_EQ(minimal_conductor(z(4)), 4);
  EXPECT_EQ(minimal_conductor(z(6)), 3);  // z6 = -z3^2
  EXPECT_EQ(minimal_conductor(sqrt_natural(3)), 12);
  EXPECT_EQ(minimal_conductor(sqrt_natural(2)), 8);
}

TEST(MinimalConductor, ExpressedAtRejectsForeignElements) {
  EXPECT_EQ(kind_of([] { expressed_at(z(5), 1); }), ErrorKind::invalid_conductor);
  EXPECT_EQ(expressed_at(z(6, 2), 3), z(3));
  EXPECT_EQ(expressed_at(z(6, 2), 3).conductor(), 3);
}

TEST(SqrtNatural, Examples) {
  EXPECT_EQ(sqrt_natural(4), Cyclotomic(2));
  EXPECT_EQ(sqrt_natural(5), z(5) + z(5, 4) - z(5, 2) - z(5, 3));
  EXPECT_EQ(sqrt_natural(3), z(12) + z(12, 11));
  EXPECT_EQ(sqrt_natural(0), Cyclotomic(0));
  EXPECT_EQ(sqrt_natural(1), Cyclotomic(1));
}

TEST(SqrtNatural, SquaresAndNonNegative) {
  for (std::uint64_t m = 0; m <= 100; ++m) {
    Cyclotomic s = sqrt_natural(m);
    EXPECT_EQ(s * s, Cyclotomic(static_cast<long>(m))) << m;
    EXPECT_NE(sign_of_real(s), Sign::negative) << m;
  }
}

TEST(SignOfReal, Examples) {
  EXPECT_EQ(sign_of_real(Cyclotomic(1) + z(3) + z(3, 2)), Sign::zero);
  EXPECT_EQ(sign_of_real(sqrt_natural(5) - Cyclotomic(2)), Sign::positive);
  EXPECT_EQ(sign_of_real(q(-3, 7)), Sign::negative);
  EXPECT_EQ(kind_of([] { sign_of_real(z(3)); }), ErrorKind::not_real);
}

TEST(SignOfReal, TinyDifferences) {
  // (sqrt 2 - 1)^20 is about 2e-8, far below the first precision step's rounding.
  Cyclotomic x = sqrt_natural(2) - Cyclotomic(1), p(1);
  for (int i = 0; i < 20; ++i) p *= x;
  EXPECT_EQ(sign_of_real(p), Sign::positive);
  EXPECT_EQ(sign_of_real(-p), Sign::negative);
  Cyclotomic y = Cyclotomic(1) - sqrt_natural(2), r(1);
  for (int i = 0; i < 41; ++i) r *= y;
  EXPECT_EQ(sign_of_real(r), Sign::negative);
}

TEST(SignOfReal, AgreesWithHighPrecisionOracle) {
  gen::Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    int n = gen::uniform(rng, 1, 40);
    Cyclotomic a = gen::real_cyclotomic(rng, n);
    Big v = evaluate_real(a);
    Sign oracle = abs(v) < Big("1e-150") ? Sign::zero : (v > 0 ? Sign::positive : Sign::negative);
    EXPECT_EQ(sign_of_real(a), oracle) << to_string(a);
  }
}

TEST(GoldenRatio, Examples) {
  Cyclotomic phi = golden_ratio();
  EXPECT_TRUE((phi * phi - phi - Cyclotomic(1)).is_zero());
  EXPECT_EQ(phi, (Cyclotomic(1) + sqrt_natural(5)) / Cyclotomic(2));
  EXPECT_EQ(sign_of_real(phi - Cyclotomic(1)), Sign::positive);
  EXPECT_EQ(phi.conductor(), 5);
}

TEST(FieldAxioms, RandomTriples) {
  gen::Rng rng(7);
  for (int t = 0; t < 400; ++t) {
    int n = gen::uniform(rng, 1, 60);
    auto divs = detail::divisors(n);
    auto pick = [&] { return divs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(divs.size()) - 1))]; };
    Cyclotomic a = gen::cyclotomic(rng, pick()), b = gen::cyclotomic(rng, pick()), c = gen::cyclotomic(rng, pick());
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * inverse(a), Cyclotomic(1));
    }
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(FieldAxioms, ConjIsInvolutiveAutomorphism) {
  gen::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    int n = gen::uniform(rng, 1, 30);
    Cyclotomic a = gen::cyclotomic(rng, n), b = gen::cyclotomic(rng, n);
    EXPECT_EQ(conj(conj(a)), a);
    EXPECT_EQ(conj(a * b), conj(a) * conj(b));
    EXPECT_EQ(conj(a + b), conj(a) + conj(b));
    Cyclotomic norm = a * conj(a);
    EXPECT_EQ(conj(norm), norm);
    EXPECT_NE(sign_of_real(norm), Sign::negative);
  }
}

TEST(CanonicalForm, LiftThenReduceIsIdentity) {
  gen::Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    int n = gen::uniform(rng, 1, 30), k = gen::uniform(rng, 1, 4);
    Cyclotomic a = gen::cyclotomic(rng, n);
    Cyclotomic lifted = a.lifted_to(n * k);
    EXPECT_EQ(lifted.conductor(), n * k);
    EXPECT_EQ(lifted, a);
    Cyclotomic back = expressed_at(lifted, n);
    EXPECT_EQ(back.conductor(), n);
    EXPECT_EQ(back.numerators(), a.numerators());
    EXPECT_EQ(back.denominator(), a.denominator());
  }
}

TEST(CanonicalForm, MinimizedValueKeepsMinimalConductor) {
  gen::Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    int d = gen::uniform(rng, 1, 20);
    Cyclotomic a = gen::cyclotomic(rng, d);
    Cyclotomic lifted = a.lifted_to(d * gen::uniform(rng, 2, 3));
    EXPECT_EQ(minimal_conductor(lifted), minimal_conductor(a));
    EXPECT_EQ(minimized(lifted), a);
  }
}

TEST(Text, RenderAndParse) {
  Cyclotomic a = Cyclotomic(-1) - Cyclotomic(2) * z(5, 2) - Cyclotomic(2) * z(5, 3);
  EXPECT_EQ(to_string(a), "-1 - 2*z(5)^2 - 2*z(5)^3");
  EXPECT_EQ(parse_cyclotomic(to_string(a)), a);
  EXPECT_EQ(to_string(Cyclotomic(0)), "0");
  EXPECT_EQ(to_string(z(3)), "z(3)^1");
  EXPECT_EQ(to_string(q(-1, 2)), "-1/2");
  EXPECT_EQ(parse_cyclotomic("z(3)^1 + z(4)^-1"), z(3) + z(4, 3));
  EXPECT_EQ(parse_cyclotomic(" 3/4 "), q(3, 4));
  EXPECT_THROW(parse_cyclotomic(""), ParseError);
  EXPECT_THROW(parse_cyclotomic("1 +"), ParseError);
  EXPECT_THROW(parse_cyclotomic("z(0)^1"), Error);
  EXPECT_THROW(parse_cyclotomic("2*y(3)^1"), ParseError);
}

TEST(Text, RoundTripRandom) {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Cyclotomic a = gen::cyclotomic(rng, gen::uniform(rng, 1, 60));
    EXPECT_EQ(parse_cyclotomic(to_string(a)), a);
  }
}

TEST(Concurrency, FieldCacheUnderParallelUse) {
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([t, &ok] {
      bool good = true;
      for (int n = 1; n <= 90; ++n) {
        Cyclotomic w = root_of_unity(n + t, 1), p(1);
        for (int k = 0; k < n + t; ++k) p *= w;
        good = good && p == Cyclotomic(1);
      }
      ok[static_cast<std::size_t>(t)] = good;
    });
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_TRUE(v);
}
