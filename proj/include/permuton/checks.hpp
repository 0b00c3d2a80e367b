#pragma once

/**
 * @file checks.hpp
 * @brief Reproduction checks for the S3 and A5 worked examples and the
 * exact-arithmetic kernel. Shared by the acceptance test and the CLI `demo` command.
 *
 * Each check recomputes its numbers through the library and compares them
 * with literal reference data or an independent route (brute force,
 * determinants, high-precision floating point). Random inputs use fixed
 * seeds, so every run is identical.
 */

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permuton/character_table.hpp"
#include "permuton/cyclotomic.hpp"
#include "permuton/group_action.hpp"
#include "permuton/invariants.hpp"
#include "permuton/models.hpp"
#include "permuton/quantum.hpp"
#include "permuton/representation.hpp"

namespace permuton {

struct CheckResult {
  std::string key;
  std::string title;
  bool passed = false;
  std::string detail;  // first failure, or a short summary on success
};

struct CheckOptions {
  /// Replaces the built-in S3 table (rows over classes [1,3,2]); negative control.
  std::optional<std::vector<std::vector<Cyclotomic>>> s3_table_override;
  std::uint64_t seed = 20240601;
};

namespace checks {

// ---------------------------------------------------------------------------
// Shared plumbing.

class Failure {
 public:
  explicit Failure(std::string msg) : msg_(std::move(msg)) {}
  const std::string& message() const { return msg_; }

 private:
  std::string msg_;
};

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

inline PermGroup s3_group() { return model_group("s3-natural"); }

inline CharacterTable s3_table(const PermGroup& g, const CheckOptions& opt) {
  if (opt.s3_table_override)
    return detail::finish_table(g, *opt.s3_table_override, CharacterTable::Source::file);
  return character_table(g);
}

inline NaturalVector random_vector(std::mt19937_64& rng, std::size_t n, std::uint64_t max) {
  std::uniform_int_distribution<std::uint64_t> d(0, max);
  std::vector<std::uint64_t> c(n);
  for (auto& v : c) v = d(rng);
  return NaturalVector(std::move(c));
}

inline std::string vec(const NaturalVector& v) { return "(" + v.to_string() + ")"; }

/// Exact determinant over Q by fraction-full Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// det(x I - rho(g)) at integer points 0..N; N+1 values fix the polynomial.
inline bool char_poly_matches_determinant(const Permutation& g) {
  const std::size_t n = g.degree();
  const auto coeffs = char_poly(g).expand();
  if (coeffs.size() != n + 1) return false;
  for (long x = 0; x <= static_cast<long>(n); ++x) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] += x;
      m[i][g.image0(i)] -= 1;
    }
    Rational horner = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) horner = horner * x + Rational(coeffs[k]);
    if (determinant(std::move(m)) != horner) return false;
  }
  return true;
}

inline std::vector<Cyclotomic> sorted_values(std::vector<Cyclotomic> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

/// Real part of sum_k c_k z_n^k at 200 decimal digits.
inline Float200 numeric_real_part(const Cyclotomic& a) {
  const auto coeffs = a.coefficients();
  const Float200 two_pi = 8 * atan(Float200(1));
  Float200 sum = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Float200 c = Float200(coeffs[k].get_num().get_str()) / Float200(coeffs[k].get_den().get_str());
    sum += c * cos(two_pi * k / a.conductor());
  }
  return sum;
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4), zero(0, 2);
  std::vector<Rational> c(static_cast<std::size_t>(n), 0);
  for (auto& v : c)
    if (zero(rng) != 0) v = make_rational(coef(rng), den(rng));
  return Cyclotomic::from_exponent_sum(n, c);
}

inline std::map<Permutation, Cyclotomic> random_hermitian_coeffs(std::mt19937_64& rng,
                                                                 const PermGroup& g) {
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> count(1, 4), small(-3, 3), cond(0, 2);
  const int conductors[] = {3, 4, 5};
  std::map<Permutation, Cyclotomic> coeffs;
  for (int t = count(rng); t > 0; --t) {
    std::size_t e = pick(rng);
    int n = conductors[cond(rng)];
    Cyclotomic c = Cyclotomic(small(rng)) + Cyclotomic(small(rng)) * root_of_unity(n, 1);
    const Permutation& x = g.element(e);
    const Permutation x_inv = x.inverse();
    if (x == x_inv) c = c + conj(c);  // involutions need real coefficients
    coeffs[x] += c;
    coeffs[x_inv] = conj(coeffs[x]);
  }
  return coeffs;
}

// ---------------------------------------------------------------------------
// The checks.

inline std::string s3_structure(const CheckOptions& opt) {
  PermGroup g = s3_group();
  expect(g.order() == 6, "order " + std::to_string(g.order()) + " instead of 6");
  std::vector<std::size_t> sizes;
  for (const auto& c : g.conjugacy_classes()) sizes.push_back(c.size());
  expect(sizes == std::vector<std::size_t>{1, 3, 2}, "class sizes differ from [1,3,2]");
  CharacterTable t = s3_table(g, opt);
  const std::vector<std::vector<Cyclotomic>> expected = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  expect(t.rows == expected, "character table differs from the reference table");
  auto problems = check_character_table(t);
  expect(problems.empty(), problems.empty() ? "" : problems.front());
  return "order 6, classes [1,3,2], table matches";
}

inline std::string s3_eigenvalues(const CheckOptions&) {
  const auto elems = s3_listed_elements();
  const auto& p2 = elems[1];
  const auto& p6 = elems[5];
  expect(char_poly(p2).to_string() == "(x-1)(x^2-1)", "char_poly(P2) = " + char_poly(p2).to_string());
  expect(char_poly(p6).to_string() == "(x^3-1)", "char_poly(P6) = " + char_poly(p6).to_string());
  expect(sorted_values(char_poly(p2).eigenvalues()) == sorted_values({1, 1, -1}),
         "eigenvalues of P2 are not (1,1,-1)");
  expect(sorted_values(char_poly(p6).eigenvalues()) ==
             sorted_values({1, root_of_unity(3, 1), root_of_unity(3, 2)}),
         "eigenvalues of P6 are not (1,r,r^2)");
  for (const auto& e : elems)
    expect(char_poly_matches_determinant(e), "factored form differs from determinant for " + e.to_string());
  return "P2: (x-1)(x^2-1), P6: (x^3-1); 6/6 determinant expansions agree";
}

inline std::string s3_decomposition(const CheckOptions& opt) {
  PermGroup g = s3_group();
  auto action = GroupAction::natural(g);
  CharacterTable t = s3_table(g, opt);
  auto mult = multiplicities(action, t);
  expect(mult == std::vector<std::size_t>{1, 0, 1}, "multiplicities differ from (1,0,1)");
  auto trivial = isotypic_projector(action, t, t.trivial_row());
  expect(trivial.matrix() == CycloMatrix(3, 3, Cyclotomic(make_rational(1, 3))),
         "trivial projector is not all-ones/3");
  auto standard = nontrivial_projector(action, t);
  expect(standard.rank() == 2, "standard projector trace " + std::to_string(standard.rank()));
  return "multiplicities (1,0,1): " + decomposition_string(mult, t);
}

inline std::string s3_transformation(const CheckOptions&) {
  const CycloMatrix t = s3_transformation_matrix();
  const Cyclotomic r = root_of_unity(3, 1), r2 = root_of_unity(3, 2), one(1);
  const CycloMatrix listed_inverse =
      inverse(sqrt_natural(3)) * CycloMatrix::from_rows({{one, one, one}, {one, r, r2}, {r, one, r2}});
  expect(inverse(t) == listed_inverse, "inverse(T) differs from the listed inverse");
  auto report = verify_block_diagonalization(t);
  expect(report.unitary, "T is not unitary");
  expect(report.passed(), report.failure);
  return "T unitary; T^-1 P_j T = diag(1, U_j) for all 6 elements";
}

inline std::string s3_interference(const CheckOptions& opt) {
  PermGroup g = s3_group();
  auto action = GroupAction::natural(g);
  CharacterTable t = s3_table(g, opt);
  auto standard = nontrivial_projector(action, t);
  const NaturalVector m{1, 3, 2}, n{1, 1, 2};
  auto sub = born_subspace(m, n, standard);
  expect(sub.probability.is_zero() && sub.amplitude.is_zero(), "subspace probability is " + to_string(sub.probability));
  auto full = born_full(m, n);
  expect(full.probability == Cyclotomic(make_rational(16, 21)), "full-space probability is " + to_string(full.probability));

  // Brute force over the integer equation 3 (m.n) = L(m) L(n); constant
  // vectors have no standard component and are excluded.
  auto found = find_interference(standard, 3);
  std::vector<std::pair<NaturalVector, NaturalVector>> brute;
  auto all = detail::enumerate_vectors(3, 0, 3);
  auto constant = [](const NaturalVector& v) { return v[0] == v[1] && v[1] == v[2]; };
  for (const auto& a : all)
    for (const auto& b : all) {
      if (!(a < b) || constant(a) || constant(b)) continue;
      std::uint64_t q = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
      std::uint64_t la = a[0] + a[1] + a[2], lb = b[0] + b[1] + b[2];
      if (3 * q == la * lb) brute.emplace_back(a, b);
    }
  expect(found.pairs == brute, "find_interference(3) returned " + std::to_string(found.pairs.size()) +
                                   " pairs, brute force " + std::to_string(brute.size()));
  expect(std::find(brute.begin(), brute.end(), std::pair{n, m}) != brute.end(),
         "((1,1,2),(1,3,2)) missing from the solution set");
  return "probability 0 in the 2-dim subspace, 16/21 in full space; " +
         std::to_string(brute.size()) + " solutions at bound 3";
}

inline std::string s3_closed_forms(const CheckOptions& opt) {
  PermGroup g = s3_group();
  auto action = GroupAction::natural(g);
  CharacterTable t = s3_table(g, opt);
  auto standard = nontrivial_projector(action, t);
  std::mt19937_64 rng(opt.seed + 6);
  for (int k = 0; k < 100; ++k) {
    NaturalVector m = random_vector(rng, 3, 10), n = random_vector(rng, 3, 10);
    Rational closed = inv_Q(m, n) - inv_L(m) * inv_L(n) / 3;
    expect(subspace_inner(m, n, standard) == Cyclotomic(closed),
           "subspace_inner differs from Q - L.L/3 at " + vec(m) + ", " + vec(n));
    for (const auto* v : {&m, &n}) {
      Rational l = inv_L(*v), rhs = 0;
      for (auto c : v->components()) rhs += (l - 3 * to_rational(c)) * (l - 3 * to_rational(c));
      expect(inv_Q(*v, *v) - l * l / 3 == rhs / 9, "positivity identity fails at " + vec(*v));
    }
  }
  return "100 random pairs agree with Q - L.L/3; positivity identity exact";
}

inline std::string a5_presentation(const CheckOptions&) {
  const Permutation a = parse_cycles("(1,2,3,4,5)", 5), b = parse_cycles("(1,2)(3,4)", 5);
  expect(a.pow(5).is_identity() && b.pow(2).is_identity() && (a * b).pow(3).is_identity(),
         "presentation relations fail");
  PermGroup g = closure({a, b});
  expect(g.order() == 60, "closure order " + std::to_string(g.order()));
  CayleyGraph graph(g, {a, b});
  expect(graph.vertex_count() == 60, "vertex count");
  expect(graph.regular_degree() == 3, "Cayley graph is not 3-regular");
  expect(graph.edge_count() == 90, "edge count " + std::to_string(graph.edge_count()));
  const std::size_t word_a[] = {0}, word_ab[] = {0, 1};
  expect(graph.closed_walk_count(word_a) == 12, "pentagon count " + std::to_string(graph.closed_walk_count(word_a)));
  expect(graph.closed_walk_count(word_ab) == 20, "hexagon count " + std::to_string(graph.closed_walk_count(word_ab)));
  return "order 60; 3-regular, 90 edges, 12 pentagons, 20 hexagons";
}

inline std::string a5_icosahedron(const CheckOptions&) {
  PermGroup g = model_group("a5-icosahedron");
  auto action = GroupAction::natural(g);
  auto systems = blocks(action);
  expect(systems.size() == 1, std::to_string(systems.size()) + " minimal block systems");
  BlockSystem expected;
  for (std::size_t k = 1; k <= 6; ++k) expected.cells.push_back({k, k + 6});
  expect(systems.front() == expected, "block system " + systems.front().to_string());
  for (const auto& cell : systems.front().cells)
    expect(IcosahedronGeometry::complement(cell[0]) == cell[1], "complement formula disagrees with blocks");
  for (const auto& gen : g.generators())
    expect(IcosahedronGeometry::standard().preserved_by(gen), "generator " + gen.to_string() + " breaks adjacency");
  CharacterTable t = character_table(g);
  auto mult = multiplicities(action, t);
  expect(mult == std::vector<std::size_t>{1, 1, 1, 0, 1}, "multiplicities differ from (1,1,1,0,1)");
  std::vector<std::size_t> traces;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (mult[i]) traces.push_back(isotypic_projector(action, t, i).rank());
  expect(traces == std::vector<std::size_t>{1, 3, 3, 5}, "projector traces differ from (1,3,3,5)");
  return systems.front().to_string() + "; " + decomposition_string(mult, t);
}

inline std::string a5_primitive(const CheckOptions&) {
  const std::pair<const char*, std::vector<std::size_t>> cases[] = {
      {"a5-5", {1, 0, 0, 1, 0}}, {"a5-6", {1, 0, 0, 0, 1}}, {"a5-10", {1, 0, 0, 1, 1}}};
  std::string summary;
  for (const auto& [name, expected] : cases) {
    PermGroup g = model_group(name);
    auto action = GroupAction::natural(g);
    CharacterTable t = character_table(g);
    auto mult = multiplicities(action, t);
    expect(mult == expected, std::string(name) + " decomposes as " + decomposition_string(mult, t));
    expect(blocks(action).empty(), std::string(name) + " is not primitive");
    summary += (summary.empty() ? "" : ", ") + decomposition_string(mult, t);
  }
  return summary + "; all primitive";
}

inline std::string a5_invariants(const CheckOptions& opt) {
  PermGroup g = model_group("a5-icosahedron");
  auto action = GroupAction::natural(g);
  CharacterTable t = character_table(g);
  const auto& geo = IcosahedronGeometry::standard();
  const char* tags[] = {"trivial-12", "irr3", "irr3prime", "irr5", "irr3plus3prime"};
  std::vector<IsotypicProjector> projectors;
  for (const char* tag : tags) projectors.push_back(subspace_projector(tag, action, t));
  std::mt19937_64 rng(opt.seed + 10);
  for (int k = 0; k < 200; ++k) {
    NaturalVector m = random_vector(rng, 12, 10), n = random_vector(rng, 12, 10);
    expect(inv_A(m, n, geo) + inv_B(m, n, geo) + inv_C(m, n, geo) + inv_Q(m, n) == inv_L(m) * inv_L(n),
           "A+B+C+Q != L.L at " + vec(m) + ", " + vec(n));
    std::vector<Cyclotomic> values;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
      Cyclotomic closed = closed_form_inner(tags[i], m, n, geo);
      expect(closed == subspace_inner(m, n, projectors[i]),
             std::string(tags[i]) + " closed form differs from projector at " + vec(m) + ", " + vec(n));
      values.push_back(closed);
    }
    // sqrt 5 -> -sqrt 5 is z5 -> z5^2
    Cyclotomic x = minimized(values[1]);
    int c = x.conductor();
    long s = 2;
    while (std::gcd(s, static_cast<long>(c)) != 1) s += 5;
    expect(galois(x, s) == values[2], "irr3 and irr3prime are not Galois conjugate");
  }
  return "identity and 5 closed forms exact on 200 random pairs";
}

inline std::string a5_rationality(const CheckOptions& opt) {
  PermGroup g = model_group("a5-icosahedron");
  auto action = GroupAction::natural(g);
  CharacterTable t = character_table(g);
  auto p3 = subspace_projector("irr3", action, t);
  auto p33 = subspace_projector("irr3plus3prime", action, t);

  // First pair (in enumeration order over 0/1 vectors) with an irrational
  // irr3 probability.
  std::optional<std::pair<NaturalVector, NaturalVector>> witness;
  auto candidates = detail::enumerate_vectors(12, 0, 1);
  std::sort(candidates.begin(), candidates.end(), [](const NaturalVector& a, const NaturalVector& b) {
    auto la = inv_L(a), lb = inv_L(b);
    return la != lb ? la < lb : b < a;
  });
  for (std::size_t i = 0; i < candidates.size() && !witness && i < 200; ++i)
    for (std::size_t j = 0; j < candidates.size() && !witness && j < 200; ++j) {
      const auto &m = candidates[i], &n = candidates[j];
      if (m.is_zero() || n.is_zero()) continue;
      if (subspace_inner(m, m, p3).is_zero() || subspace_inner(n, n, p3).is_zero()) continue;
      if (!born_subspace(m, n, p3).is_rational) witness = std::pair{m, n};
    }
  expect(witness.has_value(), "no irrational irr3 probability found");
  const NaturalVector fixture_m{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, fixture_n{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  expect(witness->first == fixture_m && witness->second == fixture_n,
         "witness moved to " + vec(witness->first) + ", " + vec(witness->second));
  auto w = born_subspace(witness->first, witness->second, p3);
  expect(minimal_conductor(w.probability) == 5,
         "witness conductor " + std::to_string(minimal_conductor(w.probability)));
  expect(w.probability == (Cyclotomic(5) + sqrt_natural(5)) / Cyclotomic(10),
         "witness probability is " + to_string(w.probability));

  std::mt19937_64 rng(opt.seed + 11);
  int tested = 0;
  while (tested < 200) {
    NaturalVector m = random_vector(rng, 12, 10), n = random_vector(rng, 12, 10);
    if (subspace_inner(m, m, p33).is_zero() || subspace_inner(n, n, p33).is_zero()) continue;
    auto r = born_subspace(m, n, p33);
    expect(r.is_rational, "3+3' probability irrational at " + vec(m) + ", " + vec(n));
    ++tested;
  }
  return "irr3 witness e1, e1+e2 gives (5+sqrt 5)/10; 3+3' rational on 200 pairs";
}

inline std::string uncertainty(const CheckOptions& opt) {
  std::mt19937_64 rng(opt.seed + 12);
  std::size_t total = 0;
  for (const char* name : {"s3-natural", "a5-icosahedron"}) {
    PermGroup g = model_group(name);
    for (int k = 0; k < 50; ++k) {
      Observable a(g, random_hermitian_coeffs(rng, g)), b(g, random_hermitian_coeffs(rng, g));
      expect(a.is_hermitian() && b.is_hermitian(), "generated observable is not hermitian");
      expect(conj_transpose(a.matrix()) == a.matrix(), "hermitian observable matrix is not self-adjoint");
      NaturalVector n = random_vector(rng, g.degree(), 10);
      if (n.is_zero()) n = NaturalVector(std::vector<std::uint64_t>(g.degree(), 1));
      auto r = uncertainty_check(a, b, n);
      expect(r.holds(), std::string("negative difference on ") + name + " at " + vec(n));
      auto same = uncertainty_check(a, a, n);
      expect(same.difference.is_zero(), std::string("A = B difference nonzero on ") + name);
      ++total;
    }
  }
  return std::to_string(total) + " observable pairs certified nonnegative; equality at A = B";
}

inline std::string exactnum_kernel(const CheckOptions& opt) {
  std::mt19937_64 rng(opt.seed + 13);
  std::uniform_int_distribution<int> cond(1, 60);
  for (int k = 0; k < 1000; ++k) {
    const int n = cond(rng);
    const auto divs = detail::divisors(n);
    std::uniform_int_distribution<std::size_t> pick(0, divs.size() - 1);
    Cyclotomic a = random_cyclotomic(rng, divs[pick(rng)]), b = random_cyclotomic(rng, divs[pick(rng)]),
               c = random_cyclotomic(rng, divs[pick(rng)]);
    const std::string at = " at triple " + std::to_string(k);
    expect(a + b == b + a && a * b == b * a, "commutativity" + at);
    expect((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity" + at);
    expect(a * (b + c) == a * b + a * c, "distributivity" + at);
    expect(a + Cyclotomic(0) == a && a * Cyclotomic(1) == a && (a - a).is_zero(), "identities" + at);
    if (!a.is_zero()) expect(a * inverse(a) == Cyclotomic(1), "inverse" + at);
  }
  for (std::uint64_t m = 0; m <= 100; ++m) {
    Cyclotomic s = sqrt_natural(m);
    expect(s * s == Cyclotomic(static_cast<long>(m)), "sqrt_natural(" + std::to_string(m) + ")^2");
  }
  std::uniform_int_distribution<int> real_cond(1, 30);
  for (int k = 0; k < 500; ++k) {
    Cyclotomic x = random_cyclotomic(rng, real_cond(rng));
    Cyclotomic re = x + conj(x);
    if (k % 5 == 0) re = re - Cyclotomic(re.coefficients()[0]);  // values near zero
    if (k % 25 == 0) re = Cyclotomic(0);
    Float200 v = numeric_real_part(re);
    Sign oracle = abs(v) < Float200("1e-150") ? Sign::zero : (v > 0 ? Sign::positive : Sign::negative);
    expect(sign_of_real(re) == oracle, "sign_of_real disagrees with the numeric oracle on " + to_string(re));
  }
  Cyclotomic phi = golden_ratio();
  expect(phi * phi == phi + Cyclotomic(1), "phi^2 != phi + 1");
  return "1000 field-axiom triples, 101 square roots, 500 signs, phi^2 = phi + 1";
}

inline std::string regular_representation(const CheckOptions& opt) {
  PermGroup g = s3_group();
  const std::vector<Permutation> trivial{Permutation::identity(3)};
  auto regular = coset_action(g, trivial);
  CharacterTable t = s3_table(g, opt);
  auto mult = multiplicities(regular, t);
  expect(mult == t.dims, "regular multiplicities differ from the dimensions");
  expect(mult == std::vector<std::size_t>{1, 1, 2}, "dimension vector differs from (1,1,2)");
  return "regular S3: multiplicities (1,1,2) = dimensions";
}

}  // namespace checks

struct CheckDefinition {
  const char* key;
  const char* title;
  std::string (*run)(const CheckOptions&);
};

inline const std::vector<CheckDefinition>& check_definitions() {
  static const std::vector<CheckDefinition> defs = {
      {"s3-structure", "S3 order, classes and character table", checks::s3_structure},
      {"s3-eigenvalues", "eigenvalues and characteristic polynomials of P2, P6", checks::s3_eigenvalues},
      {"s3-decomposition", "natural S3 action decomposes as 1 + 2", checks::s3_decomposition},
      {"s3-transformation", "unitary T block-diagonalizes all six matrices", checks::s3_transformation},
      {"s3-interference", "destructive interference and the Diophantine solution set", checks::s3_interference},
      {"s3-closed-forms", "standard-subspace inner product and positivity identity", checks::s3_closed_forms},
      {"a5-presentation", "A5 presentation and buckyball Cayley graph", checks::a5_presentation},
      {"icosahedral-decomposition", "A5 on 12 vertices: blocks and 1 + 3 + 3' + 5", checks::a5_icosahedron},
      {"a5-primitive-actions", "A5 on 5, 6 and 10 points", checks::a5_primitive},
      {"a5-invariant-algebra", "invariant identity and five closed forms", checks::a5_invariants},
      {"a5-rationality", "irrational 3 versus rational 3 + 3'", checks::a5_rationality},
      {"uncertainty", "Cauchy-Schwarz for group-algebra observables", checks::uncertainty},
      {"exactnum-kernel", "cyclotomic field axioms, square roots, signs", checks::exactnum_kernel},
      {"regular-representation", "regular S3 contains every irreducible", checks::regular_representation},
  };
  return defs;
}

inline CheckResult run_check(const CheckDefinition& def, const CheckOptions& options = {}) {
  CheckResult r{def.key, def.title, false, {}};
  try {
    r.detail = def.run(options);
    r.passed = true;
  } catch (const checks::Failure& f) {
    r.detail = f.message();
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

inline std::vector<CheckResult> run_all_checks(const CheckOptions& options = {}) {
  std::vector<CheckResult> out;
  for (const auto& def : check_definitions()) out.push_back(run_check(def, options));
  return out;
}

}  // namespace permuton
