#pragma once

/**
 * @file invariants.hpp
 * @brief Permutation invariants L, Q, A, B, C of natural vectors, the
 * icosahedron vertex geometry, and closed-form subspace inner products.
 *
 * Vertex numbering: 1 is the top vertex, 2..6 its neighbours in cyclic
 * order, 7 the bottom vertex and 8..12 the lower ring, so that the
 * antipode of p is 1 + ((p + 5) mod 12).
 *
 * The unitary change of basis that block-diagonalizes the 12-dimensional
 * representation involves the constants
 *   alpha = (phi/4) sqrt(10 - 2 sqrt 5),  beta = sqrt 5 sqrt(10 - 2 sqrt 5) / 20,
 *   gamma = (sqrt 3 / 8)(1 - sqrt 5 / 3),  delta = -(sqrt 3 / 8)(1 + sqrt 5 / 3).
 * They are not needed here: every inner product below comes from invariants.
 */

#include <array>
#include <string>
#include <vector>

#include "permuton/cyclotomic.hpp"
#include "permuton/errors.hpp"
#include "permuton/natural_vector.hpp"
#include "permuton/permutation.hpp"

namespace permuton {

class IcosahedronGeometry {
 public:
  static constexpr std::size_t kVertices = 12;

  /// The shipped vertex numbering.
  static const IcosahedronGeometry& standard() {
    static const IcosahedronGeometry geo;
    return geo;
  }

  /// Antipodal vertex, 1-based.
  static std::size_t complement(std::size_t p) { return 1 + (p + 5) % 12; }

  /// The five neighbours of vertex k, ascending.
  const std::array<std::size_t, 5>& neighborhood(std::size_t k) const { return adjacency_.at(k - 1); }

  bool adjacent(std::size_t a, std::size_t b) const {
    for (std::size_t x : neighborhood(a))
      if (x == b) return true;
    return false;
  }

  /// The six antipodal pairs {k, k+6}.
  std::vector<std::vector<std::size_t>> blocks() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 1; k <= 6; ++k) out.push_back({k, complement(k)});
    return out;
  }

  /// Structural self-test; returns the problems found.
  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    for (std::size_t k = 1; k <= kVertices; ++k) {
      std::size_t c = complement(k);
      if (c == k) problems.push_back("complement fixes " + std::to_string(k));
      if (complement(c) != k) problems.push_back("complement is not an involution at " + std::to_string(k));
      for (std::size_t x : neighborhood(k)) {
        if (x == k || x == c) problems.push_back("neighbourhood of " + std::to_string(k) + " meets its block");
        if (!adjacent(x, k))
          problems.push_back("adjacency not symmetric: " + std::to_string(k) + "-" + std::to_string(x));
      }
    }
    return problems;
  }

  /// True iff g preserves adjacency and commutes with the complement map.
  bool preserved_by(const Permutation& g) const {
    if (g.degree() != kVertices) return false;
    for (std::size_t k = 1; k <= kVertices; ++k) {
      if (g(complement(k)) != complement(g(k))) return false;
      for (std::size_t x : neighborhood(k))
        if (!adjacent(g(k), g(x))) return false;
    }
    return true;
  }

 private:
  IcosahedronGeometry()
      : adjacency_{{{2, 3, 4, 5, 6},
                    {1, 3, 6, 10, 11},
                    {1, 2, 4, 11, 12},
                    {1, 3, 5, 8, 12},
                    {1, 4, 6, 8, 9},
                    {1, 2, 5, 9, 10},
                    {8, 9, 10, 11, 12},
                    {4, 5, 7, 9, 12},
                    {5, 6, 7, 8, 10},
                    {2, 6, 7, 9, 11},
                    {2, 3, 7, 10, 12},
                    {3, 4, 7, 8, 11}}} {}

  std::array<std::array<std::size_t, 5>, kVertices> adjacency_;
};

namespace detail {

inline void require_length(const NaturalVector& v, std::size_t n) {
  if (v.size() != n)
    throw Error(ErrorKind::degree_mismatch,
                "expected a vector of length " + std::to_string(n) + ", got " + std::to_string(v.size()));
}

}  // namespace detail

inline Rational inv_L(const NaturalVector& n) {
  Rational s = 0;
  for (auto v : n.components()) s += to_rational(v);
  return s;
}

inline Rational inv_Q(const NaturalVector& m, const NaturalVector& n) {
  detail::require_length(n, m.size());
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += to_rational(m[i]) * to_rational(n[i]);
  return s;
}

/// A = sum_k m_k n_{complement(k)}.
inline Rational inv_A(const NaturalVector& m, const NaturalVector& n,
                      const IcosahedronGeometry& geo = IcosahedronGeometry::standard()) {
  (void)geo;
  detail::require_length(m, 12);
  detail::require_length(n, 12);
  Rational s = 0;
  for (std::size_t k = 1; k <= 12; ++k)
    s += to_rational(m[k - 1]) * to_rational(n[IcosahedronGeometry::complement(k) - 1]);
  return s;
}

/// B = sum_k m_k sum_{i in N(k)} n_i.
inline Rational inv_B(const NaturalVector& m, const NaturalVector& n,
                      const IcosahedronGeometry& geo = IcosahedronGeometry::standard()) {
  detail::require_length(m, 12);
  detail::require_length(n, 12);
  Rational s = 0;
  for (std::size_t k = 1; k <= 12; ++k)
    for (std::size_t i : geo.neighborhood(k)) s += to_rational(m[k - 1]) * to_rational(n[i - 1]);
  return s;
}

/// C = sum_k m_k sum_{i in N(complement(k))} n_i.
inline Rational inv_C(const NaturalVector& m, const NaturalVector& n,
                      const IcosahedronGeometry& geo = IcosahedronGeometry::standard()) {
  detail::require_length(m, 12);
  detail::require_length(n, 12);
  Rational s = 0;
  for (std::size_t k = 1; k <= 12; ++k)
    for (std::size_t i : geo.neighborhood(IcosahedronGeometry::complement(k)))
      s += to_rational(m[k - 1]) * to_rational(n[i - 1]);
  return s;
}

/// Inner product <Pm|Pn> from invariants. Tags: trivial-N, standard-N,
/// irr3, irr3prime, irr5, irr3plus3prime (the last four need length 12).
inline Cyclotomic closed_form_inner(const std::string& tag, const NaturalVector& m,
                                    const NaturalVector& n,
                                    const IcosahedronGeometry& geo = IcosahedronGeometry::standard()) {
  detail::require_length(n, m.size());
  auto sized = [&](const std::string& prefix) -> bool {
    if (tag.rfind(prefix, 0) != 0) return false;
    std::string rest = tag.substr(prefix.size());
    if (rest != std::to_string(m.size()))
      throw Error(ErrorKind::invalid_argument, "tag " + tag + " does not match length " + std::to_string(m.size()));
    return true;
  };
  const Rational size(static_cast<long>(m.size()));
  if (sized("trivial-")) return Cyclotomic(inv_L(m) * inv_L(n) / size);
  if (sized("standard-")) return Cyclotomic(inv_Q(m, n) - inv_L(m) * inv_L(n) / size);

  if (tag != "irr3" && tag != "irr3prime" && tag != "irr5" && tag != "irr3plus3prime")
    throw Error(ErrorKind::invalid_argument, "unknown closed-form tag " + tag);
  const Rational q = inv_Q(m, n), a = inv_A(m, n, geo), b = inv_B(m, n, geo), c = inv_C(m, n, geo);
  if (tag == "irr5") return Cyclotomic(Rational(1, 12) * (5 * q + 5 * a - b - c));
  if (tag == "irr3plus3prime") return Cyclotomic(Rational(1, 2) * (q - a));
  const Cyclotomic root5 = tag == "irr3" ? sqrt_natural(5) : -sqrt_natural(5);
  return Cyclotomic(Rational(1, 20)) * (Cyclotomic(Rational(5 * q - 5 * a)) + root5 * Cyclotomic(Rational(b - c)));
}

struct PositivityReport {
  Rational lhs;  // Q(n,n) - L^2/N
  Rational rhs;  // (1/N^2) sum (L - N n_i)^2
  bool identity_holds = false;
  bool distinct_components = false;
  bool strictly_positive = false;

  bool passed() const { return identity_holds && (!distinct_components || strictly_positive); }
};

inline PositivityReport positivity_identity_check(const NaturalVector& n) {
  PositivityReport r;
  if (n.size() == 0) throw Error(ErrorKind::invalid_argument, "empty vector");
  const Rational size(static_cast<long>(n.size()));
  const Rational l = inv_L(n);
  r.lhs = inv_Q(n, n) - l * l / size;
  r.rhs = 0;
  for (auto v : n.components()) {
    Rational d = l - size * to_rational(v);
    r.rhs += d * d;
  }
  r.rhs /= size * size;
  r.identity_holds = r.lhs == r.rhs;
  for (auto v : n.components())
    if (v != n[0]) r.distinct_components = true;
  r.strictly_positive = r.lhs > 0;
  return r;
}

}  // namespace permuton
