#pragma once

/**
 * @file representation.hpp
 * @brief Permutation representations: 0/1 matrices, characteristic
 * polynomials, multiplicities of irreducibles and isotypic projectors.
 *
 * A group element g acting on points s_1..s_N is represented by the matrix
 * rho(g)_{ij} = 1 iff s_i g = s_j. With the right-action convention this
 * makes g -> rho(g) a homomorphism: rho(g) rho(h) = rho(gh).
 *
 * Invariant subspaces are handled through the central idempotents
 * P = (d/|G|) sum_g conj(chi(g)) rho(g), which are exact, self-adjoint and
 * independent of any choice of basis inside the subspace.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permuton/character_table.hpp"
#include "permuton/cyclotomic.hpp"
#include "permuton/group_action.hpp"
#include "permuton/matrix.hpp"
#include "permuton/natural_vector.hpp"

namespace permuton {

/// A permutation viewed as its 0/1 matrix; materialized on demand.
class PermMatrix {
 public:
  explicit PermMatrix(Permutation p) : p_(std::move(p)) {}

  std::size_t size() const { return p_.degree(); }
  const Permutation& permutation() const noexcept { return p_; }

  /// Entry (i, j), 0-based.
  int entry(std::size_t i, std::size_t j) const { return p_.image0(i) == j ? 1 : 0; }

  CycloMatrix materialize() const {
    CycloMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) m(i, p_.image0(i)) = Cyclotomic(1);
    return m;
  }

 private:
  Permutation p_;
};

inline PermMatrix perm_matrix(const Permutation& g) { return PermMatrix(g); }

/// det(x I - rho(g)) = prod_i (x^i - 1)^{k_i}, k_i the number of i-cycles.
struct CharPolyFactorization {
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // (cycle length, multiplicity)

  std::size_t degree() const {
    std::size_t n = 0;
    for (auto [len, mult] : factors) n += len * mult;
    return n;
  }

  /// Coefficients of the expanded polynomial, constant term first.
  std::vector<Integer> expand() const {
    std::vector<Integer> poly{1};
    for (auto [len, mult] : factors)
      for (std::size_t k = 0; k < mult; ++k) {
        std::vector<Integer> next(poly.size() + len, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + len] += poly[i];
          next[i] -= poly[i];
        }
        poly = std::move(next);
      }
    return poly;
  }

  /// Eigenvalue multiset: all len-th roots of unity for every cycle.
  std::vector<Cyclotomic> eigenvalues() const {
    std::vector<Cyclotomic> out;
    for (auto [len, mult] : factors)
      for (std::size_t k = 0; k < mult; ++k)
        for (std::size_t j = 0; j < len; ++j)
          out.push_back(root_of_unity(static_cast<int>(len), static_cast<long>(j)));
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (auto [len, mult] : factors) {
      out += len == 1 ? "(x-1)" : "(x^" + std::to_string(len) + "-1)";
      if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
  }

  friend bool operator==(const CharPolyFactorization&, const CharPolyFactorization&) = default;
};

inline CharPolyFactorization char_poly(const Permutation& g) {
  CharPolyFactorization f;
  for (std::size_t len : g.cycle_type()) {
    if (!f.factors.empty() && f.factors.back().first == len)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(len, 1);
  }
  return f;
}

/// Fixed-point count of the element in the action (trace of its matrix).
inline std::size_t action_character(const GroupAction& action, std::size_t element_index) {
  return action.image(element_index).fixed_points();
}

namespace detail {

inline void require_same_group(const GroupAction& action, const CharacterTable& table) {
  if (!action.group().same_as(table.group))
    throw Error(ErrorKind::invalid_argument, "character table belongs to a different group");
}

}  // namespace detail

/// m_i = (1/|G|) sum_C |C| fix(C) conj(chi_i(C)), one natural number per row.
inline std::vector<std::size_t> multiplicities(const GroupAction& action,
                                               const CharacterTable& table) {
  detail::require_same_group(action, table);
  const auto& g = action.group();
  const auto& classes = g.conjugacy_classes();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Cyclotomic s;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::size_t fix = action_character(action, *g.index_of(classes[c].representative));
      s += Cyclotomic(static_cast<long>(classes[c].size() * fix)) * conj(table.rows[i][c]);
    }
    s *= Cyclotomic(make_rational(1, static_cast<long>(g.order())));
    auto q = s.as_rational();
    if (!q || !is_integer(*q) || *q < 0)
      throw Error(ErrorKind::consistency,
                  "non-integral multiplicity for " + table.labels[i] + ": " + to_string(s));
    out.push_back(q->get_num().get_ui());
  }
  return out;
}

/// "1 ⊕ 3 ⊕ 3' ⊕ 5" style summary; repeated components appear as "2·3".
inline std::string decomposition_string(const std::vector<std::size_t>& mult,
                                        const CharacterTable& table) {
  std::string out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (!out.empty()) out += " ⊕ ";
    if (mult[i] > 1) out += std::to_string(mult[i]) + "·";
    out += table.labels[i];
  }
  return out.empty() ? "0" : out;
}

/// Orthogonal projector onto the sum of the isotypic components of the
/// listed irreducibles inside a permutation representation.
class IsotypicProjector {
 public:
  IsotypicProjector(GroupAction action, std::vector<std::size_t> rows,
                    std::vector<std::string> labels, CycloMatrix matrix)
      : action_(std::move(action)),
        rows_(std::move(rows)),
        labels_(std::move(labels)),
        matrix_(std::move(matrix)) {}

  const GroupAction& action() const noexcept { return action_; }
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const CycloMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const { return matrix_.rows(); }

  std::string label() const {
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i) out += (i ? "+" : "") + labels_[i];
    return out;
  }

  /// Dimension of the image (trace of an idempotent).
  std::size_t rank() const {
    auto t = matrix_.trace().as_rational();
    if (!t || !is_integer(*t)) throw Error(ErrorKind::consistency, "projector trace not integral");
    return t->get_num().get_ui();
  }

 private:
  GroupAction action_;
  std::vector<std::size_t> rows_;
  std::vector<std::string> labels_;
  CycloMatrix matrix_;
};

/// Sum of the central idempotents of the given rows, P = sum_i P_i.
inline IsotypicProjector combined_projector(const GroupAction& action, const CharacterTable& table,
                                            std::vector<std::size_t> rows) {
  detail::require_same_group(action, table);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const auto& g = action.group();
  const std::size_t n = action.degree();
  const auto& classes = g.conjugacy_classes();

  // weight per class: sum_i (d_i/|G|) conj(chi_i(C))
  std::vector<Cyclotomic> weight(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t r : rows)
      weight[c] += Cyclotomic(make_rational(static_cast<long>(table.dims.at(r)),
                                       static_cast<long>(g.order()))) *
                   conj(table.rows[r][c]);

  CycloMatrix p(n, n);
  for (std::size_t e = 0; e < g.order(); ++e) {
    const Cyclotomic& w = weight[g.class_of(e)];
    if (w.is_zero()) continue;
    const Permutation& img = action.image(e);
    for (std::size_t i = 0; i < n; ++i) p(i, img.image0(i)) += w;
  }
  std::vector<std::string> labels;
  for (std::size_t r : rows) labels.push_back(table.labels.at(r));
  return IsotypicProjector(action, std::move(rows), std::move(labels), std::move(p));
}

inline IsotypicProjector isotypic_projector(const GroupAction& action, const CharacterTable& table,
                                            std::size_t row) {
  return combined_projector(action, table, {row});
}

/// Projector onto the orthogonal complement of the trivial component.
inline IsotypicProjector nontrivial_projector(const GroupAction& action,
                                              const CharacterTable& table) {
  std::vector<std::size_t> rows;
  const std::size_t trivial = table.trivial_row();
  for (std::size_t i = 0; i < table.size(); ++i)
    if (i != trivial) rows.push_back(i);
  return combined_projector(action, table, std::move(rows));
}

/// The identity matrix as a projector (the full space).
inline IsotypicProjector full_space_projector(const GroupAction& action) {
  return IsotypicProjector(action, {}, {"full"}, CycloMatrix::identity(action.degree()));
}

/// <m|P|n>; equals the inner product of the projected vectors.
inline Cyclotomic subspace_inner(const NaturalVector& m, const NaturalVector& n,
                                 const IsotypicProjector& p) {
  const std::size_t size = p.size();
  if (m.size() != size || n.size() != size)
    throw Error(ErrorKind::degree_mismatch, "vector length differs from projector size");
  Cyclotomic total;
  for (std::size_t i = 0; i < size; ++i) {
    if (m[i] == 0) continue;
    Cyclotomic row;
    for (std::size_t j = 0; j < size; ++j) {
      if (n[j] == 0 || p.matrix()(i, j).is_zero()) continue;
      row += Cyclotomic(to_rational(n[j])) * p.matrix()(i, j);
    }
    total += Cyclotomic(to_rational(m[i])) * row;
  }
  return total;
}

// ---------------------------------------------------------------------------
// S3 block diagonalization through an explicit unitary matrix.

/// The six elements of S3 in the order (), (2,3), (1,3), (1,2), (1,2,3), (1,3,2).
inline std::vector<Permutation> s3_listed_elements() {
  std::vector<Permutation> out;
  for (const char* c : {"()", "(2,3)", "(1,3)", "(1,2)", "(1,2,3)", "(1,3,2)"})
    out.push_back(parse_cycles(c, 3));
  return out;
}

/// (1/sqrt 3) [[1, 1, r^2], [1, r^2, 1], [1, r, r]] over Q(z_12), r = z_3.
inline CycloMatrix s3_transformation_matrix() {
  const Cyclotomic r = root_of_unity(3, 1), r2 = root_of_unity(3, 2), one(1);
  const Cyclotomic s = inverse(sqrt_natural(3));
  return s * CycloMatrix::from_rows({{one, one, r2}, {one, r2, one}, {one, r, r}});
}

/// Expected 2x2 blocks U_1..U_6 of the faithful two-dimensional irreducible,
/// in the element order of s3_listed_elements().
inline std::vector<CycloMatrix> s3_expected_blocks() {
  const Cyclotomic r = root_of_unity(3, 1), r2 = root_of_unity(3, 2), one(1), zero(0);
  return {
      CycloMatrix::from_rows({{one, zero}, {zero, one}}),
      CycloMatrix::from_rows({{zero, r2}, {r, zero}}),
      CycloMatrix::from_rows({{zero, r}, {r2, zero}}),
      CycloMatrix::from_rows({{zero, one}, {one, zero}}),
      CycloMatrix::from_rows({{r2, zero}, {zero, r}}),
      CycloMatrix::from_rows({{r, zero}, {zero, r2}}),
  };
}

struct BlockDiagonalizationReport {
  struct ElementCheck {
    Permutation element;
    CycloMatrix conjugated;   // T^-1 P T
    bool block_diagonal = false;
    bool matches_expected = false;
  };

  bool unitary = false;
  std::vector<ElementCheck> checks;
  std::string failure;  // empty when everything passed

  bool passed() const { return failure.empty(); }
};

/// Checks T unitary and T^-1 P_j T = diag(1, U_j) for all six elements.
inline BlockDiagonalizationReport verify_block_diagonalization(const CycloMatrix& t) {
  BlockDiagonalizationReport report;
  if (t.rows() != 3 || t.cols() != 3) {
    report.failure = "transformation matrix must be 3x3";
    return report;
  }
  report.unitary = conj_transpose(t) * t == CycloMatrix::identity(3);
  if (!report.unitary) report.failure = "T is not unitary";
  CycloMatrix t_inv;
  try {
    t_inv = inverse(t);
  } catch (const Error&) {
    report.failure = "T is singular";
    return report;
  }
  const auto elements = s3_listed_elements();
  const auto expected = s3_expected_blocks();
  for (std::size_t j = 0; j < elements.size(); ++j) {
    BlockDiagonalizationReport::ElementCheck check;
    check.element = elements[j];
    check.conjugated = t_inv * perm_matrix(elements[j]).materialize() * t;
    const auto& c = check.conjugated;
    check.block_diagonal = c(0, 0) == Cyclotomic(1) && c(0, 1).is_zero() && c(0, 2).is_zero() &&
                           c(1, 0).is_zero() && c(2, 0).is_zero();
    check.matches_expected = check.block_diagonal && c(1, 1) == expected[j](0, 0) &&
                             c(1, 2) == expected[j](0, 1) && c(2, 1) == expected[j](1, 0) &&
                             c(2, 2) == expected[j](1, 1);
    if (report.failure.empty()) {
      if (!check.block_diagonal)
        report.failure = "element " + elements[j].to_string() + " is not block-diagonalized";
      else if (!check.matches_expected)
        report.failure = "element " + elements[j].to_string() + " block differs from U" +
                         std::to_string(j + 1);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace permuton
