#pragma once

/**
 * @file quantum.hpp
 * @brief Born probabilities over natural state vectors, destructive
 * interference search and group-algebra observables.
 *
 * States are natural vectors n (population numbers). In an invariant
 * subspace with projector P the Born probability of registering n with an
 * apparatus tuned to m is |<m|P|n>|^2 / (<m|P|m> <n|P|n>).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permuton/character_table.hpp"
#include "permuton/cyclotomic.hpp"
#include "permuton/errors.hpp"
#include "permuton/natural_vector.hpp"
#include "permuton/perm_group.hpp"
#include "permuton/representation.hpp"

namespace permuton {

struct BornResult {
  Cyclotomic amplitude;
  Cyclotomic probability;
  bool is_rational = false;

  std::optional<Rational> rational_probability() const { return probability.as_rational(); }
};

namespace detail {

inline void require_nonzero(const NaturalVector& v, const char* name) {
  if (v.is_zero())
    throw Error(ErrorKind::degenerate_state, std::string(name) + " is the zero vector");
}

inline void require_same_length(const NaturalVector& a, const NaturalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::degree_mismatch, "vectors differ in length");
}

inline BornResult make_born(Cyclotomic amplitude, const Cyclotomic& norm_m,
                            const Cyclotomic& norm_n) {
  BornResult r;
  r.probability = amplitude * conj(amplitude) / (norm_m * norm_n);
  r.amplitude = std::move(amplitude);
  r.is_rational = r.probability.is_rational();
  return r;
}

inline Rational dot(const NaturalVector& m, const NaturalVector& n) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] && n[i]) s += to_rational(m[i]) * to_rational(n[i]);
  return s;
}

}  // namespace detail

/// Full-space probability (m.n)^2 / (|m|^2 |n|^2); always rational.
inline BornResult born_full(const NaturalVector& m, const NaturalVector& n) {
  detail::require_same_length(m, n);
  detail::require_nonzero(m, "m");
  detail::require_nonzero(n, "n");
  return detail::make_born(Cyclotomic(detail::dot(m, n)), Cyclotomic(detail::dot(m, m)),
                           Cyclotomic(detail::dot(n, n)));
}

inline BornResult born_subspace(const NaturalVector& m, const NaturalVector& n,
                                const IsotypicProjector& p) {
  detail::require_same_length(m, n);
  Cyclotomic norm_m = subspace_inner(m, m, p);
  if (norm_m.is_zero())
    throw Error(ErrorKind::degenerate_state, "m has zero projection onto " + p.label());
  Cyclotomic norm_n = subspace_inner(n, n, p);
  if (norm_n.is_zero())
    throw Error(ErrorKind::degenerate_state, "n has zero projection onto " + p.label());
  return detail::make_born(subspace_inner(m, n, p), norm_m, norm_n);
}

// ---------------------------------------------------------------------------
// Interference search.

struct InterferenceOptions {
  std::uint64_t bound = 1;
  bool positive_only = false;  // components drawn from 1..bound instead of 0..bound
  std::uint64_t max_pairs = 100'000'000;
};

struct InterferenceResult {
  std::vector<std::pair<NaturalVector, NaturalVector>> pairs;  // m < n, sorted
  std::size_t orbit_count = 0;  // classes under the group and (m,n) ~ (n,m)
  std::uint64_t candidates = 0; // vectors with nonzero projected norm
};

namespace detail {

inline std::vector<NaturalVector> enumerate_vectors(std::size_t n, std::uint64_t lo,
                                                    std::uint64_t hi) {
  std::vector<NaturalVector> out;
  if (lo > hi) return out;
  std::vector<std::uint64_t> cur(n, lo);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == hi) cur[--i] = lo;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

inline std::pair<NaturalVector, NaturalVector> orbit_key(const GroupAction& action,
                                                         const NaturalVector& m,
                                                         const NaturalVector& n) {
  std::optional<std::pair<NaturalVector, NaturalVector>> best;
  for (std::size_t e = 0; e < action.group().order(); ++e) {
    NaturalVector a = m.permuted(action.image(e)), b = n.permuted(action.image(e));
    auto cand = a < b ? std::pair{a, b} : std::pair{b, a};
    if (!best || cand < *best) best = std::move(cand);
  }
  return *best;
}

}  // namespace detail

/// All pairs with <m|P|n> = 0 and both projected norms nonzero, components
/// bounded by options.bound; (m,n) and (n,m) are reported once, as m < n.
inline InterferenceResult find_interference(const IsotypicProjector& p,
                                            const InterferenceOptions& options) {
  InterferenceResult result;
  if (options.bound == 0) return result;
  const std::size_t n = p.size();
  const std::uint64_t lo = options.positive_only ? 1 : 0;
  const std::uint64_t per_axis = options.bound - lo + 1;
  // guard on the raw pair count before enumerating anything
  long double space = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) space *= static_cast<long double>(per_axis);
  if (space > static_cast<long double>(options.max_pairs))
    throw Error(ErrorKind::invalid_argument,
                "interference search space exceeds " + std::to_string(options.max_pairs) +
                    " pairs");

  std::vector<NaturalVector> vectors;
  for (auto& v : detail::enumerate_vectors(n, lo, options.bound))
    if (!v.is_zero() && !subspace_inner(v, v, p).is_zero()) vectors.push_back(std::move(v));
  result.candidates = vectors.size();

  // Projected vectors Pv, so each amplitude is a single dot product.
  std::vector<std::vector<Cyclotomic>> projected;
  projected.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Cyclotomic> pv(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] && !p.matrix()(i, j).is_zero())
          pv[i] += Cyclotomic(to_rational(v[j])) * p.matrix()(i, j);
    projected.push_back(std::move(pv));
  }
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (std::size_t b = a + 1; b < vectors.size(); ++b) {
      Cyclotomic amp;
      for (std::size_t i = 0; i < n; ++i)
        if (vectors[a][i]) amp += Cyclotomic(to_rational(vectors[a][i])) * projected[b][i];
      if (amp.is_zero()) result.pairs.emplace_back(vectors[a], vectors[b]);
    }
  std::sort(result.pairs.begin(), result.pairs.end());

  std::set<std::pair<NaturalVector, NaturalVector>> orbits;
  for (const auto& [m, v] : result.pairs) orbits.insert(detail::orbit_key(p.action(), m, v));
  result.orbit_count = orbits.size();
  return result;
}

inline InterferenceResult find_interference(const IsotypicProjector& p, std::uint64_t bound) {
  InterferenceOptions options;
  options.bound = bound;
  return find_interference(p, options);
}

// ---------------------------------------------------------------------------
// Observables in the group algebra.

/// A = sum_g alpha_g rho(g) in the natural action of the group.
class Observable {
 public:
  Observable(PermGroup group, const std::map<Permutation, Cyclotomic>& coeffs)
      : group_(std::move(group)), coeffs_(group_.order()) {
    for (const auto& [g, alpha] : coeffs) {
      auto idx = group_.index_of(g);
      if (!idx) throw Error(ErrorKind::invalid_argument, "observable key " + g.to_string() + " not in group");
      coeffs_[*idx] = alpha;
    }
    const std::size_t n = group_.degree();
    matrix_ = CycloMatrix(n, n);
    hermitian_ = true;
    for (std::size_t e = 0; e < group_.order(); ++e) {
      if (conj(coeffs_[e]) != coeffs_[group_.inverse_index(e)]) hermitian_ = false;
      if (coeffs_[e].is_zero()) continue;
      const Permutation& g = group_.element(e);
      for (std::size_t i = 0; i < n; ++i) matrix_(i, g.image0(i)) += coeffs_[e];
    }
  }

  const PermGroup& group() const noexcept { return group_; }
  const CycloMatrix& matrix() const noexcept { return matrix_; }
  bool is_hermitian() const noexcept { return hermitian_; }
  const Cyclotomic& coefficient(std::size_t element_index) const { return coeffs_.at(element_index); }

  std::vector<Cyclotomic> apply(const NaturalVector& v) const {
    const std::size_t n = matrix_.rows();
    if (v.size() != n) throw Error(ErrorKind::degree_mismatch, "vector length differs from observable size");
    std::vector<Cyclotomic> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] && !matrix_(i, j).is_zero()) out[i] += Cyclotomic(to_rational(v[j])) * matrix_(i, j);
    return out;
  }

 private:
  PermGroup group_;
  std::vector<Cyclotomic> coeffs_;  // by element index
  CycloMatrix matrix_;
  bool hermitian_ = false;
};

inline Observable observable(const PermGroup& g, const std::map<Permutation, Cyclotomic>& coeffs) {
  return Observable(g, coeffs);
}

namespace detail {

inline Cyclotomic hermitian_inner(const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
  Cyclotomic s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += conj(x[i]) * y[i];
  return s;
}

}  // namespace detail

/// <n|A|n> / <n|n> for hermitian A.
inline Cyclotomic expectation(const Observable& a, const NaturalVector& n) {
  if (!a.is_hermitian()) throw Error(ErrorKind::not_hermitian, "expectation needs a hermitian observable");
  detail::require_nonzero(n, "n");
  auto an = a.apply(n);
  Cyclotomic num;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i]) num += Cyclotomic(to_rational(n[i])) * an[i];
  return num / Cyclotomic(detail::dot(n, n));
}

struct UncertaintyReport {
  Cyclotomic norm_a;      // <An|An>
  Cyclotomic norm_b;      // <Bn|Bn>
  Cyclotomic overlap;     // <An|Bn>
  Cyclotomic difference;  // norm_a norm_b - |overlap|^2
  Sign sign = Sign::zero;
  std::optional<Cyclotomic> probability;  // |overlap|^2 / (norm_a norm_b) when defined
  bool probability_at_most_one = true;

  bool holds() const { return sign != Sign::negative && probability_at_most_one; }
};

inline UncertaintyReport uncertainty_check(const Observable& a, const Observable& b,
                                           const NaturalVector& n) {
  detail::require_nonzero(n, "n");
  auto an = a.apply(n), bn = b.apply(n);
  UncertaintyReport r;
  r.norm_a = detail::hermitian_inner(an, an);
  r.norm_b = detail::hermitian_inner(bn, bn);
  r.overlap = detail::hermitian_inner(an, bn);
  Cyclotomic overlap_sq = r.overlap * conj(r.overlap);
  r.difference = r.norm_a * r.norm_b - overlap_sq;
  r.sign = sign_of_real(r.difference);
  if (!r.norm_a.is_zero() && !r.norm_b.is_zero()) {
    r.probability = overlap_sq / (r.norm_a * r.norm_b);
    r.probability_at_most_one = sign_of_real(Cyclotomic(1) - *r.probability) != Sign::negative;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subspace tags.

/// Resolves a subspace tag to a projector for the given action:
/// "full", "trivial", "standard", a row label such as "3'", a '+'-joined
/// list of labels, or one of the aliases irr3, irr3prime, irr5,
/// irr3plus3prime, trivial-<N>, standard-<N>.
inline IsotypicProjector subspace_projector(const std::string& tag, const GroupAction& action,
                                            const CharacterTable& table) {
  auto suffix_n = [&](const std::string& prefix) -> bool {
    if (tag.rfind(prefix, 0) != 0) return false;
    std::string rest = tag.substr(prefix.size());
    if (rest.empty() || rest.size() > 9 ||
        !std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorKind::invalid_argument, "bad subspace tag " + tag);
    if (std::stoul(rest) != action.degree())
      throw Error(ErrorKind::invalid_argument,
                  "subspace tag " + tag + " does not match degree " + std::to_string(action.degree()));
    return true;
  };
  if (tag == "full") return full_space_projector(action);
  if (tag == "trivial" || suffix_n("trivial-"))
    return isotypic_projector(action, table, table.trivial_row());
  if (tag == "standard" || suffix_n("standard-")) return nontrivial_projector(action, table);

  static const std::map<std::string, std::string> aliases{
      {"irr3", "3"}, {"irr3prime", "3'"}, {"irr5", "5"}, {"irr3plus3prime", "3+3'"}};
  std::string spec = tag;
  if (auto it = aliases.find(tag); it != aliases.end()) spec = it->second;
  std::vector<std::size_t> rows;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = spec.find('+', start);
    std::string label = spec.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    auto row = table.row_by_label(label);
    if (!row) throw Error(ErrorKind::invalid_argument, "unknown subspace label '" + label + "' in " + tag);
    rows.push_back(*row);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return combined_projector(action, table, std::move(rows));
}

}  // namespace permuton
