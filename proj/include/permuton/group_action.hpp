#pragma once

/**
 * @file group_action.hpp
 * @brief Right actions of a PermGroup on finite labeled sets, coset actions,
 * imprimitivity block systems and Cayley graphs.
 */

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permuton/errors.hpp"
#include "permuton/perm_group.hpp"
#include "permuton/permutation.hpp"

namespace permuton {

/// A right action of `group` on points 1..N: each group element (by index)
/// carries its image permutation. apply(g*h, p) == apply(h, apply(g, p)).
class GroupAction {
 public:
  GroupAction(PermGroup group, std::vector<Permutation> images,
              std::vector<std::string> labels = {})
      : group_(std::move(group)), images_(std::move(images)), labels_(std::move(labels)) {
    if (images_.size() != group_.order())
      throw Error(ErrorKind::invalid_argument, "one image per group element required");
    const std::size_t n = images_.front().degree();
    for (const auto& p : images_)
      if (p.degree() != n) throw Error(ErrorKind::degree_mismatch, "action images differ in degree");
    if (labels_.empty())
      for (std::size_t i = 1; i <= n; ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != n)
      throw Error(ErrorKind::invalid_argument, "one label per point required");
  }

  /// The group acting on {1..degree} by its own permutations.
  static GroupAction natural(const PermGroup& g) {
    return GroupAction(g, std::vector<Permutation>(g.elements().begin(), g.elements().end()));
  }

  const PermGroup& group() const noexcept { return group_; }
  std::size_t degree() const { return images_.front().degree(); }
  const Permutation& image(std::size_t element_index) const { return images_.at(element_index); }
  std::size_t apply(std::size_t element_index, std::size_t point) const {
    return images_.at(element_index)(point);
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::vector<Permutation> generator_images() const {
    std::vector<Permutation> out;
    for (std::size_t idx : group_.generator_indices()) out.push_back(images_[idx]);
    return out;
  }

  std::vector<std::vector<std::size_t>> orbits() const {
    const std::size_t n = degree();
    auto gens = generator_images();
    std::vector<bool> seen(n + 1, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t p = 1; p <= n; ++p) {
      if (seen[p]) continue;
      std::vector<std::size_t> orbit{p};
      seen[p] = true;
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (const auto& g : gens) {
          std::size_t r = g(orbit[q]);
          if (!seen[r]) {
            seen[r] = true;
            orbit.push_back(r);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
    return out;
  }

  bool is_transitive() const { return orbits().size() == 1; }

 private:
  PermGroup group_;
  std::vector<Permutation> images_;
  std::vector<std::string> labels_;
};

/// Action of G on the right cosets Hg (numbered in discovery order of their
/// first element). With H = {id} this is the regular action.
inline GroupAction coset_action(const PermGroup& g, std::span<const Permutation> subgroup) {
  if (subgroup.empty()) throw Error(ErrorKind::not_subgroup, "empty subgroup");
  std::vector<std::size_t> h;
  for (const auto& p : subgroup) {
    auto idx = g.index_of(p);
    if (!idx) throw Error(ErrorKind::not_subgroup, "subgroup element " + p.to_string() + " not in group");
    h.push_back(*idx);
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  std::unordered_set<std::size_t> hset(h.begin(), h.end());
  if (!hset.count(0)) throw Error(ErrorKind::not_subgroup, "subgroup lacks the identity");
  for (std::size_t a : h)
    for (std::size_t b : h)
      if (!hset.count(g.multiply(a, b)))
        throw Error(ErrorKind::not_subgroup, "subset is not closed under composition");

  std::vector<std::size_t> coset_of(g.order(), SIZE_MAX);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != SIZE_MAX) continue;
    for (std::size_t a : h) coset_of[g.multiply(a, x)] = reps.size();
    reps.push_back(x);
  }
  std::vector<Permutation> images;
  images.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset_of[g.multiply(reps[c], x)] + 1;
    images.push_back(Permutation::from_images(img));
  }
  std::vector<std::string> labels;
  for (std::size_t r : reps) labels.push_back("H*" + g.element(r).to_string());
  return GroupAction(g, std::move(images), std::move(labels));
}

/// A partition of {1..N} into cells of equal size.
struct BlockSystem {
  std::vector<std::vector<std::size_t>> cells;  // each sorted; cells sorted by first point

  std::size_t block_size() const { return cells.empty() ? 0 : cells.front().size(); }

  /// True iff p maps every cell onto some cell.
  bool invariant_under(const Permutation& p) const {
    std::vector<std::size_t> cell_of(p.degree() + 1, SIZE_MAX);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (std::size_t x : cells[c]) cell_of[x] = c;
    for (const auto& cell : cells) {
      std::size_t target = cell_of[p(cell.front())];
      for (std::size_t x : cell)
        if (cell_of[p(x)] != target) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += "|";
      for (std::size_t k = 0; k < cells[c].size(); ++k) {
        if (k) out += ",";
        out += std::to_string(cells[c][k]);
      }
    }
    return out + "}";
  }

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
  friend auto operator<=>(const BlockSystem&, const BlockSystem&) = default;
};

namespace detail {

// Finest block system in which points 1 and `beta` share a cell.
inline BlockSystem minimal_block_system(std::span<const Permutation> gens, std::size_t n,
                                        std::size_t beta) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> queue{{0, beta - 1}};
  parent[find(beta - 1)] = find(0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [a, b] = queue[q];
    for (const auto& g : gens) {
      std::size_t x = find(g.image0(a)), y = find(g.image0(b));
      if (x == y) continue;
      parent[y] = x;
      queue.emplace_back(x, y);
    }
  }
  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i + 1);
  BlockSystem bs;
  for (auto& cell : by_root)
    if (!cell.empty()) bs.cells.push_back(std::move(cell));
  std::sort(bs.cells.begin(), bs.cells.end());
  return bs;
}

inline bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  std::vector<std::size_t> cell_of;
  for (std::size_t c = 0; c < coarse.cells.size(); ++c)
    for (std::size_t x : coarse.cells[c]) {
      if (cell_of.size() <= x) cell_of.resize(x + 1, SIZE_MAX);
      cell_of[x] = c;
    }
  for (const auto& cell : fine.cells)
    for (std::size_t x : cell)
      if (cell_of[x] != cell_of[cell.front()]) return false;
  return true;
}

}  // namespace detail

/// All minimal nontrivial block systems of a transitive action; empty iff
/// the action is primitive.
inline std::vector<BlockSystem> blocks(const GroupAction& action) {
  if (!action.is_transitive())
    throw Error(ErrorKind::intransitive, "block systems need a transitive action");
  const std::size_t n = action.degree();
  auto gens = action.generator_images();
  std::vector<BlockSystem> found;
  for (std::size_t beta = 2; beta <= n; ++beta) {
    BlockSystem bs = detail::minimal_block_system(gens, n, beta);
    if (bs.cells.size() == 1) continue;
    if (std::find(found.begin(), found.end(), bs) == found.end()) found.push_back(std::move(bs));
  }
  std::vector<BlockSystem> minimal;
  for (const auto& s : found) {
    bool has_finer = std::any_of(found.begin(), found.end(), [&](const BlockSystem& t) {
      return t != s && t.block_size() < s.block_size() && detail::refines(t, s);
    });
    if (!has_finer) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
    return a.cells < b.cells;
  });
  return minimal;
}

/// Undirected Cayley graph: vertices are element indices, edges {g, g*s}.
class CayleyGraph {
 public:
  CayleyGraph(PermGroup group, std::vector<Permutation> generators)
      : group_(std::move(group)), generators_(std::move(generators)) {
    if (!group_.generated_by(generators_))
      throw Error(ErrorKind::not_generating, "Cayley graph generators do not generate the group");
    const std::size_t n = group_.order();
    adjacency_.resize(n);
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& s : generators_) {
        std::size_t w = *group_.index_of(group_.element(v) * s);
        if (w == v) continue;
        auto e = std::minmax(v, w);
        edges_.emplace_back(e.first, e.second);
      }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [a, b] : edges_) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  }

  std::size_t vertex_count() const { return group_.order(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  /// Common vertex degree, or 0 if the graph is not regular.
  std::size_t regular_degree() const {
    std::size_t d = adjacency_.front().size();
    for (const auto& adj : adjacency_)
      if (adj.size() != d) return 0;
    return d;
  }

  /// Number of distinct closed walks obtained by repeating `word` (letters
  /// index the generators) from every vertex, identified up to shifting by
  /// whole repetitions. Equals |G| / order(product of the word).
  std::size_t closed_walk_count(std::span<const std::size_t> word) const {
    const std::size_t n = group_.order();
    std::vector<bool> visited(n, false);
    std::size_t count = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (visited[start]) continue;
      ++count;
      std::size_t cur = start;
      do {
        visited[cur] = true;
        for (std::size_t letter : word)
          cur = *group_.index_of(group_.element(cur) * generators_.at(letter));
      } while (cur != start);
    }
    return count;
  }

 private:
  PermGroup group_;
  std::vector<Permutation> generators_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

inline CayleyGraph cayley_graph(const PermGroup& g, std::vector<Permutation> generators) {
  return CayleyGraph(g, std::move(generators));
}

}  // namespace permuton
