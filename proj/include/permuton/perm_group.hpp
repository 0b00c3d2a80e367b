#pragma once

/**
 * @file perm_group.hpp
 * @brief Finitely generated permutation groups enumerated by closure.
 *
 * Groups are small enough to list (a configurable cap, default 10^6
 * elements). Elements appear in breadth-first discovery order from the
 * identity using the generators in sorted order, so every derived listing is
 * reproducible. A PermGroup is a cheap handle onto immutable shared data;
 * the conjugacy classes are computed once on first use and are safe to read
 * from several threads.
 */

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permuton/errors.hpp"
#include "permuton/permutation.hpp"

namespace permuton {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Reads PERMUTON_ELEMENT_CAP, falling back to kDefaultElementCap.
inline std::size_t default_element_cap() {
  if (const char* env = std::getenv("PERMUTON_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultElementCap;
}

struct ClosureOptions {
  std::size_t element_cap = default_element_cap();
};

struct ConjugacyClass {
  Permutation representative;         // lexicographically smallest member
  std::vector<std::size_t> members;   // element indices, ascending
  std::size_t element_order = 1;

  std::size_t size() const noexcept { return members.size(); }
};

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;

  mutable std::once_flag classes_once;
  mutable std::vector<ConjugacyClass> classes;
  mutable std::vector<std::size_t> class_of;
};

}  // namespace detail

class PermGroup {
 public:
  std::size_t degree() const { return d_->degree; }
  std::size_t order() const { return d_->elements.size(); }

  /// Generators in the order they were supplied.
  std::span<const Permutation> generators() const { return d_->generators; }
  std::span<const Permutation> elements() const { return d_->elements; }
  const Permutation& element(std::size_t i) const { return d_->elements.at(i); }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = d_->index.find(p);
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Permutation& p) const { return d_->index.count(p) != 0; }

  /// Index of element(i) * element(j).
  std::size_t multiply(std::size_t i, std::size_t j) const {
    return d_->index.at(element(i) * element(j));
  }

  std::size_t inverse_index(std::size_t i) const {
    return d_->index.at(element(i).inverse());
  }

  const std::vector<ConjugacyClass>& conjugacy_classes() const {
    std::call_once(d_->classes_once, [this] { compute_classes(); });
    return d_->classes;
  }

  std::size_t class_of(std::size_t element_index) const {
    conjugacy_classes();
    return d_->class_of.at(element_index);
  }

  /// lcm of all element orders.
  std::size_t exponent() const {
    std::size_t e = 1;
    for (const auto& c : conjugacy_classes()) e = std::lcm(e, c.element_order);
    return e;
  }

  std::vector<std::size_t> generator_indices() const {
    std::vector<std::size_t> out;
    for (const auto& g : d_->generators) out.push_back(d_->index.at(g));
    return out;
  }

  /// Same group: shared data, or identical degree and element listing.
  bool same_as(const PermGroup& o) const {
    return d_ == o.d_ || (degree() == o.degree() && d_->elements == o.d_->elements);
  }

  /// True iff `subset` generates exactly this group.
  bool generated_by(std::span<const Permutation> subset) const;

  friend PermGroup closure(std::vector<Permutation> generators,
                           ClosureOptions options);

 private:
  explicit PermGroup(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}

  void compute_classes() const {
    const auto& els = d_->elements;
    std::vector<std::size_t> assigned(els.size(), SIZE_MAX);
    std::vector<ConjugacyClass> classes;
    std::vector<Permutation> gen_inverses;
    for (const auto& g : d_->generators) gen_inverses.push_back(g.inverse());
    for (std::size_t start = 0; start < els.size(); ++start) {
      if (assigned[start] != SIZE_MAX) continue;
      ConjugacyClass cls;
      std::vector<std::size_t> queue{start};
      assigned[start] = classes.size();
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const Permutation& x = els[queue[q]];
        for (std::size_t g = 0; g < d_->generators.size(); ++g) {
          std::size_t y = d_->index.at(gen_inverses[g] * x * d_->generators[g]);
          if (assigned[y] == SIZE_MAX) {
            assigned[y] = classes.size();
            queue.push_back(y);
          }
        }
      }
      std::sort(queue.begin(), queue.end());
      cls.members = std::move(queue);
      cls.representative = els[cls.members.front()];
      for (std::size_t m : cls.members)
        if (els[m] < cls.representative) cls.representative = els[m];
      cls.element_order = cls.representative.order();
      classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const ConjugacyClass& a, const ConjugacyClass& b) {
                if (a.element_order != b.element_order)
                  return a.element_order < b.element_order;
                return a.representative < b.representative;
              });
    std::vector<std::size_t> class_of(els.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t m : classes[c].members) class_of[m] = c;
    d_->classes = std::move(classes);
    d_->class_of = std::move(class_of);
  }

  std::shared_ptr<const detail::GroupData> d_;
};

/// Breadth-first closure of the generators. Throws cap_exceeded beyond
/// options.element_cap elements.
inline PermGroup closure(std::vector<Permutation> generators,
                         ClosureOptions options = {}) {
  if (generators.empty())
    throw Error(ErrorKind::invalid_argument, "closure needs at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::degree_mismatch, "generators have different degrees");

  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->generators = generators;

  std::vector<Permutation> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  d->elements.push_back(Permutation::identity(degree));
  d->index.emplace(d->elements.front(), 0);
  for (std::size_t i = 0; i < d->elements.size(); ++i) {
    for (const auto& s : sorted) {
      Permutation y = d->elements[i] * s;
      if (d->index.count(y)) continue;
      if (d->elements.size() >= options.element_cap)
        throw Error(ErrorKind::cap_exceeded,
                    "group exceeds element cap of " +
                        std::to_string(options.element_cap));
      d->index.emplace(y, d->elements.size());
      d->elements.push_back(std::move(y));
    }
  }
  return PermGroup(std::move(d));
}

inline bool PermGroup::generated_by(std::span<const Permutation> subset) const {
  if (subset.empty()) return order() == 1;
  for (const auto& s : subset)
    if (!contains(s)) return false;
  ClosureOptions opts;
  opts.element_cap = order();
  try {
    return closure(std::vector<Permutation>(subset.begin(), subset.end()), opts)
               .order() == order();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::cap_exceeded) return false;
    throw;
  }
}

/// V x G acting on the disjoint union of both domains (V's points first).
inline PermGroup direct_product(const PermGroup& v, const PermGroup& g,
                                ClosureOptions options = {}) {
  const std::size_t dv = v.degree(), dg = g.degree();
  std::vector<Permutation> gens;
  for (const auto& a : v.generators()) {
    std::vector<std::size_t> img(dv + dg);
    for (std::size_t i = 1; i <= dv; ++i) img[i - 1] = a(i);
    for (std::size_t i = 1; i <= dg; ++i) img[dv + i - 1] = dv + i;
    gens.push_back(Permutation::from_images(img));
  }
  for (const auto& b : g.generators()) {
    std::vector<std::size_t> img(dv + dg);
    for (std::size_t i = 1; i <= dv; ++i) img[i - 1] = i;
    for (std::size_t i = 1; i <= dg; ++i) img[dv + i - 1] = dv + b(i);
    gens.push_back(Permutation::from_images(img));
  }
  return closure(std::move(gens), options);
}

/// V wr_X G: X copies of V's domain (block b holds points b*deg(V)+1 ...),
/// the base group V^X acting blockwise and G permuting the blocks.
inline PermGroup wreath_product(const PermGroup& v, const PermGroup& g,
                                std::size_t x_size, ClosureOptions options = {}) {
  if (g.degree() != x_size)
    throw Error(ErrorKind::degree_mismatch,
                "top group degree " + std::to_string(g.degree()) +
                    " does not match X size " + std::to_string(x_size));
  const std::size_t dv = v.degree();
  const std::size_t n = dv * x_size;
  std::vector<Permutation> gens;
  for (std::size_t block = 0; block < x_size; ++block)
    for (const auto& a : v.generators()) {
      std::vector<std::size_t> img(n);
      std::iota(img.begin(), img.end(), std::size_t{1});
      for (std::size_t i = 1; i <= dv; ++i) img[block * dv + i - 1] = block * dv + a(i);
      gens.push_back(Permutation::from_images(img));
    }
  for (const auto& t : g.generators()) {
    std::vector<std::size_t> img(n);
    for (std::size_t block = 0; block < x_size; ++block)
      for (std::size_t i = 1; i <= dv; ++i)
        img[block * dv + i - 1] = (t(block + 1) - 1) * dv + i;
    gens.push_back(Permutation::from_images(img));
  }
  return closure(std::move(gens), options);
}

/// Line-oriented group definition: `degree N`, then `gen <cycles>` lines.
struct GroupDefinition {
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  std::string to_text() const {
    std::string out = "degree " + std::to_string(degree) + "\n";
    for (const auto& g : generators) out += "gen " + g.to_string() + "\n";
    return out;
  }
};

inline GroupDefinition parse_group_definition(std::string_view text) {
  GroupDefinition def;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    std::size_t e = line.size();
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    if (b == e) continue;
    std::string_view body = line.substr(b, e - b);
    std::size_t sp = 0;
    while (sp < body.size() && !std::isspace(static_cast<unsigned char>(body[sp]))) ++sp;
    std::string_view keyword = body.substr(0, sp);
    std::size_t arg_start = sp;
    while (arg_start < body.size() &&
           std::isspace(static_cast<unsigned char>(body[arg_start])))
      ++arg_start;
    std::string_view arg = body.substr(arg_start);
    if (keyword == "degree") {
      if (def.degree != 0) throw ParseError("duplicate degree line", b, line_no);
      std::size_t k = 0;
      while (k < arg.size() && std::isdigit(static_cast<unsigned char>(arg[k]))) ++k;
      if (k == 0 || k != arg.size() || k > 9)
        throw ParseError("degree expects a positive integer", b + arg_start, line_no);
      def.degree = std::stoul(std::string(arg));
      if (def.degree == 0)
        throw ParseError("degree must be positive", b + arg_start, line_no);
    } else if (keyword == "gen") {
      if (def.degree == 0)
        throw ParseError("'gen' before 'degree'", b, line_no);
      try {
        def.generators.push_back(parse_cycles(arg, def.degree));
      } catch (const ParseError& err) {
        throw ParseError(err.message(), b + arg_start + err.position(), line_no);
      }
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", b, line_no);
    }
  }
  if (def.degree == 0) throw ParseError("missing 'degree' line", 0, line_no);
  if (def.generators.empty())
    def.generators.push_back(Permutation::identity(def.degree));
  return def;
}

inline PermGroup closure(const GroupDefinition& def, ClosureOptions options = {}) {
  return closure(def.generators, options);
}

}  // namespace permuton
