#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of {1..N} and disjoint-cycle notation.
 *
 * Points are 1-based in the public interface. Composition follows the right
 * action convention: `p * q` applies p first, then q, so the image of a
 * point s under p * q is (s p) q.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "permuton/errors.hpp"

namespace permuton {

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), 0u);
    return p;
  }

  /// images[i] is the image of point i+1 (1-based values). Must be a bijection.
  static Permutation from_images(const std::vector<std::size_t>& images) {
    Permutation p;
    p.img_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::size_t v = images[i];
      if (v < 1 || v > images.size() || seen[v - 1])
        throw Error(ErrorKind::invalid_argument, "images do not form a bijection");
      seen[v - 1] = true;
      p.img_[i] = static_cast<std::uint32_t>(v - 1);
    }
    return p;
  }

  std::size_t degree() const noexcept { return img_.size(); }

  /// Image of a 1-based point.
  std::size_t operator()(std::size_t point) const { return img_.at(point - 1) + 1; }

  /// 0-based image of a 0-based point.
  std::uint32_t image0(std::size_t point0) const { return img_[point0]; }

  std::vector<std::size_t> images() const {
    std::vector<std::size_t> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw Error(ErrorKind::degree_mismatch,
                  "cannot compose permutations of degree " +
                      std::to_string(p.degree()) + " and " +
                      std::to_string(q.degree()));
    Permutation r;
    r.img_.resize(p.img_.size());
    for (std::size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = q.img_[p.img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      r.img_[img_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  Permutation pow(long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Permutation acc = identity(degree());
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Cycles of length >= 2, each starting at its smallest point, sorted.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> cyc;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        cyc.push_back(j + 1);
      }
      if (cyc.size() > 1) out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Multiset of cycle lengths including fixed points, ascending.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::size_t order() const {
    std::size_t l = 1;
    for (std::size_t len : cycle_type()) l = std::lcm(l, len);
    return l;
  }

  std::size_t fixed_points() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) n += img_[i] == i;
    return n;
  }

  std::string to_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string out;
    for (const auto& c : cyc) {
      out += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(c[k]);
      }
      out += ')';
    }
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : img_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::vector<std::uint32_t> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

/// Parses disjoint cycle notation such as "(1,2)(3,4,5)"; "()" is the identity.
/// `offset` is added to reported error positions.
inline Permutation parse_cycles(std::string_view text, std::size_t degree,
                                std::size_t offset = 0) {
  if (degree == 0) throw ParseError("degree must be positive", offset);
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::vector<bool> used(degree + 1, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty cycle notation", offset + i);
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", offset + i);
    ++i;
    skip_ws();
    std::vector<std::size_t> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected point number", offset + start);
      if (i - start > 9) throw ParseError("point number too large", offset + start);
      std::size_t pt = std::stoul(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > degree)
        throw ParseError("point " + std::to_string(pt) + " out of range 1.." +
                             std::to_string(degree),
                         offset + start);
      if (used[pt]) throw ParseError("repeated point " + std::to_string(pt), offset + start);
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'", offset + i);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation::from_images(images);
}

}  // namespace permuton

template <>
struct std::hash<permuton::Permutation> {
  std::size_t operator()(const permuton::Permutation& p) const noexcept {
    return p.hash();
  }
};
