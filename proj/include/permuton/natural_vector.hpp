#pragma once

/**
 * @file natural_vector.hpp
 * @brief State vectors whose components are natural "population numbers".
 */

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permuton/errors.hpp"
#include "permuton/permutation.hpp"
#include "permuton/rational.hpp"

namespace permuton {

class NaturalVector {
 public:
  NaturalVector() = default;
  explicit NaturalVector(std::vector<std::uint64_t> components)
      : c_(std::move(components)) {}
  NaturalVector(std::initializer_list<std::uint64_t> components) : c_(components) {}

  static NaturalVector zero(std::size_t n) { return NaturalVector(std::vector<std::uint64_t>(n, 0)); }

  std::size_t size() const noexcept { return c_.size(); }
  std::uint64_t operator[](std::size_t i) const { return c_[i]; }
  const std::vector<std::uint64_t>& components() const noexcept { return c_; }

  bool is_zero() const {
    for (auto v : c_)
      if (v) return false;
    return true;
  }

  /// Vector with components permuted by the right action: (v.g)_{i g} = v_i.
  NaturalVector permuted(const Permutation& g) const {
    if (g.degree() != c_.size())
      throw Error(ErrorKind::degree_mismatch, "vector length differs from permutation degree");
    std::vector<std::uint64_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[g.image0(i)] = c_[i];
    return NaturalVector(std::move(out));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c_[i]);
    }
    return out;
  }

  friend bool operator==(const NaturalVector&, const NaturalVector&) = default;
  friend auto operator<=>(const NaturalVector&, const NaturalVector&) = default;

 private:
  std::vector<std::uint64_t> c_;
};

/// Parses a comma-separated list of naturals such as "1,1,2".
inline NaturalVector parse_natural_vector(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected natural number", start);
    if (i - start > 18) throw ParseError("component too large", start);
    out.push_back(std::stoull(std::string(text.substr(start, i - start))));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return NaturalVector(std::move(out));
}

inline Rational to_rational(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return Rational(z);
}

}  // namespace permuton
