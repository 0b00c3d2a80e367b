#pragma once

/**
 * @file character_table.hpp
 * @brief Exact character tables of permutation groups.
 *
 * Tables for S3 and A5 are built in and returned whenever a group is
 * recognized by its order and class structure. Every other group goes
 * through the Burnside-Dixon method: common eigenvectors of the class
 * multiplication matrices are found modulo a prime p = 1 (mod exponent),
 * and each character value is lifted back to Q(z_e) from the eigenvalue
 * multiplicities of the class representative.
 *
 * Columns always follow PermGroup::conjugacy_classes(). Rows are ordered
 * trivial first, then by degree, then by values (descending in the
 * canonical order of cyclotomics).
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permuton/cyclotomic.hpp"
#include "permuton/errors.hpp"
#include "permuton/perm_group.hpp"

namespace permuton {

struct CharacterTable {
  enum class Source { builtin, dixon, file };

  PermGroup group;
  std::vector<std::vector<Cyclotomic>> rows;  // rows[i][class index]
  std::vector<std::size_t> dims;
  std::vector<std::string> labels;            // "1", "1'", "2", "3", "3'", ...
  Source source = Source::builtin;

  std::size_t size() const { return rows.size(); }

  /// Character value of row `row` at the group element with this index.
  const Cyclotomic& value(std::size_t row, std::size_t element_index) const {
    return rows.at(row).at(group.class_of(element_index));
  }

  std::optional<std::size_t> row_by_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    return std::nullopt;
  }

  std::size_t trivial_row() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (std::all_of(rows[i].begin(), rows[i].end(),
                      [](const Cyclotomic& v) { return v == Cyclotomic(1); }))
        return i;
    throw Error(ErrorKind::consistency, "character table has no trivial row");
  }
};

/// Degree-based names: the k-th row of degree d gets d followed by k-1 primes.
inline std::vector<std::string> degree_labels(const std::vector<std::size_t>& dims) {
  std::vector<std::string> out;
  std::vector<std::size_t> seen;
  for (std::size_t d : dims) {
    if (seen.size() <= d) seen.resize(d + 1, 0);
    out.push_back(std::to_string(d) + std::string(seen[d]++, '\''));
  }
  return out;
}

/// Problems found in a table: orthogonality, degrees, shape. Empty if valid.
inline std::vector<std::string> check_character_table(const CharacterTable& t) {
  std::vector<std::string> problems;
  const auto& classes = t.group.conjugacy_classes();
  const std::size_t r = classes.size();
  if (t.rows.size() != r) {
    problems.push_back("expected " + std::to_string(r) + " rows, got " +
                       std::to_string(t.rows.size()));
    return problems;
  }
  for (const auto& row : t.rows)
    if (row.size() != r) {
      problems.push_back("row length differs from class count");
      return problems;
    }
  const Cyclotomic order(static_cast<long>(t.group.order()));
  std::size_t dim_square_sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (t.rows[i][0] != Cyclotomic(static_cast<long>(t.dims.at(i))))
      problems.push_back("row " + std::to_string(i) + " degree mismatch");
    dim_square_sum += t.dims[i] * t.dims[i];
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic s;
      for (std::size_t c = 0; c < r; ++c)
        s += Cyclotomic(static_cast<long>(classes[c].size())) * t.rows[i][c] *
             conj(t.rows[j][c]);
      if (s != (i == j ? order : Cyclotomic(0)))
        problems.push_back("rows " + std::to_string(i) + "," + std::to_string(j) +
                           " violate orthogonality");
    }
  }
  if (dim_square_sum != t.group.order())
    problems.push_back("sum of squared degrees is not the group order");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < r; ++i) s += t.rows[i][a] * conj(t.rows[i][b]);
      Cyclotomic expected =
          a == b ? Cyclotomic(make_rational(static_cast<long>(t.group.order()),
                                       static_cast<long>(classes[a].size())))
                 : Cyclotomic(0);
      if (s != expected)
        problems.push_back("columns " + std::to_string(a) + "," + std::to_string(b) +
                           " violate orthogonality");
    }
  return problems;
}

namespace detail {

inline void sort_rows(std::vector<std::vector<Cyclotomic>>& rows) {
  auto is_trivial = [](const std::vector<Cyclotomic>& row) {
    return std::all_of(row.begin(), row.end(),
                       [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    auto da = a[0].as_rational(), db = b[0].as_rational();
    if (*da != *db) return *da < *db;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == b[k]) continue;
      return canonical_less(b[k], a[k]);
    }
    return false;
  });
}

inline CharacterTable finish_table(const PermGroup& g,
                                   std::vector<std::vector<Cyclotomic>> rows,
                                   CharacterTable::Source source,
                                   std::vector<std::string> labels = {}) {
  CharacterTable t{g, std::move(rows), {}, {}, source};
  for (const auto& row : t.rows) {
    auto d = row.at(0).as_rational();
    if (!d || !is_integer(*d) || *d <= 0)
      throw Error(ErrorKind::consistency, "character degree is not a positive integer");
    t.dims.push_back(d->get_num().get_ui());
  }
  t.labels = labels.empty() ? degree_labels(t.dims) : std::move(labels);
  return t;
}

inline std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::size_t> class_sizes(const PermGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.conjugacy_classes()) out.push_back(c.size());
  return out;
}

inline std::vector<std::size_t> class_orders(const PermGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.conjugacy_classes()) out.push_back(c.element_order);
  return out;
}

}  // namespace detail

/// Index of the class that fixes the 3 / 3' naming of A5: the class of the
/// first generator of order 5, else of the first order-5 element.
inline std::size_t a5_reference_class(const PermGroup& g) {
  for (const auto& gen : g.generators())
    if (gen.order() == 5) return g.class_of(*g.index_of(gen));
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i).order() == 5) return g.class_of(i);
  throw Error(ErrorKind::consistency, "group has no element of order 5");
}

/// Built-in table when g is recognized as S3 or A5.
inline std::optional<CharacterTable> builtin_character_table(const PermGroup& g) {
  const auto sizes = detail::class_sizes(g);
  const auto orders = detail::class_orders(g);
  if (g.order() == 6 && sizes == std::vector<std::size_t>{1, 3, 2} &&
      orders == std::vector<std::size_t>{1, 2, 3}) {
    std::vector<std::vector<Cyclotomic>> rows = {
        {1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
    return detail::finish_table(g, std::move(rows), CharacterTable::Source::builtin);
  }
  if (g.order() == 60 && sizes == std::vector<std::size_t>{1, 15, 20, 12, 12} &&
      orders == std::vector<std::size_t>{1, 2, 3, 5, 5}) {
    const std::size_t ref = a5_reference_class(g);
    const std::size_t other = ref == 3 ? 4 : 3;
    const Cyclotomic phi = golden_ratio();
    const Cyclotomic phi_bar = Cyclotomic(1) - phi;
    std::vector<std::vector<Cyclotomic>> rows(5, std::vector<Cyclotomic>(5));
    rows[0] = {1, 1, 1, 1, 1};
    rows[1] = {3, -1, 0, 0, 0};
    rows[1][ref] = phi;
    rows[1][other] = phi_bar;
    rows[2] = {3, -1, 0, 0, 0};
    rows[2][ref] = phi_bar;
    rows[2][other] = phi;
    rows[3] = {4, 0, 1, -1, -1};
    rows[4] = {5, 1, -1, 0, 0};
    return detail::finish_table(g, std::move(rows), CharacterTable::Source::builtin,
                                {"1", "3", "3'", "4", "5"});
  }
  return std::nullopt;
}

struct DixonLimits {
  std::size_t max_classes = 30;
  std::size_t max_exponent = 120;
};

namespace detail {

using u64 = std::uint64_t;

inline u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

// Basis (as coefficient vectors over F_p) of the null space of an r x d matrix
// given column-wise.
inline std::vector<std::vector<u64>> null_space(std::vector<std::vector<u64>> cols,
                                                std::size_t r, u64 p) {
  const std::size_t d = cols.size();
  // row-major copy
  std::vector<std::vector<u64>> m(r, std::vector<u64>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < r; ++i) m[i][j] = cols[j][i];
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < d && row < r; ++c) {
    std::size_t piv = row;
    while (piv < r && m[piv][c] == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[piv], m[row]);
    u64 inv = mod_inv(m[row][c], p);
    for (std::size_t k = 0; k < d; ++k) m[row][k] = m[row][k] * inv % p;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t k = 0; k < d; ++k) m[i][k] = (m[i][k] + (p - f) * m[row][k]) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<u64>> basis;
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(d, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Burnside-Dixon character table. Throws unsupported_group beyond limits.
inline CharacterTable dixon_character_table(const PermGroup& g, DixonLimits limits = {}) {
  using detail::u64;
  const auto& classes = g.conjugacy_classes();
  const std::size_t r = classes.size();
  const std::size_t e = g.exponent();
  if (r > limits.max_classes)
    throw Error(ErrorKind::unsupported_group,
                "too many classes for Dixon (" + std::to_string(r) + ")");
  if (e > limits.max_exponent)
    throw Error(ErrorKind::unsupported_group,
                "group exponent too large for Dixon (" + std::to_string(e) + ")");
  const u64 order = g.order();

  u64 root_bound = 1;
  while (root_bound * root_bound <= order) ++root_bound;
  u64 p = e + 1;
  while (!(detail::is_prime(p) && p > 2 * root_bound && order % p != 0)) p += e;

  // class multiplication coefficients: mult[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<std::vector<std::vector<u64>>> mult(
      r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = *g.index_of(classes[k].representative);
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t y = g.multiply(g.inverse_index(x), z);
      ++mult[g.class_of(x)][g.class_of(y)][k];
    }
  }

  // split F_p^r into common eigenspaces of all M_i, M_i[j][k] = mult[i][j][k]
  std::vector<std::vector<std::vector<u64>>> spaces(1);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<u64> unit(r, 0);
    unit[i] = 1;
    spaces[0].push_back(unit);
  }
  for (std::size_t i = 1; i < r && spaces.size() < r; ++i) {
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      const std::size_t d = space.size();
      std::vector<std::vector<u64>> image(d, std::vector<u64>(r, 0));
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t j = 0; j < r; ++j) {
          u64 s = 0;
          for (std::size_t k = 0; k < r; ++k) s = (s + mult[i][j][k] % p * space[b][k]) % p;
          image[b][j] = s;
        }
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < p && covered < d; ++lambda) {
        std::vector<std::vector<u64>> cols(d, std::vector<u64>(r));
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t j = 0; j < r; ++j)
            cols[b][j] = (image[b][j] + (p - lambda) * space[b][j]) % p;
        auto kernel = detail::null_space(cols, r, p);
        if (kernel.empty()) continue;
        std::vector<std::vector<u64>> eigen;
        for (const auto& coeffs : kernel) {
          std::vector<u64> v(r, 0);
          for (std::size_t b = 0; b < d; ++b)
            for (std::size_t j = 0; j < r; ++j) v[j] = (v[j] + coeffs[b] * space[b][j]) % p;
          eigen.push_back(std::move(v));
        }
        covered += eigen.size();
        next.push_back(std::move(eigen));
      }
      if (covered != d)
        throw Error(ErrorKind::consistency, "class matrix not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw Error(ErrorKind::consistency, "class matrices do not separate the characters");

  // inverse classes and power maps
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k)
    inverse_class[k] = g.class_of(*g.index_of(classes[k].representative.inverse()));

  const u64 zeta = detail::mod_pow(detail::primitive_root(p), (p - 1) / e, p);
  const int conductor = static_cast<int>(e);

  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& space : spaces) {
    std::vector<u64> omega = space.front();
    if (omega[0] == 0) throw Error(ErrorKind::consistency, "eigenvector vanishes at identity");
    u64 norm = detail::mod_inv(omega[0], p);
    for (auto& w : omega) w = w * norm % p;

    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = (s + omega[k] * omega[inverse_class[k]] % p * detail::mod_inv(classes[k].size() % p, p)) % p;
    u64 dim_sq = order % p * detail::mod_inv(s, p) % p;
    u64 dim = 0;
    for (u64 cand = 1; cand * cand <= order; ++cand)
      if (cand * cand % p == dim_sq) {
        dim = cand;
        break;
      }
    if (dim == 0) throw Error(ErrorKind::consistency, "no integral character degree");

    std::vector<u64> values(r);
    for (std::size_t k = 0; k < r; ++k)
      values[k] = dim * omega[k] % p * detail::mod_inv(classes[k].size() % p, p) % p;

    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t o = classes[k].element_order;
      std::vector<std::size_t> power_class(o);
      for (std::size_t l = 0; l < o; ++l)
        power_class[l] = g.class_of(*g.index_of(classes[k].representative.pow(static_cast<long>(l))));
      std::vector<Rational> coeffs(e, 0);
      const u64 step = e / o;
      const u64 inv_o = detail::mod_inv(o % p, p);
      for (std::size_t t = 0; t < o; ++t) {
        const u64 j = t * step;
        u64 acc = 0;
        for (std::size_t l = 0; l < o; ++l) {
          u64 exp = (e - (j * l) % e) % e;
          acc = (acc + values[power_class[l]] * detail::mod_pow(zeta, exp, p)) % p;
        }
        u64 m = acc * inv_o % p;
        if (m > dim) throw Error(ErrorKind::consistency, "eigenvalue multiplicity out of range");
        coeffs[j] = static_cast<long>(m);
      }
      row.push_back(Cyclotomic::from_exponent_sum(conductor, coeffs));
    }
    rows.push_back(std::move(row));
  }
  detail::sort_rows(rows);
  CharacterTable t = detail::finish_table(g, std::move(rows), CharacterTable::Source::dixon);
  if (auto problems = check_character_table(t); !problems.empty())
    throw Error(ErrorKind::consistency, "Dixon table failed validation: " + problems.front());
  return t;
}

/// Built-in table for recognized groups, Burnside-Dixon otherwise.
inline CharacterTable character_table(const PermGroup& g, DixonLimits limits = {}) {
  if (auto t = builtin_character_table(g)) {
    if (auto problems = check_character_table(*t); !problems.empty())
      throw Error(ErrorKind::consistency, "built-in table failed validation: " + problems.front());
    return *t;
  }
  return dixon_character_table(g, limits);
}

/// File form: `classes: <sizes>` then one comma-separated row per irreducible.
inline std::string to_text(const CharacterTable& t) {
  std::string out = "classes:";
  const auto& classes = t.group.conjugacy_classes();
  for (std::size_t c = 0; c < classes.size(); ++c)
    out += (c ? ", " : " ") + std::to_string(classes[c].size());
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? ", " : "") + to_string(row[c]);
    out += "\n";
  }
  return out;
}

/// Parses a table for `g`. With `validate`, the table must be a genuine
/// character table (orthogonality, degrees); without it only the shape and
/// class sizes are checked.
inline CharacterTable parse_character_table(std::string_view text, const PermGroup& g,
                                            bool validate = true) {
  const auto sizes = detail::class_sizes(g);
  std::vector<std::vector<Cyclotomic>> rows;
  bool have_header = false;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::vector<std::pair<std::string_view, std::size_t>> fields;
    std::string_view body = line;
    std::size_t base = 0;
    if (!have_header) {
      auto colon = line.find(':');
      auto kw_start = line.find_first_not_of(" \t");
      if (colon == std::string_view::npos || line.substr(kw_start, colon - kw_start) != "classes")
        throw ParseError("expected 'classes:' header", kw_start, line_no);
      body = line.substr(colon + 1);
      base = colon + 1;
    }
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      std::size_t end = comma == std::string_view::npos ? body.size() : comma;
      fields.emplace_back(body.substr(start, end - start), base + start);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!have_header) {
      std::vector<std::size_t> got;
      for (auto [f, off] : fields) {
        try {
          Rational v = parse_rational(detail::trim(f));
          if (!is_integer(v) || v <= 0) throw ParseError("class size must be positive", 0);
          got.push_back(v.get_num().get_ui());
        } catch (const ParseError& err) {
          throw ParseError(err.message(), off + err.position(), line_no);
        }
      }
      if (got != sizes)
        throw Error(ErrorKind::invalid_argument,
                    "table class sizes do not match the group's conjugacy classes");
      have_header = true;
      continue;
    }
    std::vector<Cyclotomic> row;
    for (auto [f, off] : fields) {
      try {
        row.push_back(parse_cyclotomic(f));
      } catch (const ParseError& err) {
        throw ParseError(err.message(), off + err.position(), line_no);
      }
    }
    if (row.size() != sizes.size())
      throw ParseError("row has " + std::to_string(row.size()) + " values, expected " +
                           std::to_string(sizes.size()),
                       0, line_no);
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("missing 'classes:' header", 0, line_no);
  if (rows.size() != sizes.size())
    throw Error(ErrorKind::invalid_argument, "table needs one row per conjugacy class");
  CharacterTable t = detail::finish_table(g, std::move(rows), CharacterTable::Source::file);
  if (validate)
    if (auto problems = check_character_table(t); !problems.empty())
      throw Error(ErrorKind::invalid_argument, "invalid character table: " + problems.front());
  return t;
}

}  // namespace permuton
