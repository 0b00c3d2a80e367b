#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(z_n).
 *
 * An element is stored at a conductor n as a polynomial in z_n of degree
 * below phi(n), reduced modulo the n-th cyclotomic polynomial. Coefficients
 * are kept as integer numerators over one positive common denominator with
 * gcd(numerators, denominator) = 1, which makes the representation at a
 * fixed conductor canonical.
 *
 * Operands at different conductors are lifted to the lcm of the two
 * conductors. Results are never minimized automatically; use
 * minimal_conductor() / minimized() when the smallest field matters.
 */

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permuton/errors.hpp"
#include "permuton/rational.hpp"

namespace permuton {

namespace detail {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

inline int checked_lcm(int a, int b) {
  long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > 1'000'000)
    throw Error(ErrorKind::invalid_conductor,
                "conductor lcm too large: " + std::to_string(l));
  return static_cast<int>(l);
}

/// Data shared by every element of Q(z_n).
struct FieldData {
  int conductor = 1;
  int degree = 1;
  std::vector<Integer> cyclotomic_polynomial;      // monic, degree+1 coeffs
  std::vector<std::vector<Integer>> power_table;   // x^k mod Phi_n, k < n
};

// prod_{d | n} (x^d - 1)^{mu(n/d)}
inline std::vector<Integer> compute_cyclotomic_polynomial(int n) {
  std::vector<Integer> poly{1};
  std::vector<int> divide_by;
  for (int d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<Integer> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (int d : divide_by) {
    // exact division by x^d - 1
    std::vector<Integer> rem = poly;
    std::vector<Integer> quot(poly.size() - d, 0);
    for (std::size_t i = rem.size() - 1; i + 1 > static_cast<std::size_t>(d);
         --i) {
      quot[i - d] = rem[i];
      rem[i - d] += rem[i];
      rem[i] = 0;
    }
    poly = std::move(quot);
  }
  return poly;
}

inline std::unique_ptr<const FieldData> build_field(int n) {
  auto f = std::make_unique<FieldData>();
  f->conductor = n;
  f->degree = euler_phi(n);
  f->cyclotomic_polynomial = compute_cyclotomic_polynomial(n);
  const int phi = f->degree;
  std::vector<Integer> row(phi, 0);
  row[0] = 1;
  f->power_table.reserve(n);
  for (int k = 0; k < n; ++k) {
    f->power_table.push_back(row);
    Integer carry = row[phi - 1];
    for (int i = phi - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    if (carry != 0)
      for (int i = 0; i < phi; ++i)
        row[i] -= carry * f->cyclotomic_polynomial[i];
  }
  return f;
}

inline const FieldData& field_data(int n) {
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<const FieldData>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto built = build_field(n);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return *it->second;
}

}  // namespace detail

enum class Sign { negative = -1, zero = 0, positive = 1 };

class Cyclotomic;
Cyclotomic root_of_unity(int n, long k);

class Cyclotomic {
 public:
  Cyclotomic() : n_(1), num_{Integer(0)}, den_(1) {}
  Cyclotomic(int v) : n_(1), num_{Integer(v)}, den_(1) {}
  Cyclotomic(long v) : n_(1), num_{Integer(v)}, den_(1) {}
  Cyclotomic(const Integer& v) : n_(1), num_{v}, den_(1) {}
  Cyclotomic(const Rational& r) : n_(1), num_{r.get_num()}, den_(r.get_den()) {
    normalize();
  }

  /// Builds sum_k coeffs[k] * z_n^k for arbitrary k (reduced mod Phi_n).
  static Cyclotomic from_exponent_sum(int n, std::span<const Rational> coeffs) {
    check_conductor(n);
    Integer den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const auto& f = detail::field_data(n);
    std::vector<Integer> num(f.degree, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      Integer scaled = coeffs[k].get_num() * (den / coeffs[k].get_den());
      const auto& row = f.power_table[k % n];
      for (int i = 0; i < f.degree; ++i)
        if (row[i] != 0) num[i] += scaled * row[i];
    }
    return Cyclotomic(n, std::move(num), std::move(den));
  }

  /// Builds an element from its reduced power-basis coefficients.
  static Cyclotomic from_basis(int n, std::span<const Rational> basis) {
    check_conductor(n);
    if (basis.size() != static_cast<std::size_t>(detail::euler_phi(n)))
      throw Error(ErrorKind::invalid_argument,
                  "basis length must equal phi(conductor)");
    return from_exponent_sum(n, basis);
  }

  int conductor() const noexcept { return n_; }

  /// Reduced power-basis coefficients, length phi(conductor()).
  std::vector<Rational> coefficients() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& v : num_) {
      Rational q(v, den_);
      q.canonicalize();
      out.push_back(q);
    }
    return out;
  }

  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const {
    return std::all_of(num_.begin(), num_.end(),
                       [](const Integer& v) { return v == 0; });
  }

  /// True iff the element lies in Q. The constant basis vector is 1, so
  /// rationals are exactly the elements with no higher power terms.
  bool is_rational() const {
    return std::all_of(num_.begin() + 1, num_.end(),
                       [](const Integer& v) { return v == 0; });
  }

  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
  }

  /// Re-expresses the element at conductor m, a multiple of conductor().
  Cyclotomic lifted_to(int m) const {
    check_conductor(m);
    if (m == n_) return *this;
    if (m % n_ != 0)
      throw Error(ErrorKind::invalid_conductor,
                  "lift target must be a multiple of the conductor");
    const int step = m / n_;
    const auto& f = detail::field_data(m);
    std::vector<Integer> num(f.degree, 0);
    for (std::size_t j = 0; j < num_.size(); ++j) {
      if (num_[j] == 0) continue;
      const auto& row = f.power_table[(j * step) % m];
      for (int i = 0; i < f.degree; ++i)
        if (row[i] != 0) num[i] += num_[j] * row[i];
    }
    return Cyclotomic(m, std::move(num), den_);
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& v : r.num_) v = -v;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) {
      int l = detail::checked_lcm(a.n_, b.n_);
      return a.lifted_to(l) + b.lifted_to(l);
    }
    std::vector<Integer> num(a.num_.size());
    if (a.den_ == b.den_) {
      for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] + b.num_[i];
      return Cyclotomic(a.n_, std::move(num), a.den_);
    }
    for (std::size_t i = 0; i < num.size(); ++i)
      num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    return Cyclotomic(a.n_, std::move(num), a.den_ * b.den_);
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return a + (-b);
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational()) return b.scaled(a.num_[0], a.den_);
    if (b.is_rational()) return a.scaled(b.num_[0], b.den_);
    if (a.n_ != b.n_) {
      int l = detail::checked_lcm(a.n_, b.n_);
      return a.lifted_to(l) * b.lifted_to(l);
    }
    const auto& f = detail::field_data(a.n_);
    const std::size_t phi = a.num_.size();
    std::vector<Integer> conv(2 * phi - 1, 0);
    for (std::size_t i = 0; i < phi; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j)
        if (b.num_[j] != 0) conv[i + j] += a.num_[i] * b.num_[j];
    }
    std::vector<Integer> num(conv.begin(), conv.begin() + phi);
    for (std::size_t k = phi; k < conv.size(); ++k) {
      if (conv[k] == 0) continue;
      const auto& row = f.power_table[k % a.n_];
      for (std::size_t i = 0; i < phi; ++i)
        if (row[i] != 0) num[i] += conv[k] * row[i];
    }
    return Cyclotomic(a.n_, std::move(num), a.den_ * b.den_);
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * inverse(b);
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.is_rational() && b.is_rational())
      return a.den_ == b.den_ && a.num_[0] == b.num_[0];
    int l = detail::checked_lcm(a.n_, b.n_);
    return a.lifted_to(l) == b.lifted_to(l);
  }

  /// Field inverse; solves the linear system (a * x = 1) over Q.
  friend Cyclotomic inverse(const Cyclotomic& a) {
    if (a.is_zero())
      throw Error(ErrorKind::division_by_zero, "inverse of zero cyclotomic");
    if (a.is_rational()) return Cyclotomic(Rational(a.den_, a.num_[0]));
    const int n = a.n_;
    const std::size_t phi = a.num_.size();
    // column j of the system holds the coefficients of num(a) * z^j
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    Cyclotomic numerator_only(n, a.num_, Integer(1));
    for (std::size_t j = 0; j < phi; ++j) {
      Cyclotomic col = numerator_only * root_of_unity(n, static_cast<long>(j));
      for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.num_[i];
    }
    m[0][phi] = Rational(a.den_);
    for (std::size_t c = 0; c < phi; ++c) {
      std::size_t p = c;
      while (p < phi && m[p][c] == 0) ++p;
      if (p == phi)
        throw Error(ErrorKind::consistency, "singular multiplication matrix");
      std::swap(m[p], m[c]);
      Rational pivot = m[c][c];
      for (std::size_t k = c; k <= phi; ++k) m[c][k] /= pivot;
      for (std::size_t r = 0; r < phi; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational factor = m[r][c];
        for (std::size_t k = c; k <= phi; ++k) m[r][k] -= factor * m[c][k];
      }
    }
    std::vector<Rational> sol(phi);
    for (std::size_t i = 0; i < phi; ++i) sol[i] = m[i][phi];
    return from_basis(n, sol);
  }

  /// The automorphism z_n -> z_n^k, gcd(k, n) = 1.
  friend Cyclotomic galois(const Cyclotomic& a, long k) {
    const int n = a.n_;
    long kk = ((k % n) + n) % n;
    if (std::gcd(kk, static_cast<long>(n)) != 1)
      throw Error(ErrorKind::invalid_argument,
                  "galois exponent must be coprime to the conductor");
    if (n == 1) return a;
    const auto& f = detail::field_data(n);
    std::vector<Integer> num(a.num_.size(), 0);
    for (std::size_t j = 0; j < a.num_.size(); ++j) {
      if (a.num_[j] == 0) continue;
      const auto& row = f.power_table[(j * kk) % n];
      for (std::size_t i = 0; i < num.size(); ++i)
        if (row[i] != 0) num[i] += a.num_[j] * row[i];
    }
    return Cyclotomic(n, std::move(num), a.den_);
  }

  /// Complex conjugation, z_n -> z_n^(n-1).
  friend Cyclotomic conj(const Cyclotomic& a) {
    return galois(a, a.n_ - 1);
  }

  friend Cyclotomic root_of_unity(int n, long k);

 private:
  Cyclotomic(int n, std::vector<Integer> num, Integer den)
      : n_(n), num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static void check_conductor(int n) {
    if (n <= 0)
      throw Error(ErrorKind::invalid_conductor,
                  "conductor must be positive, got " + std::to_string(n));
  }

  Cyclotomic scaled(const Integer& num, const Integer& den) const {
    std::vector<Integer> out(num_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = num_[i] * num;
    return Cyclotomic(n_, std::move(out), den_ * den);
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& v : num_) v = -v;
    }
    if (den_ == 0)
      throw Error(ErrorKind::division_by_zero, "zero denominator");
    Integer g = den_;
    for (const auto& v : num_) {
      if (g == 1) break;
      if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    if (g != 1) {
      for (auto& v : num_)
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  int n_;
  std::vector<Integer> num_;
  Integer den_;
};

/// z_n^k in reduced form.
inline Cyclotomic root_of_unity(int n, long k) {
  Cyclotomic::check_conductor(n);
  const auto& f = detail::field_data(n);
  long e = ((k % n) + n) % n;
  return Cyclotomic(n, f.power_table[e], Integer(1));
}

inline bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
  return !(a == b);
}

/// Smallest d with a in Q(z_d): a must be fixed by Gal(Q(z_n)/Q(z_d)).
inline int minimal_conductor(const Cyclotomic& a) {
  const int n = a.conductor();
  if (a.is_rational()) return 1;
  for (int d : detail::divisors(n)) {
    if (d == n) return n;
    bool fixed = true;
    for (int k = 1 + d; k < n && fixed; k += d)
      if (std::gcd(k, n) == 1 && galois(a, k) != a) fixed = false;
    if (fixed) return d;
  }
  return n;
}

/// Re-expresses a at conductor d, which must divide a's conductor and
/// contain a. Solves for the Q(z_d) power-basis coordinates.
inline Cyclotomic expressed_at(const Cyclotomic& a, int d) {
  const int n = a.conductor();
  if (d == n) return a;
  if (d <= 0 || n % d != 0) {
    int l = detail::checked_lcm(n, d);
    if (l == d) return a.lifted_to(d);
    return expressed_at(a.lifted_to(l), d);
  }
  if (auto r = a.as_rational()) return Cyclotomic(*r).lifted_to(d);
  const int phi_d = detail::euler_phi(d);
  const std::vector<Rational> target = a.coefficients();
  const std::size_t rows = target.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(phi_d + 1));
  for (int j = 0; j < phi_d; ++j) {
    auto col = root_of_unity(n, static_cast<long>(j) * (n / d)).coefficients();
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
  }
  for (std::size_t i = 0; i < rows; ++i) m[i][phi_d] = target[i];
  std::size_t r = 0;
  std::vector<int> pivot_cols;
  for (int c = 0; c < phi_d && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational pivot = m[r][c];
    for (int k = c; k <= phi_d; ++k) m[r][k] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational factor = m[i][c];
      for (int k = c; k <= phi_d; ++k) m[i][k] -= factor * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][phi_d] != 0)
      throw Error(ErrorKind::invalid_conductor,
                  "element does not lie in Q(z_" + std::to_string(d) + ")");
  std::vector<Rational> sol(phi_d, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    sol[pivot_cols[i]] = m[i][phi_d];
  return Cyclotomic::from_basis(d, sol);
}

inline Cyclotomic minimized(const Cyclotomic& a) {
  return expressed_at(a, minimal_conductor(a));
}

namespace detail {

inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

inline int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long result = 1, base = a;
  long long e = (p - 1) / 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

// Positive square root of a prime p inside a cyclotomic field.
inline Cyclotomic sqrt_prime(std::uint64_t p) {
  if (p == 2) return root_of_unity(8, 1) + root_of_unity(8, 7);
  const int ip = static_cast<int>(p);
  std::vector<Rational> gauss(ip, 0);
  for (int a = 1; a < ip; ++a) gauss[a] = legendre(a, ip);
  Cyclotomic g = Cyclotomic::from_exponent_sum(ip, gauss);
  if (p % 4 == 1) return g;
  // the Gauss sum equals i*sqrt(p) for p = 3 mod 4
  return -(root_of_unity(4, 1) * g);
}

}  // namespace detail

/// Non-negative square root of m as an exact cyclotomic.
inline Cyclotomic sqrt_natural(std::uint64_t m) {
  if (m == 0) return Cyclotomic(0);
  Integer square_part = 1;
  Cyclotomic root(1);
  for (auto [p, e] : detail::factorize(m)) {
    for (int i = 0; i < e / 2; ++i) square_part *= static_cast<unsigned long>(p);
    if (e % 2 == 1) {
      if (p > 1'000'000)
        throw Error(ErrorKind::invalid_argument,
                    "square-free prime factor too large for sqrt_natural");
      root *= detail::sqrt_prime(p);
    }
  }
  return root * Cyclotomic(square_part);
}

inline Cyclotomic golden_ratio() {
  return (Cyclotomic(1) + sqrt_natural(5)) * Cyclotomic(Rational(1, 2));
}

namespace detail {

struct MpfrValue {
  mpfr_t v;
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
};

}  // namespace detail

/// Exact sign of a real cyclotomic. Zero is decided algebraically; nonzero
/// values are evaluated with MPFR under a rigorous error bound, doubling the
/// precision (from 64 bits) until the enclosure excludes zero.
inline Sign sign_of_real(const Cyclotomic& a) {
  if (conj(a) != a)
    throw Error(ErrorKind::not_real, "sign_of_real requires a real element");
  if (a.is_zero()) return Sign::zero;
  if (auto r = a.as_rational()) return sgn(*r) < 0 ? Sign::negative : Sign::positive;

  const int n = a.conductor();
  const auto& num = a.numerators();
  Integer weight = 0;
  for (const auto& c : num) weight += abs(c);
  // per-term error: pi, the angle, the cosine, the scaling and the
  // summation each contribute a few ulps; 64 + 4*phi ulps of the weight
  // bounds their total.
  const long slack = 64 + 4 * static_cast<long>(num.size());

  for (mpfr_prec_t prec = 64;; prec *= 2) {
    detail::MpfrValue sum(prec), term(prec), angle(prec), bound(prec);
    mpfr_set_zero(sum.v, 1);
    for (std::size_t j = 0; j < num.size(); ++j) {
      if (num[j] == 0) continue;
      mpfr_const_pi(angle.v, MPFR_RNDN);
      mpfr_mul_ui(angle.v, angle.v, 2 * j, MPFR_RNDN);
      mpfr_div_ui(angle.v, angle.v, static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_cos(term.v, angle.v, MPFR_RNDN);
      mpfr_mul_z(term.v, term.v, num[j].get_mpz_t(), MPFR_RNDN);
      mpfr_add(sum.v, sum.v, term.v, MPFR_RNDN);
    }
    mpfr_set_z(bound.v, weight.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_ui(bound.v, bound.v, static_cast<unsigned long>(slack), MPFR_RNDU);
    mpfr_mul_2si(bound.v, bound.v, -static_cast<long>(prec), MPFR_RNDU);
    if (mpfr_cmpabs(sum.v, bound.v) > 0)
      return mpfr_sgn(sum.v) < 0 ? Sign::negative : Sign::positive;
  }
}

/// Floating-point approximation, for non-authoritative display only.
inline std::complex<double> approximate(const Cyclotomic& a) {
  const int n = a.conductor();
  long double re = 0, im = 0;
  const long double den = a.denominator().get_d();
  const long double tau = 2.0L * 3.141592653589793238462643383279502884L;
  const auto& num = a.numerators();
  for (std::size_t j = 0; j < num.size(); ++j) {
    if (num[j] == 0) continue;
    long double c = num[j].get_d() / den;
    re += c * std::cos(tau * j / n);
    im += c * std::sin(tau * j / n);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

/// Text form `c0 + c1*z(n)^1 + ...`; unit coefficients are written `z(n)^k`.
inline std::string to_string(const Cyclotomic& a) {
  const auto coeffs = a.coefficients();
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z(" + std::to_string(a.conductor()) + ")^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

/// Parses the grammar produced by to_string(). Terms may mix conductors and
/// use any integer exponent; the result is reduced at the lcm conductor.
inline Cyclotomic parse_cyclotomic(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) -> long {
    std::size_t start = i;
    bool neg = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw ParseError("expected integer", start);
    if (i - digits_start > 9) throw ParseError("integer too large", start);
    long v = std::stol(std::string(text.substr(digits_start, i - digits_start)));
    return neg ? -v : v;
  };
  auto read_zpow = [&]() -> Cyclotomic {
    std::size_t start = i;
    if (i >= text.size() || text[i] != 'z') throw ParseError("expected 'z('", start);
    ++i;
    if (i >= text.size() || text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    skip_ws();
    long n = read_int(false);
    skip_ws();
    if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
    ++i;
    long k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      k = read_int(true);
    }
    if (n <= 0) throw ParseError("conductor must be positive", start);
    return root_of_unity(static_cast<int>(n), k);
  };

  Cyclotomic total;
  skip_ws();
  if (i == text.size()) throw ParseError("empty cyclotomic literal", 0);
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) {
      if (first) throw ParseError("empty cyclotomic literal", i);
      break;
    }
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", i);
    }
    Cyclotomic term;
    if (i < text.size() && text[i] == 'z') {
      term = read_zpow();
    } else {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
        ++i;
      if (start == i) throw ParseError("expected coefficient or 'z('", start);
      Rational c;
      try {
        c = parse_rational(text.substr(start, i - start));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.position());
      }
      term = Cyclotomic(c);
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
        term *= read_zpow();
      }
    }
    total += negative ? -term : term;
    first = false;
  }
  return total;
}

/// Total order on values (not conductors): compares minimized forms by
/// conductor, then coefficients. Used only for deterministic sorting.
inline bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic ma = minimized(a), mb = minimized(b);
  if (ma.conductor() != mb.conductor()) return ma.conductor() < mb.conductor();
  auto ca = ma.coefficients(), cb = mb.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

}  // namespace permuton
