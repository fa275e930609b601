#pragma once

// Exact Laurent polynomials over the integers, i.e. elements of Z[v, v^-1].

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hecke {

using Integer = boost::multiprecision::cpp_int;

/// Sparse element of Z[v, v^-1]. Terms are kept sorted by exponent with
/// no zero coefficients, so structural equality is ring equality.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT: integers embed as constants
  explicit LaurentPoly(Integer c);
  /// Builds from (exponent, coefficient) pairs in any order; repeated
  /// exponents are summed.
  LaurentPoly(std::initializer_list<std::pair<int, long long>> terms);
  explicit LaurentPoly(std::vector<Term> terms);

  static LaurentPoly monomial(int exp, Integer coeff = 1);
  /// The indeterminate v.
  static LaurentPoly v() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  explicit operator bool() const { return !terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at v^i, written (a : i).
  Integer coeff_at(int i) const;
  /// Largest exponent with nonzero coefficient; throws on zero.
  int degree() const;
  /// Smallest exponent with nonzero coefficient; throws on zero.
  int valuation() const;
  bool is_nonneg() const;
  bool is_bar_symmetric() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True for +-v^k, the units of Z[v, v^-1].
  bool is_unit() const;
  /// Degree-0 coefficient evaluated as a polynomial in v (only meaningful
  /// when valuation() >= 0).
  Integer constant_term() const { return coeff_at(0); }

  LaurentPoly shifted(int k) const;  // multiply by v^k
  LaurentPoly scaled(const Integer& c) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// this += c * v^k * o, without materializing the product.
  LaurentPoly& add_scaled(const LaurentPoly& o, const Integer& c, int k = 0);
  /// this += a * b.
  LaurentPoly& add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& o) const = default;
  /// Arbitrary but fixed total order, used for hashing-free grouping.
  std::strong_ordering operator<=>(const LaurentPoly& o) const;

  /// Human readable form, e.g. "v^2+2+v^-2"; zero prints as "0".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
/// v -> v^-1.
LaurentPoly bar(const LaurentPoly& a);
/// v -> -v^-1.
LaurentPoly beta_scalar(const LaurentPoly& a);
/// v -> 1, a ring morphism onto Z.
Integer eval_at_one(const LaurentPoly& a);

/// Exact quotient a / b in Z[v, v^-1] when b divides a, otherwise nullopt.
/// Throws std::domain_error when b is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// JSON interchange: object from decimal exponent string to integer
/// coefficient, keys ascending numerically, e.g. {"-1":1,"1":1}.
/// Coefficients outside the signed 64-bit range are written as decimal strings.
nlohmann::ordered_json to_json(const LaurentPoly& a);
LaurentPoly laurent_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json integer_to_json(const Integer& c);
Integer integer_from_json(const nlohmann::ordered_json& j);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

}  // namespace hecke

template <>
struct std::hash<hecke::LaurentPoly> {
  std::size_t operator()(const hecke::LaurentPoly& a) const noexcept { return a.hash(); }
};
