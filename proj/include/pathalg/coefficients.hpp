#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathalg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// The ring operations every coefficient domain must offer.
template <class C>
concept Coefficient = std::regular<C> && requires(const C& a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  C(1);
};

/// Coefficient domains that can divide.
template <class C>
concept FieldCoefficient = Coefficient<C> && requires(const C& a) {
  { a.inverse() } -> std::convertible_to<C>;
};

/// An element of Q (modulus 0) or of GF(p).
///
/// Binary operations between a rational and a GF(p) value reduce the
/// rational into GF(p); two different primes never mix.
class FieldValue {
 public:
  FieldValue() = default;
  FieldValue(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit FieldValue(Rational q) : value_(std::move(q)) { value_.canonicalize(); }

  static FieldValue rational(long num, long den);
  /// p must be prime; residue is reduced into [0, p).
  static FieldValue modular(const BigInt& residue, std::uint64_t p);
  /// `-3/4`, `7`; reduced into GF(p) when modulus is nonzero.
  static FieldValue parse(std::string_view text, std::uint64_t modulus = 0);

  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_rational() const noexcept { return modulus_ == 0; }
  const Rational& value() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  /// Sign of a rational; 1 for any nonzero residue.
  int sign() const;

  FieldValue inverse() const;
  /// Same value viewed in GF(p); identity when p == 0.
  FieldValue in_field(std::uint64_t p) const;

  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
  FieldValue operator-() const;
  FieldValue& operator+=(const FieldValue& o) { return *this = *this + o; }
  FieldValue& operator-=(const FieldValue& o) { return *this = *this - o; }
  FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }

  friend bool operator==(const FieldValue& a, const FieldValue& b);

  /// `p/q` or `p` for rationals, the residue for GF(p).
  std::string to_string() const;

 private:
  FieldValue(Rational v, std::uint64_t p) : value_(std::move(v)), modulus_(p) {}
  static std::uint64_t common_modulus(const FieldValue& a, const FieldValue& b);
  static Rational reduce(const Rational& q, std::uint64_t p);

  Rational value_{0};
  std::uint64_t modulus_ = 0;
};

using VarId = std::uint32_t;

/// A power product of variables, stored sparse and sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exponent = 1);

  std::span<const std::pair<VarId, std::uint32_t>> factors() const noexcept { return factors_; }
  std::uint32_t degree() const;
  std::uint32_t exponent(VarId v) const;
  bool is_one() const noexcept { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

/// Graded lexicographic comparison on exponent vectors (variable 0 most significant).
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

/// Polynomial in commuting variables over FieldValue. Terms are kept in
/// grlex-descending order with no zero coefficients. There is no inverse.
class Polynomial {
 public:
  using Terms = std::map<Monomial, FieldValue, GrlexDescending>;

  Polynomial() = default;
  Polynomial(long c) : Polynomial(FieldValue(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const FieldValue& c);                   // NOLINT(google-explicit-constructor)

  static Polynomial variable(VarId v);
  static Polynomial term(const Monomial& m, const FieldValue& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  FieldValue constant_term() const;
  /// Coefficient of the grlex-largest monomial; zero for the zero polynomial.
  FieldValue leading_coefficient() const;
  std::uint32_t total_degree() const;
  std::set<VarId> variables() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(const FieldValue& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// point[v] is the value of variable v. Throws ConfigError if a variable
  /// of this polynomial has no value.
  FieldValue evaluate(std::span<const FieldValue> point) const;
  FieldValue evaluate(const std::map<VarId, FieldValue>& point) const;
  /// Replaces the listed variables by values; others stay symbolic.
  Polynomial substitute(const std::map<VarId, FieldValue>& values) const;
  /// Negated when the leading coefficient is a negative rational.
  Polynomial sign_normalized() const;

 private:
  void add_term(const Monomial& m, const FieldValue& c);
  Terms terms_;
};

/// Names for VarIds. Indices are dense and assigned in insertion order.
class VariableTable {
 public:
  VarId add(std::string name);
  const std::string& name(VarId v) const { return names_.at(v); }
  std::optional<VarId> find(std::string_view name) const;
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, VarId, std::less<>> index_;
};

std::string to_string(const Monomial& m, const VariableTable& vars);
/// Canonical text: grlex-descending terms, e.g. `x[a*b;c*d]^2 - 3/2*x[a*b;e*f]`.
std::string to_string(const Polynomial& f, const VariableTable& vars);

}  // namespace pathalg
