#include "pathalg/coefficients.hpp"

#include <algorithm>
#include <optional>

#include "pathalg/error.hpp"

namespace pathalg {

FieldValue FieldValue::rational(long num, long den) {
  if (den == 0) throw ConfigError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return FieldValue(std::move(q));
}

FieldValue FieldValue::modular(const BigInt& residue, std::uint64_t p) {
  if (p < 2) throw ConfigError("field modulus must be a prime");
  BigInt pz(std::to_string(p));
  if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0) throw ConfigError("field modulus " + std::to_string(p) + " is not prime");
  return FieldValue(reduce(Rational(residue), p), p);
}

FieldValue FieldValue::parse(std::string_view text, std::uint64_t modulus) {
  std::string s(text);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    bool digits = false;
    bool slash = false;
    for (; i < t.size(); ++i) {
      if (t[i] >= '0' && t[i] <= '9') {
        digits = true;
      } else if (t[i] == '/' && !slash && digits && i + 1 < t.size()) {
        slash = true;
      } else {
        return false;
      }
    }
    return digits;
  };
  if (!valid(s)) throw ConfigError("invalid number '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  try {
    q = Rational(s);
  } catch (const std::invalid_argument&) {
    throw ConfigError("invalid number '" + s + "'");
  }
  if (q.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
  q.canonicalize();
  FieldValue v(std::move(q));
  return modulus == 0 ? v : v.in_field(modulus);
}

int FieldValue::sign() const {
  if (modulus_ != 0) return is_zero() ? 0 : 1;
  return sgn(value_);
}

Rational FieldValue::reduce(const Rational& q, std::uint64_t p) {
  BigInt pz(std::to_string(p));
  BigInt num = q.get_num();
  BigInt den = q.get_den();
  BigInt r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  if (den != 1) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw MathError("E-FIELD", "denominator " + den.get_str() + " vanishes mod " + std::to_string(p));
    r = r * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
  }
  return Rational(r);
}

FieldValue FieldValue::in_field(std::uint64_t p) const {
  if (p == modulus_) return *this;
  if (modulus_ != 0) throw MathError("E-FIELD", "cannot move a GF(" + std::to_string(modulus_) + ") value to another field");
  return FieldValue(reduce(value_, p), p);
}

std::uint64_t FieldValue::common_modulus(const FieldValue& a, const FieldValue& b) {
  if (a.modulus_ == b.modulus_) return a.modulus_;
  if (a.modulus_ == 0) return b.modulus_;
  if (b.modulus_ == 0) return a.modulus_;
  throw MathError("E-FIELD", "mixing GF(" + std::to_string(a.modulus_) + ") and GF(" + std::to_string(b.modulus_) + ")");
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
  auto p = FieldValue::common_modulus(a, b);
  if (p == 0) return FieldValue(Rational(a.value_ + b.value_), 0);
  return FieldValue(FieldValue::reduce(a.in_field(p).value_ + b.in_field(p).value_, p), p);
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) {
  auto p = FieldValue::common_modulus(a, b);
  if (p == 0) return FieldValue(Rational(a.value_ - b.value_), 0);
  return FieldValue(FieldValue::reduce(a.in_field(p).value_ - b.in_field(p).value_, p), p);
}

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  auto p = FieldValue::common_modulus(a, b);
  if (p == 0) return FieldValue(Rational(a.value_ * b.value_), 0);
  return FieldValue(FieldValue::reduce(a.in_field(p).value_ * b.in_field(p).value_, p), p);
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) { return a * b.inverse(); }

FieldValue FieldValue::operator-() const {
  if (modulus_ == 0) return FieldValue(Rational(-value_), 0);
  return FieldValue(reduce(Rational(-value_), modulus_), modulus_);
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw MathError("E-DIV0", "division by zero");
  if (modulus_ == 0) return FieldValue(Rational(1 / value_), 0);
  return FieldValue(reduce(Rational(1 / value_), modulus_), modulus_);
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  try {
    auto p = FieldValue::common_modulus(a, b);
    return a.in_field(p).value_ == b.in_field(p).value_;
  } catch (const MathError&) {
    return false;
  }
}

std::string FieldValue::to_string() const { return value_.get_str(); }

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) {
      // The side holding the smaller variable has a positive exponent there
      // while the other has zero.
      return fa[i].first < fb[j].first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (fa[i].second != fb[j].second) return fa[i].second <=> fb[j].second;
    ++i;
    ++j;
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (j < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(const FieldValue& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(VarId v) { return term(Monomial::variable(v), FieldValue(1)); }

Polynomial Polynomial::term(const Monomial& m, const FieldValue& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one(); }

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

FieldValue Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? FieldValue(0) : it->second;
}

FieldValue Polynomial::leading_coefficient() const { return terms_.empty() ? FieldValue(0) : terms_.begin()->second; }

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const FieldValue& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out -= b;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

Polynomial Polynomial::scaled(const FieldValue& c) const {
  Polynomial out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

FieldValue Polynomial::evaluate(std::span<const FieldValue> point) const {
  FieldValue total(0);
  for (const auto& [m, c] : terms_) {
    FieldValue t = c;
    for (const auto& [v, e] : m.factors()) {
      if (v >= point.size()) throw ConfigError("no value for variable #" + std::to_string(v));
      for (std::uint32_t k = 0; k < e; ++k) t *= point[v];
    }
    total += t;
  }
  return total;
}

FieldValue Polynomial::evaluate(const std::map<VarId, FieldValue>& point) const {
  for (VarId v : variables())
    if (!point.contains(v)) throw ConfigError("no value for variable #" + std::to_string(v));
  return substitute(point).constant_term();
}

Polynomial Polynomial::substitute(const std::map<VarId, FieldValue>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    FieldValue coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest = rest * Monomial::variable(v, e);
      } else {
        for (std::uint32_t k = 0; k < e; ++k) coeff *= it->second;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Polynomial Polynomial::sign_normalized() const {
  if (!terms_.empty() && terms_.begin()->second.sign() < 0) return -*this;
  return *this;
}

VarId VariableTable::add(std::string name) {
  if (index_.contains(name)) throw ConfigError("duplicate variable '" + name + "'");
  VarId id = static_cast<VarId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

std::optional<VarId> VariableTable::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string to_string(const Monomial& m, const VariableTable& vars) {
  if (m.is_one()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) out += '*';
    first = false;
    out += vars.name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const Polynomial& f, const VariableTable& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool negative = c.sign() < 0;
    FieldValue mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += to_string(m, vars);
    } else {
      out += mag.to_string() + "*" + to_string(m, vars);
    }
  }
  return out;
}

}  // namespace pathalg
