#include <doctest.h>

#include <random>

#include "pathalg/coefficients.hpp"
#include "pathalg/error.hpp"

using namespace pathalg;

TEST_CASE("rationals") {
  FieldValue a = FieldValue::rational(2, 4);
  CHECK(a.to_string() == "1/2");
  CHECK((a + a).is_one());
  CHECK((a * FieldValue(2)).is_one());
  CHECK(a.inverse() == FieldValue(2));
  CHECK((-a).sign() == -1);
  CHECK(FieldValue::parse("-3/6") == FieldValue::rational(-1, 2));
  CHECK(FieldValue::parse("+7") == FieldValue(7));
  CHECK_THROWS_AS(FieldValue::parse("1/0"), Error);
  CHECK_THROWS_AS(FieldValue::parse("x"), ConfigError);
  CHECK_THROWS_AS(FieldValue::parse("1/"), ConfigError);
  CHECK_THROWS_AS(FieldValue(0).inverse(), MathError);
}

TEST_CASE("prime fields") {
  FieldValue a = FieldValue::modular(3, 7);
  CHECK(a.modulus() == 7);
  CHECK((a * a.inverse()).is_one());
  CHECK((a + FieldValue(4)).is_zero());
  CHECK(FieldValue::parse("1/2", 7) == FieldValue::modular(4, 7));
  CHECK(FieldValue::modular(-1, 5) == FieldValue::modular(4, 5));
  CHECK_THROWS_AS(FieldValue::modular(1, 8), ConfigError);
  CHECK_THROWS_AS(FieldValue::modular(1, 5) + FieldValue::modular(1, 7), MathError);
  CHECK(FieldValue::rational(1, 3).in_field(5) == FieldValue::modular(2, 5));
}

TEST_CASE("polynomials") {
  VariableTable vars;
  VarId x = vars.add("x");
  VarId y = vars.add("y");
  Polynomial px = Polynomial::variable(x);
  Polynomial py = Polynomial::variable(y);
  Polynomial f = px * px - py.scaled(FieldValue::rational(3, 2));
  CHECK(to_string(f, vars) == "x^2 - 3/2*y");
  CHECK(f.total_degree() == 2);
  CHECK(to_string(-(px * py) + Polynomial(1), vars) == "-x*y + 1");
  CHECK(to_string((-(px * py)).sign_normalized(), vars) == "x*y");
  CHECK((px - px).is_zero());
  CHECK(Polynomial(1).is_one());
  std::vector<FieldValue> point{FieldValue(2), FieldValue(4)};
  CHECK(f.evaluate(point) == FieldValue(-2));
  CHECK(f.substitute({{y, FieldValue(0)}}) == px * px);
  CHECK_THROWS_AS(f.evaluate(std::vector<FieldValue>{FieldValue(1)}), ConfigError);
  CHECK(f.variables() == std::set<VarId>{x, y});
  CHECK(vars.find("y") == y);
  CHECK_FALSE(vars.find("z").has_value());
}

TEST_CASE("grlex puts higher degree first, then variable 0") {
  Monomial x = Monomial::variable(0);
  Monomial y = Monomial::variable(1);
  CHECK(grlex(x * y, x) > 0);
  CHECK(grlex(x, y) > 0);
  CHECK(grlex(x * y, y * y) > 0);
  CHECK(grlex(x * y, y * x) == 0);
}

namespace {

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 3), var(0, 2), exp(0, 2), coef(-4, 4);
  Polynomial p;
  for (int t = terms(rng); t > 0; --t) {
    Monomial m;
    for (int v = 0; v < 3; ++v) {
      int e = exp(rng);
      if (e) m = m * Monomial::variable(static_cast<VarId>(v), static_cast<std::uint32_t>(e));
    }
    p += Polynomial::term(m, FieldValue(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial ring laws on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    std::vector<FieldValue> pt{FieldValue(val(rng)), FieldValue(val(rng)), FieldValue(val(rng))};
    CHECK((a * b + c).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
  }
}
