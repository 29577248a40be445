#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/linalg.hpp"
#include "support/oracles.hpp"

// Checks on the reference implementations themselves, against values that
// can be counted by hand.

TEST_CASE("word oracle basics") {
  CHECK(oracle::occurs_in({"b", "c"}, {"a", "b", "c"}));
  CHECK_FALSE(oracle::occurs_in({"c", "b"}, {"a", "b", "c"}));
  CHECK(oracle::occurs_in({}, {"a"}));
  auto l = fx::loops(2);
  CHECK(oracle::all_paths(l.quiver, 3).size() == 1 + 2 + 4 + 8);
  auto a = fx::linear_a3();
  CHECK(oracle::all_paths(a.quiver, 5) == std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b", "a*b"});
  CHECK(oracle::nontips(a.quiver, {{"a", "b"}}, 5).size() == 5);
  // Nontips of x2*x1 are x1^a x2^b: n + 1 of each length n.
  CHECK(oracle::nontips(l.quiver, {{"x2", "x1"}}, 4).size() == 1 + 2 + 3 + 4 + 5);
}

TEST_CASE("rewriting oracle") {
  using pathalg::Polynomial;
  std::vector<oracle::Rule> commute{{{"x2", "x1"}, {{{"x1", "x2"}, Polynomial(1)}}}};
  oracle::WordElement x{{{"x2", "x2", "x1"}, Polynomial(1)}};
  auto y = oracle::rewrite(x, commute);
  CHECK(y == oracle::WordElement{{{"x1", "x2", "x2"}, Polynomial(1)}});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) CHECK(oracle::rewrite(x, commute, &rng) == y);
  CHECK(oracle::straighten({"x3", "x1", "x2", "x1"}) == oracle::Word{"x1", "x1", "x2", "x3"});
}

TEST_CASE("quotient dimension by linear algebra") {
  auto l = fx::loops(2);
  auto comm = fx::commutators(l, 2);
  for (std::size_t d = 0; d <= 4; ++d) CHECK(oracle::quotient_dimension(l.quiver, comm, d) == d + 1);
  auto l3 = fx::loops(3);
  auto comm3 = fx::commutators(l3, 3);
  for (std::size_t d = 0; d <= 3; ++d)
    CHECK(oracle::quotient_dimension(l3.quiver, comm3, d) == fx::binomial(d + 2, 2));
}

TEST_CASE("linear algebra helpers") {
  using linalg::FieldValue;
  linalg::Matrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(linalg::rank(m, 3) == 2);
  auto ns = linalg::nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    FieldValue dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot.is_zero());
  }
  linalg::Echelon e(2);
  CHECK(e.insert({1, 1}));
  CHECK_FALSE(e.insert({2, 2}));
  CHECK(e.contains({3, 3}));
  CHECK_FALSE(e.contains({1, 0}));
}
