#include "support/fixtures.hpp"

namespace fx {

std::vector<Path> Setup::paths(const std::vector<std::string>& texts) const {
  std::vector<Path> out;
  for (const auto& t : texts) out.push_back(path(t));
  return out;
}

std::vector<KElement> Setup::elements(const std::vector<std::string>& texts) const {
  std::vector<KElement> out;
  for (const auto& t : texts) out.push_back(element(t));
  return out;
}

std::vector<std::string> Setup::show(const std::vector<Path>& ps) const {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(show(p));
  return out;
}

MonomialData Setup::monomial(const std::vector<std::string>& tips) const {
  auto ps = paths(tips);
  return MonomialData(quiver, ps);
}

Setup loops(std::size_t n) {
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 1; i <= n; ++i) arrows.push_back({"x" + std::to_string(i), "1", "1"});
  Quiver q({"1"}, arrows);
  std::vector<ArrowId> prec;
  for (std::size_t i = n; i >= 1; --i) prec.push_back(*q.find_arrow("x" + std::to_string(i)));
  return {q, PathOrder(q, OrderKind::length_lexicographic, prec, q.vertices())};
}

Setup one_loop() {
  Quiver q({"1"}, {{"x", "1", "1"}});
  return {q, PathOrder::declaration_order(q)};
}

Setup linear_a3() {
  Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  return {q, PathOrder::declaration_order(q)};
}

Setup eight_vertex() {
  Quiver q({"1", "2", "3", "4", "5", "6", "7", "8"},
           {{"a", "1", "2"}, {"b", "2", "5"}, {"c", "1", "3"}, {"d", "3", "5"}, {"e", "1", "4"}, {"f", "4", "5"},
            {"g", "1", "6"}, {"h", "6", "8"}, {"i", "5", "8"}, {"j", "4", "7"}, {"k", "7", "8"}});
  return {q, PathOrder::declaration_order(q, OrderKind::length_left_lexicographic)};
}

Setup arrowless(std::size_t vertices) {
  std::vector<std::string> vs;
  for (std::size_t i = 1; i <= vertices; ++i) vs.push_back(std::to_string(i));
  Quiver q(vs, {});
  return {q, PathOrder::declaration_order(q)};
}

std::vector<KElement> commutators(const Setup& s, std::size_t n) {
  std::vector<KElement> out;
  for (std::size_t i = n; i >= 1; --i)
    for (std::size_t j = i - 1; j >= 1; --j) {
      auto xi = "x" + std::to_string(i);
      auto xj = "x" + std::to_string(j);
      out.push_back(s.element(xi + "*" + xj + " - " + xj + "*" + xi));
    }
  return out;
}

std::vector<std::string> commutator_tips(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = n; i >= 1; --i)
    for (std::size_t j = i - 1; j >= 1; --j) out.push_back("x" + std::to_string(i) + "*x" + std::to_string(j));
  return out;
}

FieldValue small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  return FieldValue::rational(num(rng), den(rng));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fx
