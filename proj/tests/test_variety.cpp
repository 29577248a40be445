#include <doctest.h>

#include <random>

#include "pathalg/error.hpp"
#include "pathalg/variety.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace pathalg;

namespace {

std::vector<std::string> equation_text(const VarietyPresentation& vp) {
  std::vector<std::string> out;
  for (const auto& f : vp.equations) out.push_back(to_string(f, vp.space.variables()));
  return out;
}

TailSpace space(const fx::Setup& s, const std::vector<std::string>& tips) {
  return tail_space(s.monomial(tips), s.order);
}

// Decides the Groebner property of {t - sum c n} by resolving every word
// ambiguity with a random rewriting strategy. Resolvable ambiguities are
// exactly the Groebner case, so the strategy does not matter.
bool oracle_is_groebner(const TailSpace& ts, const AlgebraPoint& c, std::mt19937_64& rng) {
  const Quiver& q = ts.quiver();
  std::vector<oracle::Rule> rules;
  for (std::size_t i = 0; i < ts.tips().size(); ++i) {
    oracle::Rule r{oracle::word_of(q, ts.tips()[i]), {}};
    for (const Path& n : ts.tails(i)) {
      const FieldValue& v = c[*ts.variable(i, n)];
      if (!v.is_zero()) r.rhs[oracle::word_of(q, n)] = Polynomial(v);
    }
    rules.push_back(std::move(r));
  }
  auto apply_at = [&](const oracle::Word& w, std::size_t pos, const oracle::Rule& r) {
    oracle::WordElement out;
    for (const auto& [rw, rc] : r.rhs) {
      oracle::Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
      out[nw] = out.count(nw) ? out[nw] + rc : rc;
    }
    return out;
  };
  for (const auto& f : rules)
    for (const auto& g : rules)
      for (std::size_t k = 1; k < f.lhs.size(); ++k) {
        const std::size_t shared = f.lhs.size() - k;
        if (shared >= g.lhs.size()) continue;
        if (!std::equal(f.lhs.begin() + static_cast<std::ptrdiff_t>(k), f.lhs.end(), g.lhs.begin())) continue;
        oracle::Word w = f.lhs;
        w.insert(w.end(), g.lhs.begin() + static_cast<std::ptrdiff_t>(shared), g.lhs.end());
        auto a = oracle::rewrite(apply_at(w, 0, f), rules, &rng);
        auto b = oracle::rewrite(apply_at(w, k, g), rules, &rng);
        std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(b, [](const auto& kv) { return kv.second.is_zero(); });
        if (a != b) return false;
      }
  return true;
}

// Points of the eight-vertex variety, half of them on {x1 x3 + x2, x1 x4, x1 x5}.
AlgebraPoint eight_vertex_point(std::mt19937_64& rng) {
  AlgebraPoint c(5);
  for (auto& v : c) v = fx::small_rational(rng);
  switch (rng() % 4) {
    case 0: c[0] = 0; break;
    case 1:
      c[1] = -(c[0] * c[2]);
      c[3] = 0;
      c[4] = 0;
      break;
    default: break;
  }
  return c;
}

}  // namespace

TEST_CASE("tail spaces") {
  auto l = fx::loops(2);
  auto ts = space(l, {"x2*x1"});
  CHECK(ts.dimension() == 5);
  CHECK(l.show(ts.tails(0)) == std::vector<std::string>{"x1*x2", "x1*x1", "x2", "x1", "e_1"});
  CHECK(ts.variables().name(0) == "x[x2*x1;x1*x2]");
  CHECK(ts.entry(4).tail == l.path("e_1"));

  auto s = fx::one_loop();
  CHECK(s.show(space(s, {"x*x*x"}).tails(0)) == std::vector<std::string>{"x*x", "x", "e_1"});

  auto a = fx::linear_a3();
  CHECK(space(a, {"a*b"}).dimension() == 0);
  CHECK_THROWS_AS(space(l, {"x2"}), ConfigError);

  auto e = fx::eight_vertex();
  auto te = space(e, {"a*b", "b*i", "c*d*i"});
  CHECK(te.variables().names() == std::vector<std::string>{"x[a*b;c*d]", "x[a*b;e*f]", "x[c*d*i;e*f*i]",
                                                           "x[c*d*i;e*j*k]", "x[c*d*i;g*h]"});
}

TEST_CASE("local example has no equations") {
  auto l = fx::loops(2);
  auto vp = variety_equations(space(l, {"x2*x1"}));
  CHECK(vp.overlaps.empty());
  CHECK(vp.equations.empty());
}

TEST_CASE("eight-vertex variety") {
  auto e = fx::eight_vertex();
  auto vp = variety_equations(space(e, {"a*b", "b*i", "c*d*i"}));
  REQUIRE(vp.overlaps.size() == 1);
  CHECK(vp.overlaps[0].first == 0);
  CHECK(vp.overlaps[0].second == 1);
  CHECK(e.show(vp.overlaps[0].left) == "a");
  CHECK(e.show(vp.overlaps[0].right) == "i");
  CHECK(equation_text(vp) == std::vector<std::string>{"x[a*b;c*d]*x[c*d*i;e*f*i] + x[a*b;e*f]",
                                                      "x[a*b;c*d]*x[c*d*i;e*j*k]", "x[a*b;c*d]*x[c*d*i;g*h]"});
  CHECK(violated_equations(vp, AlgebraPoint(5, FieldValue(0))).empty());
}

TEST_CASE("equations decide the Groebner property") {
  auto e = fx::eight_vertex();
  auto ts = space(e, {"a*b", "b*i", "c*d*i"});
  auto vp = variety_equations(ts);
  std::mt19937_64 rng(31);
  int on = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto c = eight_vertex_point(rng);
    const bool on_variety = violated_equations(vp, c).empty();
    on += on_variety;
    CHECK(on_variety == oracle_is_groebner(ts, c, rng));
    if (on_variety) {
      CHECK_NOTHROW(point_to_algebra(vp, c));
    } else {
      CHECK_THROWS_AS(point_to_algebra(vp, c), MathError);
    }
  }
  CHECK(on > 10);
  CHECK(on < 60);
}

TEST_CASE("strategy independence on three commuting loops") {
  auto l = fx::loops(3);
  auto ts = tail_space(l.monomial(fx::commutator_tips(3)), l.order);
  auto vp = variety_equations(ts, 2);
  CHECK(!vp.equations.empty());
  std::mt19937_64 rng(37);
  AlgebraPoint zero(ts.dimension(), FieldValue(0));
  CHECK(oracle_is_groebner(ts, zero, rng));
  // The commutative polynomial ring: tail x_j x_i with coefficient 1.
  AlgebraPoint comm = zero;
  for (std::size_t i = 0; i < ts.tips().size(); ++i) {
    auto w = oracle::word_of(l.quiver, ts.tips()[i]);
    comm[*ts.variable(i, l.path(w[1] + "*" + w[0]))] = 1;
  }
  CHECK(violated_equations(vp, comm).empty());
  for (int trial = 0; trial < 25; ++trial) {
    AlgebraPoint c = trial % 2 ? comm : zero;
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    for (int k = 0; k < 1 + trial % 3; ++k) c[pick(rng)] = fx::small_rational(rng);
    CHECK(violated_equations(vp, c).empty() == oracle_is_groebner(ts, c, rng));
  }
}

TEST_CASE("graded restriction") {
  auto l = fx::loops(2);
  auto ts = space(l, {"x2*x1"});
  auto gts = graded_tail_space(ts, WeightFunction::constant(l.quiver));
  CHECK(l.show(gts.tails(0)) == std::vector<std::string>{"x1*x2", "x1*x1"});
  CHECK(gts.dimension() == 2);

  auto s = fx::one_loop();
  CHECK(graded_tail_space(space(s, {"x*x*x"}), WeightFunction::constant(s.quiver)).dimension() == 0);

  auto e = fx::eight_vertex();
  auto full = space(e, {"a*b", "b*i", "c*d*i"});
  auto graded = graded_tail_space(full, WeightFunction::constant(e.quiver));
  CHECK(graded.dimension() == 4);
  auto gvp = variety_equations(graded);
  auto vp = variety_equations(full);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraPoint c(4);
    for (auto& v : c) v = fx::small_rational(rng);
    if (trial % 2) {
      c[0] = 0;
      c[1] = 0;
    } else {
      c[1] = -(c[0] * c[2]);
      c[3] = 0;
    }
    REQUIRE(violated_equations(gvp, c).empty());
    CHECK(violated_equations(vp, embed_point(graded, c, full)).empty());
  }
}

TEST_CASE("pinned subvarieties") {
  auto l = fx::loops(2);
  auto ts = space(l, {"x2*x1"});
  auto vp = variety_equations(ts);
  const Path t = l.path("x2*x1");
  std::vector<Pin> phi1{{t, l.path("x1*x1"), 0}, {t, l.path("x2"), 0}, {t, l.path("x1"), 0}, {t, l.path("e_1"), 0}};
  std::vector<Pin> phi2{{t, l.path("x1*x1"), 1}, {t, l.path("x2"), 0}, {t, l.path("x1"), 0}, {t, l.path("e_1"), 0}};
  auto v1 = special_subvariety(vp, phi1);
  auto v2 = special_subvariety(vp, phi2);
  CHECK(v1.kind == VarietyKind::special);
  CHECK(equation_text(v1) == std::vector<std::string>{"x[x2*x1;x1*x1]", "x[x2*x1;x2]", "x[x2*x1;x1]", "x[x2*x1;e_1]"});
  CHECK(violated_equations(v1, {FieldValue(7), 0, 0, 0, 0}).empty());
  CHECK(violated_equations(v2, {FieldValue(7), 1, 0, 0, 0}).empty());
  CHECK_FALSE(violated_equations(v2, {FieldValue(7), 0, 0, 0, 0}).empty());
  // No point satisfies both: pinning the same coordinate to 0 and 1 leaves 1 = 0.
  std::vector<Pin> both = phi1;
  both.insert(both.end(), phi2.begin(), phi2.end());
  auto v12 = special_subvariety(vp, both);
  bool has_constant = false;
  for (const auto& f : v12.eliminated) has_constant |= f.is_constant() && !f.is_zero();
  CHECK(has_constant);

  CHECK(special_subvariety(vp, std::vector<Pin>{}).equations == vp.equations);
  CHECK_THROWS_AS(special_subvariety(vp, std::vector<Pin>{{t, l.path("x2*x2"), 0}}), ConfigError);

  // Pinning the non-graded tails to zero is the graded restriction.
  auto e = fx::eight_vertex();
  auto full = space(e, {"a*b", "b*i", "c*d*i"});
  auto evp = variety_equations(full);
  auto pinned = special_subvariety(evp, std::vector<Pin>{{e.path("c*d*i"), e.path("g*h"), 0}});
  auto gvp = variety_equations(graded_tail_space(full, WeightFunction::constant(e.quiver)));
  CHECK(pinned.eliminated.size() == gvp.equations.size());
}

TEST_CASE("admissible variety of x^3") {
  auto s = fx::one_loop();
  auto ts = space(s, {"x*x*x"});
  auto vp = admissible_equations(ts, 4);
  CHECK(vp.kind == VarietyKind::admissible);
  CHECK(vp.space.dimension() == 1);
  CHECK(equation_text(vp) == std::vector<std::string>{"x[x*x*x;x*x]^2"});
  CHECK(violated_equations(vp, {FieldValue(0)}).empty());
  CHECK_FALSE(violated_equations(vp, {FieldValue(2)}).empty());
  CHECK_NOTHROW(admissible_equations(ts, 3));
  CHECK_THROWS_AS(admissible_equations(ts, 2), MathError);
  CHECK_THROWS_AS(admissible_equations(ts, 1), ConfigError);
  auto l = fx::loops(2);
  CHECK_THROWS_AS(admissible_equations(space(l, {"x2*x1"}), 5), MathError);

  auto a = fx::linear_a3();
  auto avp = admissible_equations(space(a, {"a*b"}), 2);
  CHECK(avp.space.dimension() == 0);
  CHECK(avp.equations.empty());
}

TEST_CASE("points to algebras") {
  auto l = fx::loops(2);
  auto ts = space(l, {"x2*x1"});
  auto vp = variety_equations(ts);
  auto gb = point_to_algebra(vp, {FieldValue(1), 0, 0, 0, 0});
  REQUIRE(gb.generators.size() == 1);
  CHECK(l.show(gb.generators[0]) == "x2*x1 - x1*x2");
  auto mono = point_to_algebra(vp, AlgebraPoint(5, FieldValue(0)));
  CHECK(l.show(mono.generators[0]) == "x2*x1");

  auto gvp = variety_equations(graded_tail_space(ts, WeightFunction::constant(l.quiver)));
  CHECK(l.show(point_to_algebra(gvp, {FieldValue(1), 1}).generators[0]) == "x2*x1 - x1*x2 - x1*x1");

  auto e = fx::eight_vertex();
  auto evp = variety_equations(space(e, {"a*b", "b*i", "c*d*i"}));
  try {
    point_to_algebra(evp, {FieldValue(1), 1, 1, 0, 0});
    FAIL("expected an error");
  } catch (const MathError& err) {
    CHECK(err.code() == "E-OFF-VARIETY");
    CHECK(std::string(err.what()).find("x[a*b;c*d]*x[c*d*i;e*f*i] + x[a*b;e*f]") != std::string::npos);
  }
  CHECK_THROWS_AS(point_to_algebra(evp, {FieldValue(1)}), ConfigError);
}

TEST_CASE("algebras to points") {
  auto l = fx::loops(2);
  auto ts = space(l, {"x2*x1"});
  auto c = algebra_to_point(ts, l.elements({"x2*x1 - x1*x2"}));
  CHECK(c == AlgebraPoint{FieldValue(1), 0, 0, 0, 0});
  CHECK(algebra_to_point(ts, l.elements({"x2*x1"})) == AlgebraPoint(5, FieldValue(0)));
  CHECK(algebra_to_point(ts, l.elements({"2*x2*x1 - 2*x1*x2 + 4*e_1"})) ==
        AlgebraPoint{FieldValue(1), 0, 0, 0, FieldValue(-2)});

  try {
    algebra_to_point(ts, l.elements({"x2*x2 - x1"}));
    FAIL("expected an error");
  } catch (const MathError& err) {
    CHECK(err.code() == "E-NOT-IN-ALG");
    CHECK(std::string(err.what()).ends_with("algebra not in Alg_T; its tips are {x2*x1, x2*x2}"));
  }
  auto gts = graded_tail_space(ts, WeightFunction::constant(l.quiver));
  try {
    algebra_to_point(gts, l.elements({"x2*x1 - x1"}));
    FAIL("expected an error");
  } catch (const MathError& err) {
    CHECK(err.code() == "E-TAIL");
  }
  auto l3 = fx::loops(3);
  auto ts3 = space(l3, fx::commutator_tips(3));
  try {
    algebra_to_point(ts3, fx::commutators(l3, 3), {1, 10});
    FAIL("expected an error");
  } catch (const MathError& err) {
    CHECK(err.code() == "E-CAPPED");
  }

  auto s = fx::one_loop();
  auto cubic = space(s, {"x*x*x"});
  auto gens = s.elements({"x*x*x - x*x"});
  CHECK(violated_equations(variety_equations(cubic), algebra_to_point(cubic, gens)).empty());
  auto ad = admissible_equations(cubic, 4);
  auto p = algebra_to_point(ad.space, gens);
  CHECK(p == AlgebraPoint{FieldValue(1)});
  CHECK(violated_equations(ad, p) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(point_to_algebra(ad, p), MathError);
}

TEST_CASE("round trips through the correspondence") {
  std::mt19937_64 rng(43);
  auto l = fx::loops(2);
  auto ts = space(l, {"x2*x1"});
  auto vp = variety_equations(ts);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraPoint c(5);
    for (auto& v : c) v = fx::small_rational(rng);
    auto gb = point_to_algebra(vp, c);
    CHECK(algebra_to_point(ts, gb.generators) == c);
  }
  auto e = fx::eight_vertex();
  auto te = space(e, {"a*b", "b*i", "c*d*i"});
  auto evp = variety_equations(te);
  int tried = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto c = eight_vertex_point(rng);
    if (!violated_equations(evp, c).empty()) continue;
    ++tried;
    CHECK(algebra_to_point(te, point_to_algebra(evp, c).generators) == c);
  }
  CHECK(tried > 5);
}

TEST_CASE("parallel equation generation is deterministic") {
  auto l = fx::loops(3);
  auto ts = tail_space(l.monomial(fx::commutator_tips(3)), l.order);
  auto one = variety_equations(ts, 1);
  for (unsigned jobs : {2u, 3u, 8u}) CHECK(variety_equations(ts, jobs).equations == one.equations);
  auto s = fx::one_loop();
  auto cubic = space(s, {"x*x*x"});
  CHECK(admissible_equations(cubic, 5, 4).equations == admissible_equations(cubic, 5, 1).equations);
}
