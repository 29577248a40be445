#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathalg/element.hpp"
#include "pathalg/groebner.hpp"
#include "pathalg/monomial.hpp"
#include "pathalg/paths.hpp"

namespace fx {

using namespace pathalg;

struct Setup {
  Quiver quiver;
  PathOrder order;

  Path path(std::string_view text) const { return quiver.parse_path(text); }
  KElement element(std::string_view text) const { return parse_element(text, quiver); }
  std::vector<Path> paths(const std::vector<std::string>& texts) const;
  std::vector<KElement> elements(const std::vector<std::string>& texts) const;
  std::string show(const Path& p) const { return quiver.format(p); }
  std::string show(const KElement& x) const { return format_element(x, quiver, order); }
  std::vector<std::string> show(const std::vector<Path>& ps) const;
  MonomialData monomial(const std::vector<std::string>& tips) const;
};

/// One vertex "1" with loops x1..xn, precedence xn > ... > x1 so that
/// x_i x_j with i > j is the larger of x_i x_j, x_j x_i.
Setup loops(std::size_t n);
/// One vertex with a single loop x.
Setup one_loop();
/// 1 -> 2 -> 3 with arrows a, b.
Setup linear_a3();
/// The 8-vertex quiver with arrows a..k, a > b > ... > k, length-left-lexicographic.
Setup eight_vertex();
/// Vertices only, no arrows.
Setup arrowless(std::size_t vertices);

/// x_i x_j - x_j x_i for n >= i > j >= 1.
std::vector<KElement> commutators(const Setup& s, std::size_t n);
/// Tips x_i x_j, i > j.
std::vector<std::string> commutator_tips(std::size_t n);

/// Small rationals p/q with |p| <= 5, 1 <= q <= 3.
FieldValue small_rational(std::mt19937_64& rng);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace fx
