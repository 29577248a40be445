#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pathalg/monomial.hpp"

namespace pathalg {

struct Chain {
  Path path;
  /// The part added by the last extension (the whole arrow in degree 1,
  /// the trivial path in degree 0).
  Path last;
};

/// chains[n] lists the n-chains starting at one vertex, in discovery order.
struct ChainFamily {
  VertexId start;
  std::vector<std::vector<Chain>> chains;
};

/// Chains of the monomial algebra up to degree n_max. Degree 0 is the
/// vertex, degree 1 its outgoing arrows, and an (n+1)-chain extends an
/// n-chain c by the shortest u such that last(c)*u ends in a tip that
/// starts inside last(c). Needs every tip of length >= 2.
ChainFamily chains(const MonomialData& md, VertexId v, std::size_t n_max);

/// betti[n][w]: n-chains from the start vertex ending at w.
using BettiTable = std::vector<std::vector<std::size_t>>;

BettiTable betti(const MonomialData& md, VertexId v, std::size_t n_max);

struct GlobalDimension {
  std::size_t value = 0;
  bool at_least = false;  // chains still alive at degree `value`
};

/// Largest degree with a chain at any vertex, or at-least(cap) when some
/// vertex still has chains in degree cap.
GlobalDimension global_dimension(const MonomialData& md, std::size_t cap);

/// Exact determinant by fraction-free elimination.
BigInt determinant(std::vector<std::vector<BigInt>> m);

enum class CartanVerdict { pass, fail, no_claim };

std::string_view to_string(CartanVerdict v);

struct CartanReport {
  BigInt det;
  GlobalDimension gldim;
  CartanVerdict verdict;
};

/// Finite global dimension below cap predicts det = 1; otherwise no claim.
/// Throws MathError when the nontip set is infinite.
CartanReport cartan_check(const MonomialData& md, std::size_t cap);

/// Row vector sum_n (-1)^n betti[n].
std::vector<BigInt> euler_characteristic(const BettiTable& table);

}  // namespace pathalg
