#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pathalg/element.hpp"

namespace pathalg {

struct CompletionCaps {
  std::size_t max_tip_length = 12;
  std::size_t max_pair_count = 10000;
};

enum class CompletionStatus { complete, capped_length, capped_pairs };

std::string_view to_string(CompletionStatus s);

/// Monic, uniform, pairwise tip-reduced generators. When status is
/// complete they form a Gröbner basis of the ideal they generate.
struct GroebnerBasis {
  Quiver quiver;
  PathOrder order;
  std::vector<KElement> generators;
  CompletionStatus status = CompletionStatus::complete;
  std::size_t pairs_processed = 0;

  bool is_complete() const noexcept { return status == CompletionStatus::complete; }
  std::vector<Path> tips() const;
  Reducer<FieldValue> reducer() const { return Reducer<FieldValue>(quiver, generators, order); }
};

/// Completion by overlap relations. Pairs are processed smallest overlap
/// path first. A remainder whose tip is longer than caps.max_tip_length, or
/// running past caps.max_pair_count pairs, stops the loop with a capped
/// status; the generators gathered so far are returned.
GroebnerBasis buchberger(const Quiver& quiver, std::span<const KElement> input, const PathOrder& order,
                         CompletionCaps caps = {});

/// Every generator becomes t - N_t with N_t supported on nontips, sorted by
/// tip descending. Throws MathError when gb is capped.
GroebnerBasis reduced_basis(const GroebnerBasis& gb);

enum class Membership { member, not_member, unknown };

std::string_view to_string(Membership m);

struct MembershipResult {
  Membership answer;
  ReductionTrace<FieldValue> trace;
};

/// Reduction to zero is conclusive for any basis; a nonzero remainder is
/// conclusive only for a complete one.
MembershipResult membership(const KElement& x, const GroebnerBasis& gb);

/// Tips of the reduced basis: the minimal generators of the tip ideal.
std::vector<Path> associated_monomial(const GroebnerBasis& gb);

/// Independent certificate: every overlap of every pair, self-pairs
/// included, reduces to zero by gens.
bool is_groebner_basis(const Quiver& quiver, std::span<const KElement> gens, const PathOrder& order);

}  // namespace pathalg
