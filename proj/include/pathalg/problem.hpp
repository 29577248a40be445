#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathalg/element.hpp"
#include "pathalg/paths.hpp"

namespace pathalg {

/// Diagnostic codes raised as ParseError::code().
namespace diag {
inline constexpr std::string_view unknown_arrow = "E001";
inline constexpr std::string_view non_composing = "E002";
inline constexpr std::string_view duplicate_name = "E003";
inline constexpr std::string_view missing_section = "E004";
inline constexpr std::string_view syntax = "E005";
inline constexpr std::string_view unknown_vertex = "E006";
inline constexpr std::string_view tips_and_generators = "E007";
inline constexpr std::string_view bad_value = "E008";
inline constexpr std::string_view unknown_section = "E009";
}  // namespace diag

struct PhiEntry {
  Path tip;
  Path tail;
  FieldValue value;
  friend bool operator==(const PhiEntry&, const PhiEntry&) = default;
};

/// A validated problem description. Exactly one of tips / generators is set.
struct ProblemFile {
  Quiver quiver;
  OrderKind order_kind = OrderKind::length_lexicographic;
  std::vector<ArrowId> arrow_precedence;   // largest first
  std::vector<VertexId> vertex_precedence;  // largest first
  std::optional<WeightFunction> weights;
  std::optional<std::vector<Path>> tips;
  std::optional<std::vector<KElement>> generators;
  std::vector<PhiEntry> phi;
  std::optional<std::size_t> admissible_m;

  PathOrder order() const;
  friend bool operator==(const ProblemFile&, const ProblemFile&);
};

/// Throws ParseError. Coefficients are read in GF(modulus) when modulus != 0.
ProblemFile parse_problem(std::string_view text, std::uint64_t modulus = 0);

/// Canonical text; parse_problem(print_problem(p)) == p.
std::string print_problem(const ProblemFile& p);

}  // namespace pathalg
