#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathalg/element.hpp"
#include "pathalg/groebner.hpp"
#include "pathalg/monomial.hpp"

namespace pathalg {

/// For each tip t the nontips parallel to and ≻-below t, and one variable
/// x[t;n] per pair. Variables are numbered tip by tip, tails descending.
class TailSpace {
 public:
  struct Entry {
    std::size_t tip;
    Path tail;
  };

  TailSpace(MonomialData md, PathOrder order, std::vector<std::vector<Path>> tails);

  const Quiver& quiver() const noexcept { return md_.quiver(); }
  const MonomialData& monomial() const noexcept { return md_; }
  const PathOrder& order() const noexcept { return order_; }
  const std::vector<Path>& tips() const noexcept { return md_.tips(); }
  const std::vector<Path>& tails(std::size_t tip) const { return tails_.at(tip); }
  const VariableTable& variables() const noexcept { return vars_; }
  const Entry& entry(VarId v) const { return entries_.at(v); }
  std::size_t dimension() const noexcept { return entries_.size(); }

  std::optional<std::size_t> tip_index(const Path& t) const;
  std::optional<VarId> variable(std::size_t tip, const Path& tail) const;

  /// h_t = t - sum x[t;n] n, in tip order.
  std::vector<SymbolicElement> generators() const;

 private:
  MonomialData md_;
  PathOrder order_;
  std::vector<std::vector<Path>> tails_;
  std::vector<Entry> entries_;
  std::vector<VarId> offsets_;  // first variable of each tip
  VariableTable vars_;
};

/// Every tip must have length >= 2.
TailSpace tail_space(const MonomialData& md, const PathOrder& order);
/// Keeps tails n with l(n) >= 1 and W(n) = W(t).
TailSpace graded_tail_space(const TailSpace& ts, const WeightFunction& w);

enum class VarietyKind { plain, graded, special, admissible };

std::string_view to_string(VarietyKind k);

struct Pin {
  Path tip;
  Path tail;
  FieldValue value;
};

struct OverlapRecord {
  std::size_t first;   // tip indices
  std::size_t second;
  Path left;           // n
  Path right;          // m
  SymbolicElement relation;
};

struct VarietyPresentation {
  TailSpace space;
  VarietyKind kind = VarietyKind::plain;
  std::vector<SymbolicElement> generators;
  std::vector<OverlapRecord> overlaps;
  /// Overlap coefficients (and, for the admissible kind, length-m
  /// coefficients), followed by x - value for each pin in the special kind.
  std::vector<Polynomial> equations;
  /// Special kind: the overlap equations with pinned variables substituted.
  std::vector<Polynomial> eliminated;
  std::vector<Pin> pins;
  std::optional<std::size_t> power;  // m for the admissible kind
};

/// Sign-normalized, zero-free, duplicate-free coefficient polynomials of
/// the complete reductions of all overlaps (self-overlaps included), in the
/// order (t, t', overlap, n descending). jobs > 1 reduces overlaps
/// concurrently; the result does not depend on it.
VarietyPresentation variety_equations(const TailSpace& ts, unsigned jobs = 1);

/// Appends x[t;n] - value per pin. Throws ConfigError when n is not a tail of t.
VarietyPresentation special_subvariety(const VarietyPresentation& vp, std::span<const Pin> pins);

/// Needs m >= 2 and every nontip of length <= m-1. Tails shorter than 2 are
/// dropped; equations also force every length-m path to reduce to zero.
VarietyPresentation admissible_equations(const TailSpace& ts, std::size_t m, unsigned jobs = 1);

/// Values indexed by VarId.
using AlgebraPoint = std::vector<FieldValue>;

/// Indices of equations that do not vanish at c.
std::vector<std::size_t> violated_equations(const VarietyPresentation& vp, const AlgebraPoint& c);

/// The basis {t - sum c[t;n] n}. Checks the equations, then separately
/// certifies that every overlap (and every length-m path for the admissible
/// kind) reduces to zero. Throws MathError E-OFF-VARIETY / E-CERTIFY.
GroebnerBasis point_to_algebra(const VarietyPresentation& vp, const AlgebraPoint& c);

/// Completes X, reduces, and reads off c[t;n] = -coefficient of n in g_t.
/// Throws MathError when completion is capped (E-CAPPED), when the tip set
/// differs from the tail space's (E-NOT-IN-ALG), or when a tail falls
/// outside the space's variables (E-TAIL).
AlgebraPoint algebra_to_point(const TailSpace& ts, std::span<const KElement> x, CompletionCaps caps = {});

/// Extends a point of a sub-space (fewer tails) by zeros.
AlgebraPoint embed_point(const TailSpace& sub, const AlgebraPoint& c, const TailSpace& full);

/// `x[a*b;c*d]`.
std::string variable_name(const Quiver& quiver, const Path& tip, const Path& tail);

}  // namespace pathalg
