#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pathalg/coefficients.hpp"
#include "pathalg/paths.hpp"

namespace pathalg {

/// Drops every path that has another listed path as a proper subpath, and
/// duplicates. Keeps first-seen order.
std::vector<Path> minimal_monomial_generators(const Quiver& quiver, std::span<const Path> paths);

/// The monomial algebra KQ/<T> through an automaton over the arrows that
/// accepts exactly the nontips.
///
/// States are one root per vertex plus the distinct proper nonempty prefixes
/// of tips; a state is the longest suffix of the input read so far that is
/// still a proper tip prefix. Reading an arrow that completes a tip kills
/// the run. Trivial tips kill every path through their vertex.
class MonomialData {
 public:
  using StateId = std::uint32_t;
  static constexpr StateId dead = UINT32_MAX;

  struct Transition {
    ArrowId arrow;
    StateId target;
  };

  MonomialData(const Quiver& quiver, std::span<const Path> tips);

  const Quiver& quiver() const noexcept { return quiver_; }
  /// Minimal generators of the tip ideal, in input order.
  const std::vector<Path>& tips() const noexcept { return tips_; }

  std::size_t state_count() const noexcept { return states_.size(); }
  const Path& state_path(StateId s) const { return states_.at(s); }
  VertexId state_vertex(StateId s) const { return states_.at(s).terminus(); }
  /// dead when the vertex is itself a tip.
  StateId root(VertexId v) const { return roots_.at(v.index); }
  /// Live transitions only.
  std::span<const Transition> transitions(StateId s) const { return edges_.at(s); }
  StateId step(StateId s, ArrowId a) const;

  bool accepts(const Path& p) const;

  bool is_finite_dimensional() const noexcept { return !cycle_.has_value(); }
  /// A closed walk that can be repeated forever without meeting a tip.
  const std::optional<Path>& cycle_witness() const noexcept { return cycle_; }

  /// Nontips of length <= max_len, ascending by order.
  std::vector<Path> nontips(std::size_t max_len, const PathOrder& order) const;
  /// Every nontip; throws MathError E-INFINITE naming the cycle witness.
  std::vector<Path> nontips(const PathOrder& order) const;
  /// Nontips from v to w of length <= max_len, ascending by order.
  std::vector<Path> nontips_between(VertexId v, VertexId w, std::size_t max_len, const PathOrder& order) const;

  /// nullopt when infinite.
  std::optional<BigInt> dimension() const;
  /// Length of the longest nontip; nullopt when infinite.
  std::optional<std::size_t> max_nontip_length() const;

  /// Counts of nontips per requested degree. Z-weights must be positive
  /// unless the nontip set is finite; a Z/m degree carried by infinitely
  /// many nontips raises MathError E-INFINITE-DEGREE.
  std::map<std::int64_t, BigInt> graded_dimensions(const WeightFunction& w, std::span<const std::int64_t> degrees) const;
  /// dim of the length-n part for n = 0..truncation.
  std::vector<BigInt> hilbert_series(std::size_t truncation) const;
  /// C[i][j] counts nontips from vertex i to vertex j.
  std::vector<std::vector<BigInt>> cartan_matrix() const;

  bool is_quadratic() const;
  /// True when every path of length m is a multiple of a tip.
  bool contains_arrow_power(std::size_t m) const;

  /// Paths whose maximal proper prefix and suffix are nontips but which are
  /// not themselves nontips, up to the given length; ascending by order.
  std::vector<Path> tips_from_nontips(std::size_t max_len, const PathOrder& order) const;

 private:
  void build(std::span<const Path> tips);
  void find_cycle();
  void count_paths();

  Quiver quiver_;
  std::vector<Path> tips_;
  std::vector<Path> states_;
  std::vector<StateId> roots_;
  std::vector<std::vector<Transition>> edges_;
  std::optional<Path> cycle_;
  std::vector<StateId> postorder_;  // children before parents; finite case only
  // counts_[s][v]: nontip continuations from state s ending at vertex v.
  std::vector<std::vector<BigInt>> counts_;
};

}  // namespace pathalg
