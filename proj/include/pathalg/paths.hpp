#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathalg {

struct VertexId {
  std::uint32_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct ArrowId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ArrowId&, const ArrowId&) = default;
};

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

/// A directed path: an origin vertex plus a composable arrow sequence.
/// The empty sequence is the trivial path (the vertex itself).
class Path {
 public:
  Path() = default;

  static Path trivial(VertexId v) { return Path(v, v, {}); }

  /// No composability check; callers guarantee consistent endpoints.
  static Path from_parts(VertexId origin, VertexId terminus, std::vector<ArrowId> arrows) {
    return Path(origin, terminus, std::move(arrows));
  }

  VertexId origin() const noexcept { return origin_; }
  VertexId terminus() const noexcept { return terminus_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  bool is_trivial() const noexcept { return arrows_.empty(); }
  std::span<const ArrowId> arrows() const noexcept { return arrows_; }
  ArrowId operator[](std::size_t i) const { return arrows_[i]; }

  bool parallel_to(const Path& other) const noexcept {
    return origin_ == other.origin_ && terminus_ == other.terminus_;
  }

  /// Structural order (origin, then arrow ids). Not an admissible order.
  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;

 private:
  Path(VertexId o, VertexId t, std::vector<ArrowId> a) : origin_(o), terminus_(t), arrows_(std::move(a)) {}

  VertexId origin_;
  VertexId terminus_;
  std::vector<ArrowId> arrows_;
};

/// Concatenation; nullopt when the terminus of p differs from the origin of q
/// (the product is zero in the path algebra).
std::optional<Path> compose(const Path& p, const Path& q);

/// Concatenation r*p*s where all junctions are known to match.
Path concat(const Path& r, const Path& p, const Path& s);

struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v.index); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a.index); }
  std::span<const ArrowId> arrows_from(VertexId v) const { return outgoing_.at(v.index); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  /// Throws ConfigError when the arrows do not compose.
  Path make_path(VertexId origin, std::vector<ArrowId> arrows) const;
  Path arrow_path(ArrowId a) const;

  /// Vertex reached after the first `i` arrows of p.
  VertexId vertex_at(const Path& p, std::size_t i) const;
  /// Arrows [begin, end) of p as a path of its own.
  Path slice(const Path& p, std::size_t begin, std::size_t end) const;

  /// `a*b*c` for arrows, `e_<vertex>` for trivial paths.
  std::string format(const Path& p) const;
  /// Inverse of format. Throws ConfigError with a message naming the offending token.
  Path parse_path(std::string_view text) const;

  std::vector<VertexId> vertices() const;
  std::vector<ArrowId> arrows() const;

  friend bool operator==(const Quiver&, const Quiver&);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> outgoing_;
};

struct Factorization {
  Path left;
  Path right;
};

/// All factorizations q = r*p*s, ordered by length of r.
std::vector<Factorization> subpath_occurrences(const Quiver& quiver, const Path& p, const Path& q);

/// True when p occurs inside q.
bool is_subpath(const Quiver& quiver, const Path& p, const Path& q);

/// All paths of length <= max_len: by length, then by vertex/arrow declaration order.
std::vector<Path> enumerate_paths(const Quiver& quiver, std::size_t max_len);
/// All paths of length exactly len.
std::vector<Path> enumerate_paths_of_length(const Quiver& quiver, std::size_t len);

enum class OrderKind { length_lexicographic, length_left_lexicographic };

std::string_view to_string(OrderKind kind);
/// Rejects anything that is not a supported admissible order.
OrderKind parse_order_kind(std::string_view text);

/// Length first, then arrow-by-arrow from the left by arrow precedence.
/// Trivial paths compare by vertex precedence and sit below every arrow.
/// Both kinds share this rule.
class PathOrder {
 public:
  PathOrder() = default;
  /// Precedence lists are given largest first and must be permutations.
  PathOrder(const Quiver& quiver, OrderKind kind, std::vector<ArrowId> arrows_descending,
            std::vector<VertexId> vertices_descending);

  /// Earlier-declared arrows and vertices are larger.
  static PathOrder declaration_order(const Quiver& quiver,
                                     OrderKind kind = OrderKind::length_lexicographic);

  std::strong_ordering compare(const Path& p, const Path& q) const;
  bool greater(const Path& p, const Path& q) const { return compare(p, q) > 0; }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<ArrowId>& arrow_precedence() const noexcept { return arrows_desc_; }
  const std::vector<VertexId>& vertex_precedence() const noexcept { return vertices_desc_; }

  /// l(p) > l(q) implies p > q. Holds for both built-in kinds.
  bool respects_length() const noexcept { return true; }

 private:
  OrderKind kind_ = OrderKind::length_lexicographic;
  std::vector<ArrowId> arrows_desc_;
  std::vector<VertexId> vertices_desc_;
  std::vector<std::uint32_t> arrow_rank_;
  std::vector<std::uint32_t> vertex_rank_;
};

/// Comparator placing ≻-larger paths first.
struct DescendingBy {
  const PathOrder* order;
  bool operator()(const Path& p, const Path& q) const { return order->greater(p, q); }
};

void sort_descending(std::vector<Path>& paths, const PathOrder& order);
void sort_ascending(std::vector<Path>& paths, const PathOrder& order);

/// The integers (modulus 0) or Z/m.
class WeightGroup {
 public:
  static WeightGroup integers() { return WeightGroup(0); }
  static WeightGroup cyclic(std::int64_t modulus);

  bool is_integers() const noexcept { return modulus_ == 0; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::int64_t identity() const noexcept { return 0; }
  std::int64_t normalize(std::int64_t g) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const { return normalize(a + b); }

  friend bool operator==(const WeightGroup&, const WeightGroup&) = default;

 private:
  explicit WeightGroup(std::int64_t m) : modulus_(m) {}
  std::int64_t modulus_;
};

class WeightFunction {
 public:
  WeightFunction(WeightGroup group, std::vector<std::optional<std::int64_t>> arrow_weights);

  /// Every arrow gets weight w (the length grading when w = 1).
  static WeightFunction constant(const Quiver& quiver, std::int64_t w = 1,
                                 WeightGroup group = WeightGroup::integers());

  const WeightGroup& group() const noexcept { return group_; }
  std::optional<std::int64_t> arrow_weight(ArrowId a) const { return weights_.at(a.index); }
  std::size_t arrow_count() const noexcept { return weights_.size(); }

  /// Throws ConfigError when an arrow of p has no weight.
  std::int64_t weight(const Path& p) const;

  /// Z-valued with every arrow weight >= 1.
  bool is_positive() const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  WeightGroup group_;
  std::vector<std::optional<std::int64_t>> weights_;
};

}  // namespace pathalg
