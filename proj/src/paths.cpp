#include "pathalg/paths.hpp"

#include <algorithm>
#include <set>

#include "pathalg/error.hpp"

namespace pathalg {

namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool valid_vertex_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_name_char);
}

bool valid_arrow_name(std::string_view s) {
  if (s.empty() || (s[0] >= '0' && s[0] <= '9')) return false;
  if (s.size() >= 2 && s[0] == 'e' && s[1] == '_') return false;
  return std::all_of(s.begin(), s.end(), is_name_char);
}

}  // namespace

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.terminus() != q.origin()) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<ArrowId> arrows(p.arrows().begin(), p.arrows().end());
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path::from_parts(p.origin(), q.terminus(), std::move(arrows));
}

Path concat(const Path& r, const Path& p, const Path& s) {
  std::vector<ArrowId> arrows;
  arrows.reserve(r.length() + p.length() + s.length());
  arrows.insert(arrows.end(), r.arrows().begin(), r.arrows().end());
  arrows.insert(arrows.end(), p.arrows().begin(), p.arrows().end());
  arrows.insert(arrows.end(), s.arrows().begin(), s.arrows().end());
  return Path::from_parts(r.origin(), s.terminus(), std::move(arrows));
}

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)), outgoing_(vertices_.size()) {
  std::set<std::string, std::less<>> names;
  for (const auto& v : vertices_) {
    if (!valid_vertex_name(v)) throw ConfigError("invalid vertex name '" + v + "'");
    if (!names.insert(v).second) throw ConfigError("duplicate vertex name '" + v + "'");
  }
  for (const auto& spec : arrows) {
    if (!valid_arrow_name(spec.name)) throw ConfigError("invalid arrow name '" + spec.name + "'");
    if (!names.insert(spec.name).second) throw ConfigError("duplicate name '" + spec.name + "'");
    auto src = find_vertex(spec.source);
    auto dst = find_vertex(spec.target);
    if (!src) throw ConfigError("arrow '" + spec.name + "': unknown vertex '" + spec.source + "'");
    if (!dst) throw ConfigError("arrow '" + spec.name + "': unknown vertex '" + spec.target + "'");
    ArrowId id{static_cast<std::uint32_t>(arrows_.size())};
    arrows_.push_back(Arrow{spec.name, *src, *dst});
    outgoing_[src->index].push_back(id);
  }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return VertexId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return ArrowId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

Path Quiver::make_path(VertexId origin, std::vector<ArrowId> arrows) const {
  if (origin.index >= vertices_.size()) throw ConfigError("vertex id out of range");
  VertexId at = origin;
  for (ArrowId a : arrows) {
    if (a.index >= arrows_.size()) throw ConfigError("arrow id out of range");
    const Arrow& arr = arrows_[a.index];
    if (arr.source != at)
      throw ConfigError("arrow '" + arr.name + "' does not start at vertex '" + vertices_[at.index] + "'");
    at = arr.target;
  }
  return Path::from_parts(origin, at, std::move(arrows));
}

Path Quiver::arrow_path(ArrowId a) const {
  const Arrow& arr = arrow(a);
  return Path::from_parts(arr.source, arr.target, {a});
}

VertexId Quiver::vertex_at(const Path& p, std::size_t i) const {
  if (i == 0) return p.origin();
  return arrow(p[i - 1]).target;
}

Path Quiver::slice(const Path& p, std::size_t begin, std::size_t end) const {
  if (begin == end) return Path::trivial(vertex_at(p, begin));
  std::vector<ArrowId> arrows(p.arrows().begin() + static_cast<std::ptrdiff_t>(begin),
                              p.arrows().begin() + static_cast<std::ptrdiff_t>(end));
  const VertexId origin = arrow(arrows.front()).source;
  const VertexId terminus = arrow(arrows.back()).target;
  return Path::from_parts(origin, terminus, std::move(arrows));
}

std::string Quiver::format(const Path& p) const {
  if (p.is_trivial()) return "e_" + vertex_name(p.origin());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += '*';
    out += arrow(p[i]).name;
  }
  return out;
}

Path Quiver::parse_path(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ConfigError("empty path");
  if (text.size() > 2 && text[0] == 'e' && text[1] == '_' && text.find('*') == std::string_view::npos) {
    auto v = find_vertex(text.substr(2));
    if (!v) throw ConfigError("unknown vertex '" + std::string(text.substr(2)) + "'");
    return Path::trivial(*v);
  }
  std::vector<ArrowId> arrows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view tok = trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    auto a = find_arrow(tok);
    if (!a) throw ConfigError("unknown arrow '" + std::string(tok) + "'");
    arrows.push_back(*a);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  VertexId origin = arrow(arrows.front()).source;
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    if (arrow(arrows[i - 1]).target != arrow(arrows[i]).source)
      throw ConfigError("path '" + std::string(text) + "' does not compose at '" + arrow(arrows[i]).name + "'");
  }
  return make_path(origin, std::move(arrows));
}

std::vector<VertexId> Quiver::vertices() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) out.push_back(VertexId{i});
  return out;
}

std::vector<ArrowId> Quiver::arrows() const {
  std::vector<ArrowId> out;
  for (std::uint32_t i = 0; i < arrows_.size(); ++i) out.push_back(ArrowId{i});
  return out;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

std::vector<Factorization> subpath_occurrences(const Quiver& quiver, const Path& p, const Path& q) {
  std::vector<Factorization> out;
  if (p.length() > q.length()) return out;
  for (std::size_t i = 0; i + p.length() <= q.length(); ++i) {
    if (p.is_trivial()) {
      if (quiver.vertex_at(q, i) != p.origin()) continue;
    } else if (!std::equal(p.arrows().begin(), p.arrows().end(), q.arrows().begin() + static_cast<std::ptrdiff_t>(i))) {
      continue;
    }
    out.push_back({quiver.slice(q, 0, i), quiver.slice(q, i + p.length(), q.length())});
  }
  return out;
}

bool is_subpath(const Quiver& quiver, const Path& p, const Path& q) {
  if (p.length() > q.length()) return false;
  if (p.is_trivial()) {
    for (std::size_t i = 0; i <= q.length(); ++i)
      if (quiver.vertex_at(q, i) == p.origin()) return true;
    return false;
  }
  return std::search(q.arrows().begin(), q.arrows().end(), p.arrows().begin(), p.arrows().end()) !=
         q.arrows().end();
}

std::vector<Path> enumerate_paths_of_length(const Quiver& quiver, std::size_t len) {
  std::vector<Path> layer;
  for (VertexId v : quiver.vertices()) layer.push_back(Path::trivial(v));
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Path> next;
    for (const Path& p : layer)
      for (ArrowId a : quiver.arrows_from(p.terminus())) next.push_back(*compose(p, quiver.arrow_path(a)));
    layer = std::move(next);
  }
  return layer;
}

std::vector<Path> enumerate_paths(const Quiver& quiver, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (VertexId v : quiver.vertices()) layer.push_back(Path::trivial(v));
  for (std::size_t l = 0;; ++l) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (l == max_len) break;
    std::vector<Path> next;
    for (const Path& p : layer)
      for (ArrowId a : quiver.arrows_from(p.terminus())) next.push_back(*compose(p, quiver.arrow_path(a)));
    layer = std::move(next);
  }
  return out;
}

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::length_lexicographic:
      return "length-lexicographic";
    case OrderKind::length_left_lexicographic:
      return "length-left-lexicographic";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "length-lexicographic") return OrderKind::length_lexicographic;
  if (text == "length-left-lexicographic") return OrderKind::length_left_lexicographic;
  throw ConfigError("unsupported path order '" + std::string(text) +
                    "' (admissible orders: length-lexicographic, length-left-lexicographic)");
}

PathOrder::PathOrder(const Quiver& quiver, OrderKind kind, std::vector<ArrowId> arrows_descending,
                     std::vector<VertexId> vertices_descending)
    : kind_(kind),
      arrows_desc_(std::move(arrows_descending)),
      vertices_desc_(std::move(vertices_descending)),
      arrow_rank_(quiver.arrow_count(), 0),
      vertex_rank_(quiver.vertex_count(), 0) {
  if (arrows_desc_.size() != quiver.arrow_count())
    throw ConfigError("arrow precedence must list every arrow exactly once");
  if (vertices_desc_.size() != quiver.vertex_count())
    throw ConfigError("vertex precedence must list every vertex exactly once");
  std::vector<bool> seen(quiver.arrow_count(), false);
  for (std::size_t i = 0; i < arrows_desc_.size(); ++i) {
    auto idx = arrows_desc_[i].index;
    if (idx >= seen.size() || seen[idx]) throw ConfigError("arrow precedence must list every arrow exactly once");
    seen[idx] = true;
    arrow_rank_[idx] = static_cast<std::uint32_t>(arrows_desc_.size() - i);
  }
  std::vector<bool> vseen(quiver.vertex_count(), false);
  for (std::size_t i = 0; i < vertices_desc_.size(); ++i) {
    auto idx = vertices_desc_[i].index;
    if (idx >= vseen.size() || vseen[idx]) throw ConfigError("vertex precedence must list every vertex exactly once");
    vseen[idx] = true;
    vertex_rank_[idx] = static_cast<std::uint32_t>(vertices_desc_.size() - i);
  }
}

PathOrder PathOrder::declaration_order(const Quiver& quiver, OrderKind kind) {
  return PathOrder(quiver, kind, quiver.arrows(), quiver.vertices());
}

std::strong_ordering PathOrder::compare(const Path& p, const Path& q) const {
  if (auto c = p.length() <=> q.length(); c != 0) return c;
  if (p.is_trivial()) return vertex_rank_[p.origin().index] <=> vertex_rank_[q.origin().index];
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (p[i] == q[i]) continue;
    return arrow_rank_[p[i].index] <=> arrow_rank_[q[i].index];
  }
  return std::strong_ordering::equal;
}

void sort_descending(std::vector<Path>& paths, const PathOrder& order) {
  std::sort(paths.begin(), paths.end(), DescendingBy{&order});
}

void sort_ascending(std::vector<Path>& paths, const PathOrder& order) {
  std::sort(paths.begin(), paths.end(), [&](const Path& a, const Path& b) { return order.compare(a, b) < 0; });
}

WeightGroup WeightGroup::cyclic(std::int64_t modulus) {
  if (modulus < 1) throw ConfigError("cyclic weight group needs a positive modulus");
  return WeightGroup(modulus);
}

std::int64_t WeightGroup::normalize(std::int64_t g) const {
  if (modulus_ == 0) return g;
  std::int64_t r = g % modulus_;
  return r < 0 ? r + modulus_ : r;
}

WeightFunction::WeightFunction(WeightGroup group, std::vector<std::optional<std::int64_t>> arrow_weights)
    : group_(group), weights_(std::move(arrow_weights)) {
  for (auto& w : weights_)
    if (w) w = group_.normalize(*w);
}

WeightFunction WeightFunction::constant(const Quiver& quiver, std::int64_t w, WeightGroup group) {
  return WeightFunction(group, std::vector<std::optional<std::int64_t>>(quiver.arrow_count(), w));
}

std::int64_t WeightFunction::weight(const Path& p) const {
  std::int64_t total = group_.identity();
  for (ArrowId a : p.arrows()) {
    if (a.index >= weights_.size() || !weights_[a.index])
      throw ConfigError("arrow #" + std::to_string(a.index) + " has no weight");
    total = group_.add(total, *weights_[a.index]);
  }
  return total;
}

bool WeightFunction::is_positive() const {
  if (!group_.is_integers()) return false;
  return std::all_of(weights_.begin(), weights_.end(), [](const auto& w) { return w && *w >= 1; });
}

}  // namespace pathalg
