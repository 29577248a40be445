#include "pathalg/monomial.hpp"

#include <algorithm>
#include <functional>

#include "pathalg/error.hpp"

namespace pathalg {

std::vector<Path> minimal_monomial_generators(const Quiver& quiver, std::span<const Path> paths) {
  std::vector<Path> unique;
  for (const Path& p : paths)
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
  std::vector<Path> out;
  for (const Path& p : unique) {
    bool redundant = std::any_of(unique.begin(), unique.end(),
                                 [&](const Path& q) { return q != p && is_subpath(quiver, q, p); });
    if (!redundant) out.push_back(p);
  }
  return out;
}

MonomialData::MonomialData(const Quiver& quiver, std::span<const Path> tips) : quiver_(quiver) {
  build(tips);
  find_cycle();
  if (!cycle_) count_paths();
}

void MonomialData::build(std::span<const Path> tips) {
  tips_ = minimal_monomial_generators(quiver_, tips);
  std::set<Path> tipset(tips_.begin(), tips_.end());
  std::vector<bool> dead_vertex(quiver_.vertex_count(), false);
  for (const Path& t : tips_)
    if (t.is_trivial()) dead_vertex[t.origin().index] = true;

  std::set<Path> prefixes;
  for (const Path& t : tips_)
    for (std::size_t k = 1; k < t.length(); ++k) prefixes.insert(quiver_.slice(t, 0, k));

  std::map<Path, StateId> index;
  for (VertexId v : quiver_.vertices()) {
    states_.push_back(Path::trivial(v));
    roots_.push_back(dead_vertex[v.index] ? dead : static_cast<StateId>(v.index));
  }
  std::vector<Path> ordered(prefixes.begin(), prefixes.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Path& a, const Path& b) { return a.length() < b.length(); });
  for (const Path& p : ordered) {
    index.emplace(p, static_cast<StateId>(states_.size()));
    states_.push_back(p);
  }

  edges_.assign(states_.size(), {});
  for (StateId s = 0; s < states_.size(); ++s) {
    const Path& sp = states_[s];
    if (sp.is_trivial() && roots_[sp.origin().index] == dead) continue;
    for (ArrowId a : quiver_.arrows_from(sp.terminus())) {
      const Arrow& arr = quiver_.arrow(a);
      if (dead_vertex[arr.target.index]) continue;
      Path w = concat(sp, Path::trivial(arr.source), quiver_.arrow_path(a));
      bool killed = false;
      for (std::size_t j = 1; j <= w.length() && !killed; ++j)
        killed = tipset.count(quiver_.slice(w, w.length() - j, w.length())) > 0;
      if (killed) continue;
      StateId target = roots_[arr.target.index];
      for (std::size_t j = std::min(w.length(), ordered.empty() ? 0 : ordered.back().length()); j >= 1; --j) {
        auto it = index.find(quiver_.slice(w, w.length() - j, w.length()));
        if (it != index.end()) {
          target = it->second;
          break;
        }
      }
      edges_[s].push_back({a, target});
    }
  }
}

void MonomialData::find_cycle() {
  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> colour(states_.size(), white);
  struct Frame {
    StateId state;
    std::size_t next_edge;
  };
  for (StateId r : roots_) {
    if (r == dead || colour[r] != white) continue;
    std::vector<Frame> stack{{r, 0}};
    colour[r] = grey;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_edge == edges_[f.state].size()) {
        colour[f.state] = black;
        postorder_.push_back(f.state);
        stack.pop_back();
        continue;
      }
      const Transition& e = edges_[f.state][f.next_edge++];
      if (colour[e.target] == grey) {
        // Arrows from e.target around the stack back to it.
        std::vector<ArrowId> arrows;
        std::size_t start = 0;
        while (stack[start].state != e.target) ++start;
        for (std::size_t i = start; i + 1 < stack.size(); ++i)
          arrows.push_back(edges_[stack[i].state][stack[i].next_edge - 1].arrow);
        arrows.push_back(e.arrow);
        VertexId v = state_vertex(e.target);
        cycle_ = Path::from_parts(v, v, std::move(arrows));
        postorder_.clear();
        return;
      }
      if (colour[e.target] == white) {
        colour[e.target] = grey;
        stack.push_back({e.target, 0});
      }
    }
  }
}

void MonomialData::count_paths() {
  counts_.assign(states_.size(), std::vector<BigInt>(quiver_.vertex_count(), BigInt(0)));
  for (StateId s : postorder_) {
    auto& row = counts_[s];
    row[state_vertex(s).index] += 1;
    for (const Transition& e : edges_[s])
      for (std::size_t v = 0; v < row.size(); ++v) row[v] += counts_[e.target][v];
  }
}

MonomialData::StateId MonomialData::step(StateId s, ArrowId a) const {
  if (s == dead) return dead;
  for (const Transition& e : edges_.at(s))
    if (e.arrow == a) return e.target;
  return dead;
}

bool MonomialData::accepts(const Path& p) const {
  StateId s = root(p.origin());
  for (ArrowId a : p.arrows()) {
    if (s == dead) return false;
    s = step(s, a);
  }
  return s != dead;
}

namespace {

struct Run {
  Path path;
  MonomialData::StateId state;
};

}  // namespace

std::vector<Path> MonomialData::nontips(std::size_t max_len, const PathOrder& order) const {
  std::vector<Path> out;
  std::vector<Run> frontier;
  for (VertexId v : quiver_.vertices())
    if (root(v) != dead) frontier.push_back({Path::trivial(v), root(v)});
  for (std::size_t len = 0; !frontier.empty(); ++len) {
    std::vector<Run> next;
    for (const Run& r : frontier) {
      out.push_back(r.path);
      if (len == max_len) continue;
      for (const Transition& e : edges_[r.state])
        next.push_back({concat(r.path, Path::trivial(r.path.terminus()), quiver_.arrow_path(e.arrow)), e.target});
    }
    frontier = std::move(next);
  }
  sort_ascending(out, order);
  return out;
}

std::vector<Path> MonomialData::nontips(const PathOrder& order) const {
  if (cycle_) throw MathError("E-INFINITE", "nontip set is infinite: the cycle " + quiver_.format(*cycle_) + " repeats");
  return nontips(max_nontip_length().value_or(0), order);
}

std::vector<Path> MonomialData::nontips_between(VertexId v, VertexId w, std::size_t max_len,
                                                const PathOrder& order) const {
  std::vector<Path> out;
  if (root(v) == dead) return out;
  std::vector<Run> frontier{{Path::trivial(v), root(v)}};
  for (std::size_t len = 0; !frontier.empty(); ++len) {
    std::vector<Run> next;
    for (const Run& r : frontier) {
      if (r.path.terminus() == w) out.push_back(r.path);
      if (len == max_len) continue;
      for (const Transition& e : edges_[r.state])
        next.push_back({concat(r.path, Path::trivial(r.path.terminus()), quiver_.arrow_path(e.arrow)), e.target});
    }
    frontier = std::move(next);
  }
  sort_ascending(out, order);
  return out;
}

std::optional<BigInt> MonomialData::dimension() const {
  if (cycle_) return std::nullopt;
  BigInt total = 0;
  for (StateId r : roots_) {
    if (r == dead) continue;
    for (const BigInt& c : counts_[r]) total += c;
  }
  return total;
}

std::optional<std::size_t> MonomialData::max_nontip_length() const {
  if (cycle_) return std::nullopt;
  std::vector<std::size_t> longest(states_.size(), 0);
  for (StateId s : postorder_)
    for (const Transition& e : edges_[s]) longest[s] = std::max(longest[s], longest[e.target] + 1);
  std::size_t best = 0;
  for (StateId r : roots_)
    if (r != dead) best = std::max(best, longest[r]);
  return best;
}

std::map<std::int64_t, BigInt> MonomialData::graded_dimensions(const WeightFunction& w,
                                                               std::span<const std::int64_t> degrees) const {
  auto arrow_weight = [&](ArrowId a) {
    auto v = w.arrow_weight(a);
    if (!v) throw ConfigError("arrow '" + quiver_.arrow(a).name + "' has no weight");
    return *v;
  };
  std::map<std::int64_t, BigInt> out;
  const WeightGroup& group = w.group();

  if (group.is_integers() && !cycle_) {
    // Weight distribution of the paths leaving each state.
    std::vector<std::map<std::int64_t, BigInt>> dist(states_.size());
    for (StateId s : postorder_) {
      auto& d = dist[s];
      d[0] += 1;
      for (const Transition& e : edges_[s]) {
        std::int64_t c = arrow_weight(e.arrow);
        for (const auto& [g, n] : dist[e.target]) d[g + c] += n;
      }
    }
    for (std::int64_t g : degrees) {
      BigInt total = 0;
      for (StateId r : roots_) {
        if (r == dead) continue;
        auto it = dist[r].find(g);
        if (it != dist[r].end()) total += it->second;
      }
      out[g] = total;
    }
    return out;
  }

  if (group.is_integers()) {
    if (!w.is_positive())
      throw MathError("E-GRADING", "infinite nontip set needs every arrow weight to be a positive integer");
    std::int64_t top = 0;
    for (std::int64_t g : degrees) top = std::max(top, g);
    std::vector<std::map<StateId, BigInt>> layer(static_cast<std::size_t>(top) + 1);
    for (StateId r : roots_)
      if (r != dead) layer[0][r] += 1;
    for (std::int64_t g = 0; g <= top; ++g) {
      for (const auto& [s, n] : layer[static_cast<std::size_t>(g)]) {
        for (const Transition& e : edges_[s]) {
          std::int64_t h = g + arrow_weight(e.arrow);
          if (h <= top) layer[static_cast<std::size_t>(h)][e.target] += n;
        }
      }
    }
    for (std::int64_t g : degrees) {
      BigInt total = 0;
      if (g >= 0)
        for (const auto& [s, n] : layer[static_cast<std::size_t>(g)]) total += n;
      out[g] = total;
    }
    return out;
  }

  // Z/m: product of the automaton with the group.
  const auto m = static_cast<std::size_t>(group.modulus());
  const std::size_t nodes = states_.size() * m;
  auto node = [m](StateId s, std::size_t g) { return s * m + g; };
  std::vector<std::vector<std::size_t>> succ(nodes);
  for (StateId s = 0; s < states_.size(); ++s)
    for (const Transition& e : edges_[s]) {
      auto c = static_cast<std::size_t>(group.normalize(arrow_weight(e.arrow)));
      for (std::size_t g = 0; g < m; ++g) succ[node(s, g)].push_back(node(e.target, (g + c) % m));
    }
  std::vector<std::size_t> starts;
  for (StateId r : roots_)
    if (r != dead) starts.push_back(node(r, 0));

  // Tarjan, iterative; components come out sinks first.
  std::vector<std::int64_t> idx(nodes, -1), low(nodes, 0);
  std::vector<bool> on_stack(nodes, false), cyclic(nodes, false);
  std::vector<std::size_t> comp_order;  // nodes, sinks first
  std::vector<std::size_t> stack;
  std::int64_t counter = 0;
  for (std::size_t st : starts) {
    if (idx[st] >= 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{st, 0}};
    idx[st] = low[st] = counter++;
    stack.push_back(st);
    on_stack[st] = true;
    while (!call.empty()) {
      auto& [u, i] = call.back();
      if (i < succ[u].size()) {
        std::size_t v = succ[u][i++];
        if (idx[v] < 0) {
          idx[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], idx[v]);
        }
        continue;
      }
      std::size_t done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] != idx[done]) continue;
      std::vector<std::size_t> comp;
      while (true) {
        std::size_t v = stack.back();
        stack.pop_back();
        on_stack[v] = false;
        comp.push_back(v);
        if (v == done) break;
      }
      bool loop = comp.size() > 1 ||
                  std::find(succ[done].begin(), succ[done].end(), done) != succ[done].end();
      for (std::size_t v : comp) {
        cyclic[v] = loop;
        comp_order.push_back(v);
      }
    }
  }

  for (std::int64_t requested : degrees) {
    auto g = static_cast<std::size_t>(group.normalize(requested));
    // Reachable nodes that can still reach weight g, evaluated sinks first.
    std::vector<bool> reaches(nodes, false);
    std::vector<BigInt> paths(nodes, BigInt(0));
    for (std::size_t v : comp_order) {
      bool hit = v % m == g;
      for (std::size_t x : succ[v]) hit = hit || reaches[x];
      reaches[v] = hit;
      if (!hit) continue;
      if (cyclic[v])
        throw MathError("E-INFINITE-DEGREE",
                        "degree " + std::to_string(g) + " has infinitely many nontips");
      paths[v] = v % m == g ? 1 : 0;
      for (std::size_t x : succ[v]) paths[v] += paths[x];
    }
    BigInt total = 0;
    for (std::size_t st : starts) total += paths[st];
    out[static_cast<std::int64_t>(g)] = total;
  }
  return out;
}

std::vector<BigInt> MonomialData::hilbert_series(std::size_t truncation) const {
  std::vector<BigInt> out;
  std::vector<BigInt> cur(states_.size(), BigInt(0));
  for (StateId r : roots_)
    if (r != dead) cur[r] += 1;
  for (std::size_t n = 0; n <= truncation; ++n) {
    BigInt total = 0;
    std::vector<BigInt> next(states_.size(), BigInt(0));
    for (StateId s = 0; s < states_.size(); ++s) {
      if (cur[s] == 0) continue;
      total += cur[s];
      for (const Transition& e : edges_[s]) next[e.target] += cur[s];
    }
    out.push_back(total);
    cur = std::move(next);
  }
  return out;
}

std::vector<std::vector<BigInt>> MonomialData::cartan_matrix() const {
  if (cycle_) throw MathError("E-INFINITE", "Cartan matrix needs a finite nontip set");
  const std::size_t n = quiver_.vertex_count();
  std::vector<std::vector<BigInt>> c(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t v = 0; v < n; ++v)
    if (roots_[v] != dead) c[v] = counts_[roots_[v]];
  return c;
}

bool MonomialData::is_quadratic() const {
  return std::all_of(tips_.begin(), tips_.end(), [](const Path& t) { return t.length() == 2; });
}

bool MonomialData::contains_arrow_power(std::size_t m) const {
  // Prefixes of nontips are nontips, so an infinite set has nontips of every length.
  auto longest = max_nontip_length();
  return longest && *longest < m;
}

std::vector<Path> MonomialData::tips_from_nontips(std::size_t max_len, const PathOrder& order) const {
  std::vector<Path> out;
  for (VertexId v : quiver_.vertices())
    if (root(v) == dead) out.push_back(Path::trivial(v));
  if (max_len == 0) {
    sort_ascending(out, order);
    return out;
  }
  for (const Path& p : nontips(max_len - 1, order)) {
    for (ArrowId a : quiver_.arrows_from(p.terminus())) {
      Path q = concat(p, Path::trivial(p.terminus()), quiver_.arrow_path(a));
      if (accepts(q)) continue;
      if (accepts(quiver_.slice(q, 1, q.length()))) out.push_back(q);
    }
  }
  sort_ascending(out, order);
  return out;
}

}  // namespace pathalg
