#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathalg/coefficients.hpp"
#include "pathalg/error.hpp"
#include "pathalg/paths.hpp"

namespace pathalg {

/// Finite linear combination of paths with nonzero coefficients in C.
template <Coefficient C>
class Element {
 public:
  using Terms = std::map<Path, C>;

  Element() = default;
  explicit Element(const Path& p, C c = C(1)) {
    if (!c.is_zero()) terms_.emplace(p, std::move(c));
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  C coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const Path& p, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Element& operator+=(const Element& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element out;
    for (const auto& [p, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), p, -c);
    return out;
  }

  Element scaled(const C& k) const {
    Element out;
    if (k.is_zero()) return out;
    for (const auto& [p, c] : terms_) out.add_term(p, c * k);
    return out;
  }

  /// r * this * s in the path algebra; terms that do not compose vanish.
  Element sandwich(const Path& r, const Path& s) const {
    Element out;
    for (const auto& [p, c] : terms_) {
      if (r.terminus() != p.origin() || p.terminus() != s.origin()) continue;
      out.add_term(concat(r, p, s), c);
    }
    return out;
  }

  std::vector<Path> support() const {
    std::vector<Path> out;
    out.reserve(terms_.size());
    for (const auto& [p, c] : terms_) out.push_back(p);
    return out;
  }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

/// The ≻-largest path in the support. Throws MathError on zero.
template <Coefficient C>
const Path& tip(const Element<C>& x, const PathOrder& order) {
  if (x.is_zero()) throw MathError("E-TIP0", "tip of zero");
  const Path* best = nullptr;
  for (const auto& [p, c] : x.terms())
    if (!best || order.greater(p, *best)) best = &p;
  return *best;
}

template <Coefficient C>
const C& tip_coefficient(const Element<C>& x, const PathOrder& order) {
  return x.terms().at(tip(x, order));
}

struct Uniformity {
  bool uniform = false;
  std::optional<VertexId> origin;
  std::optional<VertexId> terminus;
};

/// Zero counts as uniform with no endpoints.
template <Coefficient C>
Uniformity uniformity(const Element<C>& x) {
  if (x.is_zero()) return {true, std::nullopt, std::nullopt};
  const Path& first = x.terms().begin()->first;
  for (const auto& [p, c] : x.terms())
    if (!p.parallel_to(first)) return {false, std::nullopt, std::nullopt};
  return {true, first.origin(), first.terminus()};
}

template <Coefficient C>
bool is_uniform(const Element<C>& x) {
  return uniformity(x).uniform;
}

template <FieldCoefficient C>
Element<C> make_monic(const Element<C>& x, const PathOrder& order) {
  if (x.is_zero()) return x;
  const C& lead = tip_coefficient(x, order);
  if (lead.is_one()) return x;
  return x.scaled(lead.inverse());
}

template <Coefficient C>
struct ReductionStep {
  Path path;             // support path that was rewritten
  std::size_t reducer;   // index into the reducing set
  Path left;             // path = left * tip(reducer) * right
  Path right;
  C coefficient;         // multiple of left*reducer*right that was subtracted
};

template <Coefficient C>
struct ReductionTrace {
  std::vector<ReductionStep<C>> steps;
  Element<C> result;
};

/// Reduction of elements by a fixed finite set.
///
/// The strategy is deterministic: the ≻-largest reducible support path is
/// rewritten first, at the leftmost occurrence of a reducer tip; among
/// reducers whose tip occurs at that position the first one wins.
/// Reducers whose tip coefficient is not 1 require a field.
template <Coefficient C>
class Reducer {
 public:
  Reducer(const Quiver& quiver, std::vector<Element<C>> generators, const PathOrder& order)
      : quiver_(quiver), order_(order), generators_(std::move(generators)) {
    tips_.reserve(generators_.size());
    for (const auto& g : generators_) {
      if (g.is_zero()) throw ConfigError("reducing set contains zero");
      if (!is_uniform(g)) throw ConfigError("reducing set contains a non-uniform element");
      tips_.push_back(tip(g, order_));
    }
  }

  const std::vector<Element<C>>& generators() const noexcept { return generators_; }
  const std::vector<Path>& tips() const noexcept { return tips_; }
  const PathOrder& order() const noexcept { return order_; }
  const Quiver& quiver() const noexcept { return quiver_; }

  struct Match {
    std::size_t reducer;
    std::size_t position;
  };

  /// Leftmost occurrence of any reducer tip inside p.
  std::optional<Match> find_divisor(const Path& p) const {
    for (std::size_t pos = 0; pos <= p.length(); ++pos) {
      for (std::size_t i = 0; i < tips_.size(); ++i) {
        const Path& t = tips_[i];
        if (t.is_trivial()) {
          if (quiver_.vertex_at(p, pos) == t.origin()) return Match{i, pos};
          continue;
        }
        if (pos + t.length() > p.length()) continue;
        if (std::equal(t.arrows().begin(), t.arrows().end(), p.arrows().begin() + static_cast<std::ptrdiff_t>(pos)))
          return Match{i, pos};
      }
    }
    return std::nullopt;
  }

  bool is_reducible(const Path& p) const { return find_divisor(p).has_value(); }

  /// One rewrite of the largest reducible path; nullopt when none exists.
  std::optional<Element<C>> simple_reduce(const Element<C>& x) const {
    std::vector<Path> support = x.support();
    sort_descending(support, order_);
    for (const Path& p : support) {
      auto m = find_divisor(p);
      if (!m) continue;
      Work work(DescendingBy{&order_});
      for (const auto& [q, c] : x.terms()) work.emplace(q, c);
      rewrite(work, work.find(p), *m, nullptr);
      return to_element(work);
    }
    return std::nullopt;
  }

  ReductionTrace<C> complete_reduce(const Element<C>& x) const {
    ReductionTrace<C> trace;
    trace.result = run(x, &trace.steps);
    return trace;
  }

  Element<C> normal_form(const Element<C>& x) const { return run(x, nullptr); }

  bool reduces_to_zero(const Element<C>& x) const { return run(x, nullptr).is_zero(); }

 private:
  using Work = std::map<Path, C, DescendingBy>;

  static Element<C> to_element(const Work& work) {
    Element<C> out;
    for (const auto& [p, c] : work) out.add_term(p, c);
    return out;
  }

  C multiplier(const C& alpha, std::size_t reducer) const {
    const C& beta = generators_[reducer].terms().at(tips_[reducer]);
    if (beta.is_one()) return alpha;
    if constexpr (FieldCoefficient<C>) {
      return alpha * beta.inverse();
    } else {
      throw MathError("E-NONMONIC", "reducer tip coefficient is not 1 and the coefficient ring cannot divide");
    }
  }

  // Replaces the term at `it` by lower terms; everything added is ≺ the
  // rewritten path.
  void rewrite(Work& work, typename Work::iterator it, const Match& m,
               std::vector<ReductionStep<C>>* steps) const {
    const Path p = it->first;
    const C alpha = it->second;
    const Path& t = tips_[m.reducer];
    Path left = quiver_.slice(p, 0, m.position);
    Path right = quiver_.slice(p, m.position + t.length(), p.length());
    C k = multiplier(alpha, m.reducer);
    work.erase(it);
    for (const auto& [q, c] : generators_[m.reducer].terms()) {
      if (q == t) continue;
      Path moved = concat(left, q, right);
      C delta = -(k * c);
      auto [pos, inserted] = work.try_emplace(std::move(moved), delta);
      if (!inserted) {
        pos->second = pos->second + delta;
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
    if (steps) steps->push_back(ReductionStep<C>{p, m.reducer, std::move(left), std::move(right), std::move(k)});
  }

  Element<C> run(const Element<C>& x, std::vector<ReductionStep<C>>* steps) const {
    Work work(DescendingBy{&order_});
    for (const auto& [p, c] : x.terms()) work.emplace(p, c);
    auto it = work.begin();
    while (it != work.end()) {
      auto m = find_divisor(it->first);
      if (!m) {
        ++it;
        continue;
      }
      Path p = it->first;
      rewrite(work, it, *m, steps);
      it = work.upper_bound(p);
    }
    return to_element(work);
  }

  Quiver quiver_;
  PathOrder order_;
  std::vector<Element<C>> generators_;
  std::vector<Path> tips_;
};

template <Coefficient C>
std::optional<Element<C>> simple_reduce(const Quiver& quiver, const Element<C>& x,
                                        std::span<const Element<C>> reducers, const PathOrder& order) {
  return Reducer<C>(quiver, {reducers.begin(), reducers.end()}, order).simple_reduce(x);
}

template <Coefficient C>
ReductionTrace<C> complete_reduce(const Quiver& quiver, const Element<C>& x,
                                  std::span<const Element<C>> reducers, const PathOrder& order) {
  return Reducer<C>(quiver, {reducers.begin(), reducers.end()}, order).complete_reduce(x);
}

/// Re-applies the recorded steps to x.
template <Coefficient C>
Element<C> replay(const Element<C>& x, const ReductionTrace<C>& trace, std::span<const Element<C>> reducers) {
  Element<C> y = x;
  for (const auto& step : trace.steps)
    y -= reducers[step.reducer].sandwich(step.left, step.right).scaled(step.coefficient);
  return y;
}

/// Repeatedly rewrites the tip of one member by another member whose tip
/// divides it, until no tip divides another. Zeros are dropped and every
/// survivor is made monic. Generates the same ideal as the input.
template <FieldCoefficient C>
std::vector<Element<C>> tip_reduce_set(const Quiver& quiver, std::span<const Element<C>> input, const PathOrder& order) {
  std::vector<Element<C>> ys;
  for (const auto& x : input) {
    if (x.is_zero()) continue;
    if (!is_uniform(x)) throw ConfigError("tip reduction needs uniform elements");
    ys.push_back(make_monic(x, order));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < ys.size() && !changed; ++i) {
      const Path ti = tip(ys[i], order);
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (j == i) continue;
        const Path& tj = tip(ys[j], order);
        auto occ = subpath_occurrences(quiver, tj, ti);
        if (occ.empty()) continue;
        Element<C> y = ys[i] - ys[j].sandwich(occ.front().left, occ.front().right).scaled(tip_coefficient(ys[i], order));
        if (y.is_zero()) {
          ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          ys[i] = make_monic(y, order);
        }
        changed = true;
        break;
      }
    }
  }
  return ys;
}

template <Coefficient C>
struct Overlap {
  Path right;   // m: tip(f) * m == n * tip(g)
  Path left;    // n
  Element<C> relation;
};

/// All overlap relations of f with g: tip(f)*m = n*tip(g) with l(n) >= 1
/// and 1 <= l(m) < l(tip(g)), ordered by l(n). Relation is
/// lc(g)*f*m - lc(f)*n*g.
template <Coefficient C>
std::vector<Overlap<C>> overlaps(const Element<C>& f, const Element<C>& g, const PathOrder& order) {
  std::vector<Overlap<C>> out;
  const Path& t = tip(f, order);
  const Path& u = tip(g, order);
  for (std::size_t k = 1; k < t.length(); ++k) {
    std::size_t shared = t.length() - k;
    if (shared >= u.length()) continue;
    if (!std::equal(t.arrows().begin() + static_cast<std::ptrdiff_t>(k), t.arrows().end(), u.arrows().begin()))
      continue;
    std::vector<ArrowId> n_arrows(t.arrows().begin(), t.arrows().begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<ArrowId> m_arrows(u.arrows().begin() + static_cast<std::ptrdiff_t>(shared), u.arrows().end());
    Path n = Path::from_parts(t.origin(), u.origin(), std::move(n_arrows));
    Path m = Path::from_parts(t.terminus(), u.terminus(), std::move(m_arrows));
    Element<C> rel = f.sandwich(Path::trivial(f.terms().begin()->first.origin()), m).scaled(g.terms().at(u)) -
                     g.sandwich(n, Path::trivial(u.terminus())).scaled(f.terms().at(t));
    out.push_back(Overlap<C>{std::move(m), std::move(n), std::move(rel)});
  }
  return out;
}

/// `x2*x1 - x1*x2`, `3/2*a*b + e_1`: terms ≻-descending, unit coefficients omitted.
template <Coefficient C>
std::string format_element(const Element<C>& x, const Quiver& quiver, const PathOrder& order,
                           const std::function<std::string(const C&, bool& negative)>& coefficient_text) {
  if (x.is_zero()) return "0";
  std::vector<Path> support = x.support();
  sort_descending(support, order);
  std::string out;
  bool first = true;
  for (const Path& p : support) {
    bool negative = false;
    std::string coeff = coefficient_text(x.terms().at(p), negative);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (!coeff.empty()) out += coeff + "*";
    out += quiver.format(p);
  }
  return out;
}

std::string format_element(const Element<FieldValue>& x, const Quiver& quiver, const PathOrder& order);
std::string format_element(const Element<Polynomial>& x, const Quiver& quiver, const PathOrder& order,
                           const VariableTable& vars);

/// Parses `x2*x1 - x1*x2`, `1/2*a*b + 3*c`, `x^3`-free `x*x*x - x*x`.
/// A bare number is allowed on one-vertex quivers and means that multiple of
/// the vertex. Throws ConfigError describing the first problem.
Element<FieldValue> parse_element(std::string_view text, const Quiver& quiver, std::uint64_t modulus = 0);

using KElement = Element<FieldValue>;
using SymbolicElement = Element<Polynomial>;

}  // namespace pathalg
