#include "pathalg/variety.hpp"

#include <algorithm>
#include <future>

#include "pathalg/error.hpp"

namespace pathalg {

std::string variable_name(const Quiver& quiver, const Path& tip, const Path& tail) {
  return "x[" + quiver.format(tip) + ";" + quiver.format(tail) + "]";
}

std::string_view to_string(VarietyKind k) {
  switch (k) {
    case VarietyKind::plain: return "plain";
    case VarietyKind::graded: return "graded";
    case VarietyKind::special: return "special";
    case VarietyKind::admissible: return "admissible";
  }
  return "?";
}

TailSpace::TailSpace(MonomialData md, PathOrder order, std::vector<std::vector<Path>> tails)
    : md_(std::move(md)), order_(std::move(order)), tails_(std::move(tails)) {
  if (tails_.size() != md_.tips().size()) throw ConfigError("one tail list per tip is required");
  for (std::size_t i = 0; i < tails_.size(); ++i) {
    sort_descending(tails_[i], order_);
    offsets_.push_back(static_cast<VarId>(entries_.size()));
    for (const Path& n : tails_[i]) {
      vars_.add(variable_name(quiver(), md_.tips()[i], n));
      entries_.push_back({i, n});
    }
  }
}

std::optional<std::size_t> TailSpace::tip_index(const Path& t) const {
  auto it = std::find(tips().begin(), tips().end(), t);
  if (it == tips().end()) return std::nullopt;
  return static_cast<std::size_t>(it - tips().begin());
}

std::optional<VarId> TailSpace::variable(std::size_t tip, const Path& tail) const {
  const auto& ns = tails_.at(tip);
  auto it = std::find(ns.begin(), ns.end(), tail);
  if (it == ns.end()) return std::nullopt;
  return offsets_[tip] + static_cast<VarId>(it - ns.begin());
}

std::vector<SymbolicElement> TailSpace::generators() const {
  std::vector<SymbolicElement> out;
  for (std::size_t i = 0; i < tips().size(); ++i) {
    SymbolicElement h(tips()[i], Polynomial(1));
    for (std::size_t k = 0; k < tails_[i].size(); ++k)
      h.add_term(tails_[i][k], -Polynomial::variable(offsets_[i] + static_cast<VarId>(k)));
    out.push_back(std::move(h));
  }
  return out;
}

TailSpace tail_space(const MonomialData& md, const PathOrder& order) {
  std::vector<std::vector<Path>> tails;
  for (const Path& t : md.tips()) {
    if (t.length() < 2)
      throw ConfigError("tip " + md.quiver().format(t) + " has length below 2");
    std::vector<Path> ns;
    for (const Path& n : md.nontips_between(t.origin(), t.terminus(), t.length(), order))
      if (order.greater(t, n)) ns.push_back(n);
    tails.push_back(std::move(ns));
  }
  return TailSpace(md, order, std::move(tails));
}

TailSpace graded_tail_space(const TailSpace& ts, const WeightFunction& w) {
  std::vector<std::vector<Path>> tails;
  for (std::size_t i = 0; i < ts.tips().size(); ++i) {
    const std::int64_t wt = w.weight(ts.tips()[i]);
    std::vector<Path> ns;
    for (const Path& n : ts.tails(i))
      if (n.length() >= 1 && w.weight(n) == wt) ns.push_back(n);
    tails.push_back(std::move(ns));
  }
  return TailSpace(ts.monomial(), ts.order(), std::move(tails));
}

namespace {

void collect(std::vector<Polynomial>& eqs, const Polynomial& p) {
  Polynomial q = p.sign_normalized();
  if (q.is_zero()) return;
  if (std::find(eqs.begin(), eqs.end(), q) != eqs.end()) return;
  eqs.push_back(std::move(q));
}

std::vector<Polynomial> coefficients(const SymbolicElement& x, const PathOrder& order) {
  std::vector<Path> support = x.support();
  sort_descending(support, order);
  std::vector<Polynomial> out;
  for (const Path& n : support) out.push_back(x.terms().at(n));
  return out;
}

// Coefficient lists of the normal forms of xs, in input order.
std::vector<std::vector<Polynomial>> reduce_all(const Reducer<Polynomial>& red, const std::vector<SymbolicElement>& xs,
                                                unsigned jobs) {
  std::vector<std::vector<Polynomial>> out(xs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = coefficients(red.normal_form(xs[i]), red.order());
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(xs.size(), 1))));
  if (jobs == 1) {
    work(0, xs.size());
    return out;
  }
  std::vector<std::future<void>> tasks;
  const std::size_t chunk = (xs.size() + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < xs.size(); begin += chunk)
    tasks.push_back(std::async(std::launch::async, work, begin, std::min(xs.size(), begin + chunk)));
  for (auto& t : tasks) t.get();
  return out;
}

std::vector<OverlapRecord> overlap_records(const std::vector<SymbolicElement>& hs, const PathOrder& order) {
  std::vector<OverlapRecord> out;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < hs.size(); ++j)
      for (auto& o : overlaps(hs[i], hs[j], order))
        out.push_back({i, j, std::move(o.left), std::move(o.right), std::move(o.relation)});
  return out;
}

}  // namespace

VarietyPresentation variety_equations(const TailSpace& ts, unsigned jobs) {
  VarietyPresentation vp{ts, VarietyKind::plain, ts.generators(), {}, {}, {}, {}, std::nullopt};
  vp.overlaps = overlap_records(vp.generators, ts.order());
  std::vector<SymbolicElement> relations;
  for (const auto& o : vp.overlaps) relations.push_back(o.relation);
  Reducer<Polynomial> red(ts.quiver(), vp.generators, ts.order());
  for (const auto& coeffs : reduce_all(red, relations, jobs))
    for (const auto& f : coeffs) collect(vp.equations, f);
  return vp;
}

VarietyPresentation special_subvariety(const VarietyPresentation& vp, std::span<const Pin> pins) {
  VarietyPresentation out = vp;
  out.kind = VarietyKind::special;
  std::map<VarId, FieldValue> values;
  for (const Pin& pin : pins) {
    auto i = vp.space.tip_index(pin.tip);
    std::optional<VarId> v = i ? vp.space.variable(*i, pin.tail) : std::nullopt;
    if (!v)
      throw ConfigError(vp.space.quiver().format(pin.tail) + " is not a tail of " + vp.space.quiver().format(pin.tip));
    out.pins.push_back(pin);
    Polynomial lin = Polynomial::variable(*v) - Polynomial(pin.value);
    out.equations.push_back(lin);
    values.emplace(*v, pin.value);
  }
  std::vector<Polynomial> eliminated;
  for (const Polynomial& f : vp.equations) collect(eliminated, f.substitute(values));
  // A pinned variable that was pinned twice to different values leaves a
  // nonzero constant here.
  for (const Pin& pin : pins) {
    VarId v = *vp.space.variable(*vp.space.tip_index(pin.tip), pin.tail);
    collect(eliminated, Polynomial(values.at(v)) - Polynomial(pin.value));
  }
  out.eliminated = std::move(eliminated);
  return out;
}

VarietyPresentation admissible_equations(const TailSpace& ts, std::size_t m, unsigned jobs) {
  if (m < 2) throw ConfigError("admissible power m must be at least 2");
  const MonomialData& md = ts.monomial();
  auto longest = md.max_nontip_length();
  if (!longest || *longest > m - 1) {
    std::string witness = longest ? "a nontip of length " + std::to_string(*longest)
                                  : "the cycle " + ts.quiver().format(*md.cycle_witness());
    throw MathError("E-NOT-ADMISSIBLE",
                    "nontips must have length at most " + std::to_string(m - 1) + "; found " + witness);
  }
  std::vector<std::vector<Path>> tails;
  for (std::size_t i = 0; i < ts.tips().size(); ++i) {
    std::vector<Path> ns;
    for (const Path& n : ts.tails(i))
      if (n.length() >= 2) ns.push_back(n);
    tails.push_back(std::move(ns));
  }
  TailSpace restricted(md, ts.order(), std::move(tails));
  VarietyPresentation vp = variety_equations(restricted, jobs);
  vp.kind = VarietyKind::admissible;
  vp.power = m;

  std::vector<Path> long_paths = enumerate_paths_of_length(ts.quiver(), m);
  sort_ascending(long_paths, ts.order());
  std::vector<SymbolicElement> xs;
  for (const Path& p : long_paths) xs.emplace_back(p, Polynomial(1));
  Reducer<Polynomial> red(ts.quiver(), vp.generators, ts.order());
  for (const auto& coeffs : reduce_all(red, xs, jobs))
    for (const auto& f : coeffs) collect(vp.equations, f);
  return vp;
}

std::vector<std::size_t> violated_equations(const VarietyPresentation& vp, const AlgebraPoint& c) {
  if (c.size() != vp.space.dimension())
    throw ConfigError("point has " + std::to_string(c.size()) + " coordinates; expected " +
                      std::to_string(vp.space.dimension()));
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < vp.equations.size(); ++i)
    if (!vp.equations[i].evaluate(c).is_zero()) bad.push_back(i);
  return bad;
}

GroebnerBasis point_to_algebra(const VarietyPresentation& vp, const AlgebraPoint& c) {
  auto bad = violated_equations(vp, c);
  if (!bad.empty()) {
    std::string msg = "point is not on the variety; violated:";
    for (std::size_t i : bad) msg += " " + to_string(vp.equations[i], vp.space.variables()) + ";";
    msg.pop_back();
    throw MathError("E-OFF-VARIETY", msg);
  }
  const TailSpace& ts = vp.space;
  std::uint64_t modulus = 0;
  for (const auto& v : c)
    if (!v.is_rational()) modulus = v.modulus();
  std::vector<KElement> gens;
  for (std::size_t i = 0; i < ts.tips().size(); ++i) {
    KElement g(ts.tips()[i], FieldValue(1).in_field(modulus));
    for (const Path& n : ts.tails(i)) g.add_term(n, -c[*ts.variable(i, n)]);
    gens.push_back(std::move(g));
  }
  bool certified = is_groebner_basis(ts.quiver(), gens, ts.order());
  if (certified && vp.power) {
    Reducer<FieldValue> red(ts.quiver(), gens, ts.order());
    for (const Path& p : enumerate_paths_of_length(ts.quiver(), *vp.power))
      if (!red.reduces_to_zero(KElement(p))) {
        certified = false;
        break;
      }
  }
  if (!certified) throw MathError("E-CERTIFY", "point satisfies the equations but the basis fails certification");
  return GroebnerBasis{ts.quiver(), ts.order(), std::move(gens), CompletionStatus::complete, 0};
}

AlgebraPoint algebra_to_point(const TailSpace& ts, std::span<const KElement> x, CompletionCaps caps) {
  GroebnerBasis gb = buchberger(ts.quiver(), x, ts.order(), caps);
  if (!gb.is_complete())
    throw MathError("E-CAPPED", "completion stopped early: " + std::string(to_string(gb.status)));
  GroebnerBasis rb = reduced_basis(gb);
  std::vector<Path> actual = rb.tips();
  std::vector<Path> expected = ts.tips();
  std::sort(actual.begin(), actual.end());
  std::sort(expected.begin(), expected.end());
  if (actual != expected) {
    std::vector<Path> shown = rb.tips();
    sort_ascending(shown, ts.order());
    std::string msg = "algebra not in Alg_T; its tips are {";
    for (std::size_t i = 0; i < shown.size(); ++i) msg += (i ? ", " : "") + ts.quiver().format(shown[i]);
    throw MathError("E-NOT-IN-ALG", msg + "}");
  }
  AlgebraPoint c(ts.dimension(), FieldValue(0));
  for (const KElement& g : rb.generators) {
    const Path t = tip(g, ts.order());
    std::size_t i = *ts.tip_index(t);
    for (const auto& [n, coeff] : g.terms()) {
      if (n == t) continue;
      auto v = ts.variable(i, n);
      if (!v)
        throw MathError("E-TAIL", "term " + ts.quiver().format(n) + " of the generator with tip " +
                                      ts.quiver().format(t) + " has no variable");
      c[*v] = -coeff;
    }
  }
  return c;
}

AlgebraPoint embed_point(const TailSpace& sub, const AlgebraPoint& c, const TailSpace& full) {
  if (c.size() != sub.dimension()) throw ConfigError("point does not match the tail space");
  AlgebraPoint out(full.dimension(), FieldValue(0));
  for (VarId v = 0; v < sub.dimension(); ++v) {
    const auto& e = sub.entry(v);
    auto i = full.tip_index(sub.tips()[e.tip]);
    std::optional<VarId> w = i ? full.variable(*i, e.tail) : std::nullopt;
    if (!w) throw ConfigError(sub.variables().name(v) + " has no counterpart");
    out[*w] = c[v];
  }
  return out;
}

}  // namespace pathalg
