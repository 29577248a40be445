#include "pathalg/groebner.hpp"

#include <set>

namespace pathalg {

std::string_view to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::complete: return "complete";
    case CompletionStatus::capped_length: return "capped(length-bound)";
    case CompletionStatus::capped_pairs: return "capped(pair-bound)";
  }
  return "?";
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::member: return "true";
    case Membership::not_member: return "false";
    case Membership::unknown: return "unknown";
  }
  return "?";
}

std::vector<Path> GroebnerBasis::tips() const {
  std::vector<Path> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(tip(g, order));
  return out;
}

namespace {

struct Pair {
  Path overlap;  // tip(f) * m
  std::size_t seq;
  std::size_t f;
  std::size_t g;
  KElement relation;
};

struct PairLess {
  const PathOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    auto c = order->compare(a.overlap, b.overlap);
    if (c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

class Completion {
 public:
  Completion(const Quiver& quiver, const PathOrder& order, CompletionCaps caps)
      : quiver_(quiver), order_(order), caps_(caps), pairs_(PairLess{&order_}) {}

  GroebnerBasis run(std::span<const KElement> input) {
    for (const auto& x : tip_reduce_set<FieldValue>(quiver_, input, order_)) {
      if (tip(x, order_).length() > caps_.max_tip_length) {
        status_ = CompletionStatus::capped_length;
        break;
      }
      gens_.push_back(x);
      active_.push_back(true);
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = 0; j < gens_.size(); ++j) queue_pairs_with(i, j);

    while (status_ == CompletionStatus::complete && !pairs_.empty()) {
      Pair pair = std::move(pairs_.extract(pairs_.begin()).value());
      if (!active_[pair.f] || !active_[pair.g]) continue;
      if (processed_ >= caps_.max_pair_count) {
        status_ = CompletionStatus::capped_pairs;
        break;
      }
      ++processed_;
      adjoin(pair.relation);
    }

    GroebnerBasis gb{quiver_, order_, {}, status_, processed_};
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (active_[i]) gb.generators.push_back(gens_[i]);
    return gb;
  }

 private:
  std::vector<KElement> active_generators() const {
    std::vector<KElement> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (active_[i]) out.push_back(gens_[i]);
    return out;
  }

  void adjoin(const KElement& relation) {
    std::vector<KElement> pending{relation};
    while (!pending.empty() && status_ == CompletionStatus::complete) {
      KElement h = pending.back();
      pending.pop_back();
      h = Reducer<FieldValue>(quiver_, active_generators(), order_).normal_form(h);
      if (h.is_zero()) continue;
      h = make_monic(h, order_);
      const Path th = tip(h, order_);
      if (th.length() > caps_.max_tip_length) {
        status_ = CompletionStatus::capped_length;
        return;
      }
      std::size_t idx = gens_.size();
      for (std::size_t i = 0; i < idx; ++i) {
        if (!active_[i]) continue;
        if (is_subpath(quiver_, th, tip(gens_[i], order_))) {
          active_[i] = false;
          pending.push_back(gens_[i]);
        }
      }
      gens_.push_back(std::move(h));
      active_.push_back(true);
      queue_pairs_with(idx, idx);
      for (std::size_t i = 0; i < idx; ++i) {
        if (!active_[i]) continue;
        queue_pairs_with(idx, i);
        queue_pairs_with(i, idx);
      }
    }
  }

  void queue_pairs_with(std::size_t f, std::size_t g) {
    const Path tf = tip(gens_[f], order_);
    for (auto& o : overlaps(gens_[f], gens_[g], order_)) {
      Path at = concat(tf, Path::trivial(tf.terminus()), o.right);
      pairs_.insert(Pair{std::move(at), seq_++, f, g, std::move(o.relation)});
    }
  }

  Quiver quiver_;
  PathOrder order_;
  CompletionCaps caps_;
  std::vector<KElement> gens_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_;
  std::size_t seq_ = 0;
  std::size_t processed_ = 0;
  CompletionStatus status_ = CompletionStatus::complete;
};

}  // namespace

GroebnerBasis buchberger(const Quiver& quiver, std::span<const KElement> input, const PathOrder& order,
                         CompletionCaps caps) {
  if (caps.max_tip_length == 0 || caps.max_pair_count == 0) throw ConfigError("completion caps must be positive");
  return Completion(quiver, order, caps).run(input);
}

GroebnerBasis reduced_basis(const GroebnerBasis& gb) {
  if (!gb.is_complete()) throw MathError("E-CAPPED", "cannot certify reduced basis");
  // Drop generators whose tip is divisible by another tip, then reduce tails.
  std::vector<KElement> minimal = tip_reduce_set<FieldValue>(gb.quiver, gb.generators, gb.order);
  Reducer<FieldValue> red(gb.quiver, minimal, gb.order);
  std::vector<KElement> out;
  out.reserve(minimal.size());
  for (const auto& g : minimal) {
    const Path t = tip(g, gb.order);
    KElement tail = g - KElement(t, tip_coefficient(g, gb.order));
    KElement r(t);
    r += red.normal_form(tail);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const KElement& a, const KElement& b) {
    return gb.order.greater(tip(a, gb.order), tip(b, gb.order));
  });
  return GroebnerBasis{gb.quiver, gb.order, std::move(out), CompletionStatus::complete, gb.pairs_processed};
}

MembershipResult membership(const KElement& x, const GroebnerBasis& gb) {
  auto trace = gb.reducer().complete_reduce(x);
  Membership answer = trace.result.is_zero() ? Membership::member
                      : gb.is_complete()     ? Membership::not_member
                                             : Membership::unknown;
  return {answer, std::move(trace)};
}

std::vector<Path> associated_monomial(const GroebnerBasis& gb) { return reduced_basis(gb).tips(); }

bool is_groebner_basis(const Quiver& quiver, std::span<const KElement> gens, const PathOrder& order) {
  Reducer<FieldValue> red(quiver, {gens.begin(), gens.end()}, order);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& f = gens[i];
      const auto& g = gens[j];
      for (const auto& o : overlaps(f, g, order))
        if (!red.reduces_to_zero(o.relation)) return false;
      if (i == j) continue;
      // Inclusions only arise when the set is not tip-reduced.
      for (const auto& occ : subpath_occurrences(quiver, tip(g, order), tip(f, order))) {
        KElement rel = f.scaled(tip_coefficient(g, order)) -
                       g.sandwich(occ.left, occ.right).scaled(tip_coefficient(f, order));
        if (!red.reduces_to_zero(rel)) return false;
      }
    }
  }
  return true;
}

}  // namespace pathalg
