#include "support/oracles.hpp"

#include <algorithm>

#include "support/linalg.hpp"

namespace oracle {

namespace {

struct Walk {
  Word word;
  std::string origin;
  std::string terminus;
};

std::vector<Walk> walks_of_length(const Quiver& q, std::size_t len) {
  std::vector<Walk> cur;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::string& name = q.vertex_name(pathalg::VertexId{static_cast<std::uint32_t>(v)});
    cur.push_back({{}, name, name});
  }
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<Walk> next;
    for (const Walk& w : cur)
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto& arr = q.arrow(pathalg::ArrowId{static_cast<std::uint32_t>(a)});
        if (q.vertex_name(arr.source) != w.terminus) continue;
        Walk x = w;
        x.word.push_back(arr.name);
        x.terminus = q.vertex_name(arr.target);
        next.push_back(std::move(x));
      }
    cur = std::move(next);
  }
  return cur;
}

std::string text_of(const Walk& w) {
  if (w.word.empty()) return "e_" + w.origin;
  std::string s;
  for (std::size_t i = 0; i < w.word.size(); ++i) s += (i ? "*" : "") + w.word[i];
  return s;
}

Word concat3(const Word& a, const Word& b, const Word& c) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

Word word_of(const Quiver& q, const pathalg::Path& p) {
  Word w;
  for (auto a : p.arrows()) w.push_back(q.arrow(a).name);
  return w;
}

bool occurs_in(const Word& p, const Word& q) {
  if (p.size() > q.size()) return false;
  for (std::size_t i = 0; i + p.size() <= q.size(); ++i) {
    bool same = true;
    for (std::size_t j = 0; j < p.size() && same; ++j) same = q[i + j] == p[j];
    if (same) return true;
  }
  return false;
}

std::vector<std::string> all_paths(const Quiver& q, std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const Walk& w : walks_of_length(q, len)) out.push_back(text_of(w));
  return out;
}

std::set<std::string> nontips(const Quiver& q, const std::vector<Word>& tips, std::size_t max_len) {
  std::set<std::string> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const Walk& w : walks_of_length(q, len)) {
      bool hit = std::any_of(tips.begin(), tips.end(), [&](const Word& t) { return occurs_in(t, w.word); });
      if (!hit) out.insert(text_of(w));
    }
  return out;
}

WordElement rewrite(WordElement x, const std::vector<Rule>& rules, std::mt19937_64* rng) {
  struct Site {
    Word word;
    std::size_t pos;
    std::size_t rule;
  };
  while (true) {
    std::vector<Site> sites;
    for (const auto& [w, c] : x) {
      for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t r = 0; r < rules.size(); ++r) {
          const Word& lhs = rules[r].lhs;
          if (pos + lhs.size() > w.size()) continue;
          if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
            sites.push_back({w, pos, r});
        }
      if (!rng && !sites.empty()) break;
    }
    if (sites.empty()) return x;
    const Site& s = rng ? sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(*rng)] : sites.front();
    Polynomial c = x.at(s.word);
    x.erase(s.word);
    const Rule& rule = rules[s.rule];
    Word before(s.word.begin(), s.word.begin() + static_cast<std::ptrdiff_t>(s.pos));
    Word after(s.word.begin() + static_cast<std::ptrdiff_t>(s.pos + rule.lhs.size()), s.word.end());
    for (const auto& [rw, rc] : rule.rhs) {
      Word nw = concat3(before, rw, after);
      Polynomial sum = x.count(nw) ? x.at(nw) + c * rc : c * rc;
      if (sum.is_zero()) {
        x.erase(nw);
      } else {
        x[nw] = sum;
      }
    }
  }
}

Word straighten(Word w) {
  std::sort(w.begin(), w.end(), [](const std::string& a, const std::string& b) {
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
  });
  return w;
}

std::size_t quotient_dimension(const Quiver& q, const std::vector<pathalg::KElement>& gens, std::size_t d) {
  std::vector<Walk> target = walks_of_length(q, d);
  std::map<std::pair<std::string, Word>, std::size_t> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[{target[i].origin, target[i].word}] = i;
  linalg::Echelon span(target.size());
  for (const auto& g : gens) {
    const pathalg::Path& any = g.terms().begin()->first;
    const std::size_t len = any.length();
    if (len > d) continue;
    const std::string go = q.vertex_name(any.origin());
    const std::string gt = q.vertex_name(any.terminus());
    for (std::size_t i = 0; i + len <= d; ++i) {
      for (const Walk& left : walks_of_length(q, i)) {
        if (left.terminus != go) continue;
        for (const Walk& right : walks_of_length(q, d - len - i)) {
          if (right.origin != gt) continue;
          linalg::Vector v(target.size(), FieldValue(0));
          for (const auto& [p, c] : g.terms()) {
            if (p.length() != len) throw std::runtime_error("generator is not length-homogeneous");
            v[index.at({left.origin, concat3(left.word, word_of(q, p), right.word)})] = c;
          }
          span.insert(std::move(v));
        }
      }
    }
  }
  return target.size() - span.rank();
}

}  // namespace oracle
