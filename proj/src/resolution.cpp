#include "pathalg/resolution.hpp"

#include <algorithm>
#include <set>

#include "pathalg/error.hpp"

namespace pathalg {

std::string_view to_string(CartanVerdict v) {
  switch (v) {
    case CartanVerdict::pass: return "pass";
    case CartanVerdict::fail: return "fail";
    case CartanVerdict::no_claim: return "no_claim";
  }
  return "?";
}

namespace {

// Shortest extensions u of r such that r*u ends in a tip starting inside r
// while no shorter r*u' contains a tip.
std::vector<Path> minimal_extensions(const Quiver& q, const std::set<Path>& tips, std::size_t longest_tip,
                                     const Path& r) {
  std::vector<Path> out;
  std::vector<Path> frontier{r};
  for (std::size_t added = 1; added < longest_tip && !frontier.empty(); ++added) {
    std::vector<Path> next;
    for (const Path& w : frontier) {
      for (ArrowId a : q.arrows_from(w.terminus())) {
        Path x = concat(w, Path::trivial(w.terminus()), q.arrow_path(a));
        std::optional<std::size_t> start;
        for (std::size_t j = 1; j <= x.length() && !start; ++j)
          if (tips.count(q.slice(x, x.length() - j, x.length()))) start = x.length() - j;
        if (!start) {
          next.push_back(std::move(x));
        } else if (*start < r.length()) {
          out.push_back(q.slice(x, r.length(), x.length()));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

ChainFamily chains(const MonomialData& md, VertexId v, std::size_t n_max) {
  const Quiver& q = md.quiver();
  std::set<Path> tips;
  std::size_t longest = 0;
  for (const Path& t : md.tips()) {
    if (t.length() < 2) throw ConfigError("chains need tips of length at least 2; got " + q.format(t));
    tips.insert(t);
    longest = std::max(longest, t.length());
  }
  ChainFamily fam{v, {}};
  fam.chains.push_back({Chain{Path::trivial(v), Path::trivial(v)}});
  if (n_max >= 1) {
    std::vector<Chain> deg1;
    for (ArrowId a : q.arrows_from(v)) deg1.push_back({q.arrow_path(a), q.arrow_path(a)});
    fam.chains.push_back(std::move(deg1));
  }
  for (std::size_t n = 1; n < n_max && !fam.chains.back().empty(); ++n) {
    std::vector<Chain> next;
    for (const Chain& c : fam.chains.back())
      for (Path& u : minimal_extensions(q, tips, longest, c.last))
        next.push_back({concat(c.path, Path::trivial(c.path.terminus()), u), u});
    fam.chains.push_back(std::move(next));
  }
  while (fam.chains.size() < n_max + 1) fam.chains.emplace_back();
  return fam;
}

BettiTable betti(const MonomialData& md, VertexId v, std::size_t n_max) {
  ChainFamily fam = chains(md, v, n_max);
  BettiTable table;
  for (const auto& level : fam.chains) {
    std::vector<std::size_t> row(md.quiver().vertex_count(), 0);
    for (const Chain& c : level) ++row[c.path.terminus().index];
    table.push_back(std::move(row));
  }
  return table;
}

GlobalDimension global_dimension(const MonomialData& md, std::size_t cap) {
  GlobalDimension g;
  for (VertexId v : md.quiver().vertices()) {
    ChainFamily fam = chains(md, v, cap);
    for (std::size_t n = 0; n < fam.chains.size(); ++n)
      if (!fam.chains[n].empty()) g.value = std::max(g.value, n);
    if (!fam.chains[cap].empty()) g.at_least = true;
  }
  if (g.at_least) g.value = cap;
  return g;
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

CartanReport cartan_check(const MonomialData& md, std::size_t cap) {
  CartanReport r{determinant(md.cartan_matrix()), global_dimension(md, cap), CartanVerdict::no_claim};
  if (!r.gldim.at_least) r.verdict = r.det == 1 ? CartanVerdict::pass : CartanVerdict::fail;
  return r;
}

std::vector<BigInt> euler_characteristic(const BettiTable& table) {
  std::vector<BigInt> out(table.empty() ? 0 : table.front().size(), BigInt(0));
  for (std::size_t n = 0; n < table.size(); ++n)
    for (std::size_t w = 0; w < out.size(); ++w) {
      if (n % 2 == 0) {
        out[w] += table[n][w];
      } else {
        out[w] -= table[n][w];
      }
    }
  return out;
}

}  // namespace pathalg
