// Oracle internals.  Partition states are canonicalized by sorting each
// group and listing groups by (size, members); the red number of a state is
// order-independent (a group's diagonal is red exactly when it spans an
// internal edge, mixed off-diagonal blocks are red), so it is cached per
// state and shared across deepening passes.  Feasibility answers are also
// reusable across passes: feasible at depth d stays feasible above, and
// infeasible stays infeasible below.
#include "mixthin/oracle.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mixthin/errors.hpp"

namespace mixthin {
namespace {

using Partition = std::vector<std::vector<int>>;  // sorted groups

Partition canonical(Partition p) {
  for (auto& grp : p) std::sort(grp.begin(), grp.end());
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return p;
}

std::vector<int> encode(const Partition& p) {
  std::vector<int> key;
  for (const auto& grp : p) {
    key.insert(key.end(), grp.begin(), grp.end());
    key.push_back(-1);
  }
  return key;
}

// Red number of the quotient matrix of a partition, independent of the
// contraction order that produced it.
int partition_red(const Graph& g, const Partition& p, RedMode mode) {
  const int m = static_cast<int>(p.size());
  auto blockCell = [&](int a, int b) {
    bool anyEdge = false, anyNon = false;
    for (int u : p[a])
      for (int v : p[b]) {
        if (a == b && u >= v) continue;
        (has_edge(g, u, v) ? anyEdge : anyNon) = true;
      }
    if (a == b) return (p[a].size() >= 2 && anyEdge) ? Cell::Red : Cell::Zero;
    if (anyEdge && anyNon) return Cell::Red;
    return anyEdge ? Cell::One : Cell::Zero;
  };
  int best = 0;
  for (int a = 0; a < m; ++a) {
    int reds = 0;
    for (int b = 0; b < m; ++b) {
      if (a == b && mode == RedMode::natural) continue;
      if (blockCell(std::min(a, b), std::max(a, b)) == Cell::Red) ++reds;
    }
    best = std::max(best, reds);
  }
  return best;
}

// Deterministic greedy completion: always merge the pair whose quotient has
// the smallest red number (ties by canonical pair position).  Its running
// maximum is the fallback upper bound when the budget runs out.
int greedy_upper_bound(const Graph& g, RedMode mode) {
  Partition p;
  for (int v = 0; v < g.n; ++v) p.push_back({v});
  int worst = 0;
  while (p.size() > 1) {
    int bestRed = INT_MAX, bestA = -1, bestB = -1;
    for (int a = 0; a < static_cast<int>(p.size()); ++a)
      for (int b = a + 1; b < static_cast<int>(p.size()); ++b) {
        Partition child = p;
        child[a].insert(child[a].end(), child[b].begin(), child[b].end());
        child.erase(child.begin() + b);
        const int red = partition_red(g, canonical(child), mode);
        if (red < bestRed) {
          bestRed = red;
          bestA = a;
          bestB = b;
        }
      }
    p[bestA].insert(p[bestA].end(), p[bestB].begin(), p[bestB].end());
    p.erase(p.begin() + bestB);
    p = canonical(p);
    worst = std::max(worst, bestRed);
  }
  return worst;
}

struct BudgetBlown {};

struct StateCache {
  int red = -1;
  int answerDepth = -1;  // depth the stored feasibility answer refers to
  bool feasible = false;
};

struct Searcher {
  const Graph& g;
  const SearchConfig& cfg;
  long nodes = 0;
  std::map<std::vector<int>, StateCache> cache;

  StateCache& entry(const Partition& p) { return cache[encode(p)]; }

  int red_of(const Partition& p) {
    if (static_cast<int>(p.size()) <= cfg.memoMaxGroups) {
      StateCache& e = entry(p);
      if (e.red < 0) e.red = partition_red(g, p, cfg.mode);
      return e.red;
    }
    return partition_red(g, p, cfg.mode);
  }

  // Can the partition be contracted to one group with every intermediate red
  // number at most d?
  bool feasible(const Partition& p, int d) {
    if (++nodes > cfg.nodeBudget) throw BudgetBlown{};
    if (p.size() <= 1) return true;
    const bool memoize = static_cast<int>(p.size()) <= cfg.memoMaxGroups;
    if (memoize) {
      const StateCache& e = entry(p);
      if (e.answerDepth >= 0) {
        if (e.feasible && e.answerDepth <= d) return true;
        if (!e.feasible && e.answerDepth >= d) return false;
      }
    }
    bool ok = false;
    for (int a = 0; a < static_cast<int>(p.size()) && !ok; ++a)
      for (int b = a + 1; b < static_cast<int>(p.size()) && !ok; ++b) {
        Partition child = p;
        child[a].insert(child[a].end(), child[b].begin(), child[b].end());
        child.erase(child.begin() + b);
        child = canonical(child);
        if (red_of(child) > d) continue;
        ok = feasible(child, d);
      }
    if (memoize) {
      StateCache& e = entry(p);
      e.answerDepth = d;
      e.feasible = ok;
    }
    return ok;
  }
};

}  // namespace

ExactResult exact_twinwidth(const Graph& g, const SearchConfig& cfg) {
  if (cfg.memoMaxGroups < 1 || cfg.nodeBudget < 1)
    throw InvalidParameters("search budgets must be positive");
  if (g.n <= 1) return {0, true};

  Searcher search{g, cfg};
  Partition root;
  for (int v = 0; v < g.n; ++v) root.push_back({v});
  // Every sequence opens with some pair, so the cheapest first contraction
  // lower-bounds both modes and gives the deepening a head start.
  int d = min_first_contraction_red(g);
  try {
    for (;; ++d)
      if (search.feasible(root, d)) return {d, true};
  } catch (const BudgetBlown&) {
    return {greedy_upper_bound(g, cfg.mode), false};
  }
}

int min_first_contraction_red(const Graph& g) {
  if (g.n < 2)
    throw TooSmall("min_first_contraction_red needs at least two vertices");
  int best = INT_MAX;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      int diff = 0;
      for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        if (has_edge(g, u, w) != has_edge(g, v, w)) ++diff;
      }
      best = std::min(best, diff);
    }
  return best;
}

namespace {

// Exact test: can the conflict graph be coloured with at most k colours?
// Vertices are tried in (degree desc, id) order; a vertex may only open one
// colour beyond those already in use, which prunes colour permutations.
bool colourable(const std::vector<std::vector<bool>>& conflict, int k) {
  const int n = static_cast<int>(conflict.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (conflict[u][v]) ++deg[u];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });
  std::vector<int> colour(n, -1);
  auto assign = [&](auto&& self, int idx, int used) -> bool {
    if (idx == n) return true;
    const int u = order[idx];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int v = 0; v < n && !clash; ++v)
        if (conflict[u][v] && colour[v] == c) clash = true;
      if (clash) continue;
      colour[u] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      colour[u] = -1;
    }
    return false;
  };
  return assign(assign, 0, 0);
}

}  // namespace

bool exact_thinness_small(const Graph& g, int k) {
  if (g.n > 8)
    throw BudgetExceeded("exact_thinness_small handles at most 8 vertices");
  if (k < 0) throw InvalidParameters("part budget must be nonnegative");
  if (g.n == 0) return true;
  if (k == 0) return false;
  if (k >= g.n) return true;

  std::vector<int> sigma(g.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    // Two vertices cannot share a part when the earlier one has a later
    // neighbour the other misses.
    std::vector<std::vector<bool>> conflict(g.n, std::vector<bool>(g.n, false));
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) {
        bool clash = false;
        for (int l = j + 1; l < g.n && !clash; ++l)
          if (has_edge(g, sigma[i], sigma[l]) && !has_edge(g, sigma[j], sigma[l]))
            clash = true;
        if (clash) conflict[i][j] = conflict[j][i] = true;
      }
    if (colourable(conflict, k)) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace mixthin
