#include "mixthin/poset.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bitsets.hpp"
#include "mixthin/errors.hpp"

namespace mixthin {

MarkedPoset transitive_closure(const std::vector<std::pair<int, int>>& pairs,
                               int n) {
  if (n < 0) throw ValidationError("transitive_closure: negative element count");
  std::vector<std::vector<int>> succ(n);
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("transitive_closure: element out of range: (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) continue;  // reflexivity is implicit
    succ[u].push_back(v);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Topological order doubles as the cycle check: a leftover vertex means a
  // directed cycle through distinct elements.
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : succ[u]) ++indeg[v];
  std::vector<int> order;
  order.reserve(n);
  std::queue<int> ready;
  for (int u = 0; u < n; ++u)
    if (indeg[u] == 0) ready.push(u);
  while (!ready.empty()) {
    const int u = ready.front();
    ready.pop();
    order.push_back(u);
    for (int v : succ[u])
      if (--indeg[v] == 0) ready.push(v);
  }
  if (static_cast<int>(order.size()) != n)
    throw NotAntisymmetric(
        "transitive_closure: pairs close into a cycle through distinct "
        "elements");

  detail::BitMatrix reach = detail::make_bitmatrix(n, n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int u = *it;
    reach[u].set(u);
    for (int v : succ[u]) reach[u] |= reach[v];
  }

  MarkedPoset p;
  p.n = n;
  p.le = detail::to_bool_matrix(reach);
  return p;
}

std::vector<std::pair<int, int>> cover_pairs(const MarkedPoset& p) {
  const int n = p.n;
  detail::BitMatrix strictUp = detail::from_bool_matrix(p.le);
  for (int u = 0; u < n; ++u) strictUp[u].reset(u);
  detail::BitMatrix strictDown = detail::transpose(strictUp);

  std::vector<std::pair<int, int>> out;
  detail::Bitset between(n);
  for (int u = 0; u < n; ++u) {
    for (std::size_t v = strictUp[u].find_first(); v != detail::Bitset::npos;
         v = strictUp[u].find_next(v)) {
      between = strictUp[u];
      between &= strictDown[v];
      if (between.none()) out.emplace_back(u, static_cast<int>(v));
    }
  }
  return out;
}

namespace {

// Hopcroft-Karp maximum matching with ascending-id scan order everywhere, so
// the matching (and the chain cover built from it) is reproducible.
struct Matcher {
  int n;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> matchL, matchR, dist;

  explicit Matcher(int n, const std::vector<std::vector<int>>& adj)
      : n(n), adj(adj), matchL(n, -1), matchR(n, -1) {}

  bool bfs() {
    std::queue<int> q;
    dist.assign(n, -1);
    for (int u = 0; u < n; ++u)
      if (matchL[u] == -1) {
        dist[u] = 0;
        q.push(u);
      }
    bool reachedFree = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        const int w = matchR[v];
        if (w == -1)
          reachedFree = true;
        else if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachedFree;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      const int w = matchR[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        matchL[u] = v;
        matchR[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  }

  void run() {
    while (bfs())
      for (int u = 0; u < n; ++u)
        if (matchL[u] == -1) dfs(u);
  }
};

}  // namespace

ChainDecomposition chain_cover(const MarkedPoset& p) {
  const int n = p.n;
  // Bipartite graph on two copies of the elements: u (left) — v (right) iff
  // u ≺ v.  A maximum matching selects chain successor links; uncovered right
  // vertices are chain heads, and the number of chains is n - |matching|.
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && p.le[u][v]) adj[u].push_back(v);

  Matcher m(n, adj);
  m.run();

  ChainDecomposition dec;
  for (int head = 0; head < n; ++head) {
    if (m.matchR[head] != -1) continue;  // has a predecessor in its chain
    std::vector<int> chain;
    for (int u = head; u != -1; u = m.matchL[u]) chain.push_back(u);
    dec.chains.push_back(std::move(chain));
  }
  return dec;
}

int width(const MarkedPoset& p) {
  return static_cast<int>(chain_cover(p).chains.size());
}

}  // namespace mixthin
