#include "mixthin/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mixthin/errors.hpp"

namespace mixthin {

namespace {

// Orders the given vertices by grouping their integer levels into maximal
// windows of adjacent values (consecutive present levels differing by at
// most 1 share a window) and sorting each window by the tiebreak.  Within a
// part pair only two level residues occur, so windows never chain further
// than two adjacent levels.
std::vector<int> window_order(const std::vector<int>& members,
                              const std::vector<int>& level,
                              const std::vector<long long>& tiebreak) {
  std::vector<int> out = members;
  std::sort(out.begin(), out.end(), [&](int x, int y) {
    return level[x] < level[y];
  });
  // Cut into windows.
  std::vector<int> result;
  std::size_t start = 0;
  while (start < out.size()) {
    std::size_t end = start + 1;
    while (end < out.size() && level[out[end]] <= level[out[end - 1]] + 1) ++end;
    std::sort(out.begin() + start, out.begin() + end, [&](int x, int y) {
      return tiebreak[x] < tiebreak[y];
    });
    result.insert(result.end(), out.begin() + start, out.begin() + end);
    start = end;
  }
  return result;
}

// Fills all pair orders of a k-part witness from per-vertex levels and
// tiebreaks via window_order.
void fill_window_orders(MixedThinWitness& w, int n,
                        const std::vector<int>& level,
                        const std::vector<long long>& tiebreak) {
  std::vector<std::vector<int>> members(w.k + 1);
  for (int v = 0; v < n; ++v) members[w.part[v]].push_back(v);
  for (int i = 1; i <= w.k; ++i) {
    for (int j = i; j <= w.k; ++j) {
      std::vector<int> m = members[i];
      if (j != i) m.insert(m.end(), members[j].begin(), members[j].end());
      w.orders[{i, j}] = window_order(m, level, tiebreak);
    }
  }
}

}  // namespace

std::pair<Graph, MixedThinWitness> gen_complement_matching(int t) {
  if (t < 1)
    throw InvalidParameters("gen_complement_matching: t must be >= 1");
  const int n = 2 * t;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
  Graph g = make_graph(n, std::move(edges));

  MixedThinWitness w;
  w.k = 1;
  w.part.assign(n, 1);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);  // matched pairs are consecutive
  w.orders[{1, 1}] = std::move(order);
  w.complementPairs.insert({1, 1});
  w.variant = Variant::properInversionFree;
  return {std::move(g), std::move(w)};
}

std::pair<Graph, MixedThinWitness> gen_grid2d(int m, int n) {
  if (m < 1 || n < 1)
    throw InvalidParameters("gen_grid2d: both dimensions must be >= 1");
  const int N = m * n;
  auto id = [&](int a, int b) { return (a - 1) * n + (b - 1); };
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= n; ++b) {
      if (b < n) edges.emplace_back(id(a, b), id(a, b + 1));
      if (a < m) edges.emplace_back(id(a, b), id(a + 1, b));
    }
  Graph g = make_graph(N, std::move(edges));

  MixedThinWitness w;
  w.k = 3;
  w.part.assign(N, 1);
  std::vector<int> level(N);
  std::vector<long long> tiebreak(N);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= n; ++b) {
      const int v = id(a, b);
      w.part[v] = ((a - 1) % 3) + 1;
      level[v] = a;
      // Within a window of two adjacent rows, order column-first with the row
      // breaking ties, which also makes single-row windows row-major.
      tiebreak[v] = static_cast<long long>(b) * (m + 2) + a;
    }
  fill_window_orders(w, N, level, tiebreak);
  w.variant = Variant::properInversionFree;
  return {std::move(g), std::move(w)};
}

std::pair<Graph, MixedThinWitness> gen_tree(
    const std::vector<std::pair<int, int>>& edges, int root) {
  const int n = static_cast<int>(edges.size()) + 1;
  if (root < 0 || root >= n) throw NotATree("gen_tree: root out of range");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw NotATree("gen_tree: edge endpoint out of range (vertex ids must "
                     "be 0..#edges)");
    if (u == v) throw NotATree("gen_tree: self-loop");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw NotATree("gen_tree: duplicate edge");
  }

  // Depths by BFS; with n-1 edges, full reachability makes it a tree.
  std::vector<int> depth(n, -1), bfsQueue;
  depth[root] = 0;
  bfsQueue.push_back(root);
  for (std::size_t head = 0; head < bfsQueue.size(); ++head) {
    const int u = bfsQueue[head];
    for (int v : adj[u])
      if (depth[v] == -1) {
        depth[v] = depth[u] + 1;
        bfsQueue.push_back(v);
      }
  }
  if (static_cast<int>(bfsQueue.size()) != n)
    throw NotATree("gen_tree: edges do not connect all vertices");

  // Rooted pre-order with children visited in ascending id; this lays each
  // vertex directly before its subtree, so sibling stars never interleave.
  std::vector<int> preOrd(n, -1);
  {
    int counter = 0;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      preOrd[u] = counter++;
      for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it)
        if (depth[*it] == depth[u] + 1 && preOrd[*it] == -1) stack.push_back(*it);
    }
  }

  Graph g = make_graph(n, edges);
  MixedThinWitness w;
  w.k = 3;
  w.part.assign(n, 1);
  std::vector<int> level(n);
  std::vector<long long> tiebreak(n);
  for (int v = 0; v < n; ++v) {
    w.part[v] = ((depth[v] + 2) % 3) + 1;
    level[v] = depth[v];
    tiebreak[v] = preOrd[v];
  }
  fill_window_orders(w, n, level, tiebreak);
  w.variant = Variant::properInversionFree;
  return {std::move(g), std::move(w)};
}

std::pair<Graph, MixedThinWitness> gen_multidim(int d, int m,
                                                GridMetric metric) {
  if (d < 1 || m < 1)
    throw InvalidParameters("gen_multidim: d and m must be >= 1");
  long long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= m;
    if (total > 200000)
      throw InvalidParameters("gen_multidim: m^d too large");
  }
  const int N = static_cast<int>(total);

  // coords[v] = (a_1..a_d), each in 1..m; v is the lexicographic rank.
  std::vector<std::vector<int>> coord(N, std::vector<int>(d, 1));
  for (int v = 1; v < N; ++v) {
    coord[v] = coord[v - 1];
    for (int i = d - 1; i >= 0; --i) {
      if (coord[v][i] < m) {
        ++coord[v][i];
        break;
      }
      coord[v][i] = 1;
    }
  }
  auto vid = [&](const std::vector<int>& a) {
    long long x = 0;
    for (int i = 0; i < d; ++i) x = x * m + (a[i] - 1);
    return static_cast<int>(x);
  };

  std::vector<std::pair<int, int>> edges;
  if (metric == GridMetric::cartesian) {
    for (int v = 0; v < N; ++v)
      for (int i = 0; i < d; ++i)
        if (coord[v][i] < m) {
          std::vector<int> b = coord[v];
          ++b[i];
          edges.emplace_back(v, vid(b));
        }
  } else {
    // Chebyshev distance 1: every nonzero {-1,0,1} offset vector.
    std::vector<int> delta(d, -1);
    while (true) {
      bool nonzero = false;
      for (int x : delta) nonzero |= (x != 0);
      if (nonzero) {
        for (int v = 0; v < N; ++v) {
          std::vector<int> b = coord[v];
          bool ok = true;
          for (int i = 0; i < d && ok; ++i) {
            b[i] += delta[i];
            ok = b[i] >= 1 && b[i] <= m;
          }
          if (ok && vid(b) > v) edges.emplace_back(v, vid(b));
        }
      }
      int i = d - 1;
      while (i >= 0 && delta[i] == 1) delta[i--] = -1;
      if (i < 0) break;
      ++delta[i];
    }
  }
  Graph g = make_graph(N, std::move(edges));

  MixedThinWitness w;
  int k = 1;
  for (int i = 0; i < d - 1; ++i) k *= 3;
  w.k = k;
  w.part.assign(N, 1);
  for (int v = 0; v < N; ++v) {
    int p = 0;
    for (int i = d - 2; i >= 0; --i) p = p * 3 + (coord[v][i] % 3);
    w.part[v] = 1 + p;
  }

  // nearby: all but the last coordinate within 1.
  auto nearby = [&](int u, int v) {
    for (int i = 0; i < d - 1; ++i)
      if (std::abs(coord[u][i] - coord[v][i]) > 1) return false;
    return true;
  };
  // Strictly-before comparator; totality within any single part pair is
  // verified below rather than assumed.
  auto before = [&](int u, int v) {
    const bool nb = nearby(u, v);
    if (!nb) {
      for (int i = 0; i < d - 1; ++i) {
        if (coord[u][i] + 1 < coord[v][i]) {
          bool prefixClose = true;
          for (int l = 0; l < i; ++l)
            if (std::abs(coord[u][l] - coord[v][l]) > 1) {
              prefixClose = false;
              break;
            }
          if (prefixClose) return true;
        }
      }
      return false;
    }
    if (coord[u][d - 1] != coord[v][d - 1])
      return coord[u][d - 1] < coord[v][d - 1];
    for (int i = 0; i < d - 1; ++i)
      if (coord[u][i] != coord[v][i]) return coord[u][i] < coord[v][i];
    return false;  // equal vertices
  };

  std::vector<std::vector<int>> members(w.k + 1);
  for (int v = 0; v < N; ++v) members[w.part[v]].push_back(v);
  for (int i = 1; i <= w.k; ++i) {
    for (int j = i; j <= w.k; ++j) {
      std::vector<int> pool = members[i];
      if (j != i) pool.insert(pool.end(), members[j].begin(), members[j].end());
      std::vector<int> sorted;
      sorted.reserve(pool.size());
      for (int v : pool) {
        std::size_t pos = sorted.size();
        while (pos > 0 && before(v, sorted[pos - 1])) --pos;
        sorted.insert(sorted.begin() + pos, v);
      }
      for (std::size_t p = 0; p < sorted.size(); ++p)
        for (std::size_t q = p + 1; q < sorted.size(); ++q)
          if (!before(sorted[p], sorted[q]) || before(sorted[q], sorted[p]))
            throw ValidationError(
                "gen_multidim: order comparator is not total on pair (" +
                std::to_string(i) + "," + std::to_string(j) + ")");
      w.orders[{i, j}] = std::move(sorted);
    }
  }
  w.variant = Variant::properInversionFree;
  return {std::move(g), std::move(w)};
}

std::pair<Graph, MixedThinWitness> gen_lower_bound(int k, int h) {
  if (k < 1) throw InvalidParameters("gen_lower_bound: k must be >= 1");
  if (h < 4 * k - 4)
    throw InvalidParameters("gen_lower_bound: h must be >= 4k-4");
  const int C = 2 * k + 1;
  const int n = C * (h + 1);
  auto id = [&](int chain, int j) { return (chain - 1) * (h + 1) + j; };
  auto wrap = [&](int chain) { return ((chain - 1) % C) + 1; };

  std::vector<std::pair<int, int>> edges;
  // Chains are cliques.
  for (int i = 1; i <= C; ++i)
    for (int j = 0; j <= h; ++j)
      for (int j2 = j + 1; j2 <= h; ++j2) edges.emplace_back(id(i, j), id(i, j2));
  // Slant edges from chain i up to the chain a+1 steps around the cycle:
  // block b of chain i sees everything from height (b+1)k+a upward there.
  for (int i = 1; i <= C; ++i) {
    for (int a = 0; a < k; ++a) {
      const int ip = wrap(i + a + 1);
      for (int b = 0; (b + 1) * k + a <= h; ++b) {
        const int jlo = std::max(0, (b - 1) * k + a + 1);
        const int jhi = std::min(h, b * k + a);
        for (int j = jlo; j <= jhi; ++j)
          for (int jp = (b + 1) * k + a; jp <= h; ++jp)
            edges.emplace_back(id(i, j), id(ip, jp));
      }
    }
  }
  Graph g = make_graph(n, std::move(edges));

  MixedThinWitness w;
  w.k = C;
  w.part.assign(n, 1);
  for (int i = 1; i <= C; ++i)
    for (int j = 0; j <= h; ++j) w.part[id(i, j)] = i;
  for (int i = 1; i <= C; ++i) {
    std::vector<int> ord;
    for (int j = 0; j <= h; ++j) ord.push_back(id(i, j));
    w.orders[{i, i}] = std::move(ord);
  }
  // Pair order for chains at cyclic distance a+1: start with the other
  // chain's first k+a vertices and this chain's first a+1, then alternate
  // k-blocks so every slant block meets its neighbours contiguously.
  for (int i = 1; i <= C; ++i) {
    for (int a = 0; a < k; ++a) {
      const int ip = wrap(i + a + 1);
      std::vector<int> ord;
      auto appendRange = [&](int chain, int lo, int hi) {
        for (int j = lo; j <= std::min(hi, h); ++j) ord.push_back(id(chain, j));
      };
      appendRange(ip, 0, k + a - 1);
      appendRange(i, 0, a);
      for (int round = 1;; ++round) {
        const int lo1 = round * k + a;
        const int lo2 = (round - 1) * k + a + 1;
        if (lo1 > h && lo2 > h) break;
        appendRange(ip, lo1, (round + 1) * k + a - 1);
        appendRange(i, lo2, round * k + a);
      }
      w.orders[pair_key(i, ip)] = std::move(ord);
    }
  }
  w.variant = Variant::properInversionFree;
  return {std::move(g), std::move(w)};
}

}  // namespace mixthin
