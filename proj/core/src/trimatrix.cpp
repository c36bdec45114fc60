#include "mixthin/trimatrix.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "mixthin/errors.hpp"

namespace mixthin {

int TriMatrix::index_of_key(int key) const {
  for (int i = 0; i < size(); ++i)
    if (groups[i][0] == key) return i;
  return -1;
}

TriMatrix adjacency_trimatrix(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n)
    throw InvalidOrder("adjacency_trimatrix: order has " +
                       std::to_string(order.size()) + " entries, expected " +
                       std::to_string(g.n));
  std::vector<char> seen(g.n, 0);
  for (int v : order) {
    if (v < 0 || v >= g.n)
      throw InvalidOrder("adjacency_trimatrix: vertex out of range: " +
                         std::to_string(v));
    if (seen[v])
      throw InvalidOrder("adjacency_trimatrix: duplicate vertex: " +
                         std::to_string(v));
    seen[v] = 1;
  }

  TriMatrix m;
  m.groups.reserve(order.size());
  for (int v : order) m.groups.push_back({v});
  m.cells.assign(static_cast<std::size_t>(g.n) * g.n, Cell::Zero);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j && g.adj[order[i]][order[j]])
        m.cells[static_cast<std::size_t>(i) * g.n + j] = Cell::One;
  return m;
}

void contract_symmetric(TriMatrix& m, int a, int b) {
  const int n = m.size();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw ValidationError("contract_symmetric: group index out of range");
  if (a == b)
    throw SelfContraction("contract_symmetric: cannot merge a group with itself");
  if (a > b) std::swap(a, b);

  auto old_at = [&](int i, int j) {
    return m.cells[static_cast<std::size_t>(i) * n + j];
  };

  // Values of the merged row against every old index (diagonal at slot a).
  std::vector<Cell> mergedRow(n);
  for (int t = 0; t < n; ++t) {
    if (t == a || t == b) continue;
    const Cell x = old_at(a, t);
    const Cell y = old_at(b, t);
    mergedRow[t] = (x == y) ? x : Cell::Red;
  }
  {
    const Cell da = old_at(a, a);
    const Cell db = old_at(b, b);
    const Cell join = old_at(a, b);
    mergedRow[a] = (da == db && db == join) ? da : Cell::Red;
  }

  const int nn = n - 1;
  std::vector<Cell> next(static_cast<std::size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i) {
    const int oi = (i < b) ? i : i + 1;
    for (int j = 0; j < nn; ++j) {
      const int oj = (j < b) ? j : j + 1;
      Cell v;
      if (oi == a && oj == a)
        v = mergedRow[a];
      else if (oi == a)
        v = mergedRow[oj];
      else if (oj == a)
        v = mergedRow[oi];
      else
        v = old_at(oi, oj);
      next[static_cast<std::size_t>(i) * nn + j] = v;
    }
  }
  m.cells = std::move(next);

  std::vector<int> merged;
  merged.reserve(m.groups[a].size() + m.groups[b].size());
  std::merge(m.groups[a].begin(), m.groups[a].end(), m.groups[b].begin(),
             m.groups[b].end(), std::back_inserter(merged));
  m.groups[a] = std::move(merged);
  m.groups.erase(m.groups.begin() + b);
}

int row_red_count(const TriMatrix& m, int i, RedMode mode) {
  const int n = m.size();
  int count = 0;
  for (int j = 0; j < n; ++j) {
    if (mode == RedMode::natural && j == i) continue;
    if (m.at(i, j) == Cell::Red) ++count;
  }
  return count;
}

int red_number(const TriMatrix& m, RedMode mode) {
  int best = 0;
  for (int i = 0; i < m.size(); ++i)
    best = std::max(best, row_red_count(m, i, mode));
  return best;
}

}  // namespace mixthin
