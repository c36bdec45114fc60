// Encoding of an arbitrary finite poset as an inversion-free proper mixed-thin
// graph (the poset -> graph direction), plus the procedural and first-order
// decoders.  The graph -> poset direction lives in transduction.cpp.
//
// Shape: a width-k chain cover C_1..C_k of the poset gives graph vertices
// a_v = v and b_v = n + v, plus a ladder o_1..o_h (h = longest chain) with ids
// 2n + m - 1.  Ladder rungs attach to a_v and b_v exactly up to the rank of v
// in its chain, so rank is readable off adjacency; a_u -- b_v records u <= v
// across different chains.  Marks: A, B, O, and C_i per chain.  The witness
// has 2k + 1 parts (the ladder plus one part per side of each chain) with all
// pair relations on plain adjacency.

#include "mixthin/transduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bitsets.hpp"
#include "mixthin/errors.hpp"
#include "mixthin/poset.hpp"

namespace mixthin {

namespace {

std::string chain_mark(int i) { return "C_" + std::to_string(i); }

}  // namespace

GraphEncoding encode_poset_to_graph(const MarkedPoset& p) {
  const int n = p.n;
  const ChainDecomposition cover = chain_cover(p);
  const int k = static_cast<int>(cover.chains.size());
  int h = 0;
  for (const auto& chain : cover.chains) h = std::max(h, static_cast<int>(chain.size()));

  std::vector<int> chainOf(n, -1), rank(n, 0);
  for (int c = 0; c < k; ++c)
    for (int v : cover.chains[c]) {
      chainOf[v] = c;
      for (int u : cover.chains[c])
        if (p.le[u][v]) ++rank[v];
    }

  const int vertexCount = 2 * n + h;
  auto aId = [&](int v) { return v; };
  auto bId = [&](int v) { return n + v; };
  auto oId = [&](int m) { return 2 * n + m - 1; };  // m in 1..h

  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int m = 1; m <= rank[v]; ++m) {
      edges.emplace_back(oId(m), aId(v));
      edges.emplace_back(oId(m), bId(v));
    }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (chainOf[u] != chainOf[v] && p.le[u][v]) edges.emplace_back(aId(u), bId(v));

  GraphEncoding out;
  out.graph = make_graph(vertexCount, edges);

  out.marks["A"] = {};
  out.marks["B"] = {};
  out.marks["O"] = {};
  for (int v = 0; v < n; ++v) out.marks["A"].push_back(aId(v));
  for (int v = 0; v < n; ++v) out.marks["B"].push_back(bId(v));
  for (int m = 1; m <= h; ++m) out.marks["O"].push_back(oId(m));
  for (int c = 0; c < k; ++c) {
    std::vector<int> ids;
    for (int v : cover.chains[c]) {
      ids.push_back(aId(v));
      ids.push_back(bId(v));
    }
    std::sort(ids.begin(), ids.end());
    out.marks[chain_mark(c + 1)] = std::move(ids);
  }

  // Witness: part 1 = ladder, part 1 + i = A side of chain i, part
  // 1 + k + i = B side of chain i.
  MixedThinWitness& w = out.witness;
  w.k = 2 * k + 1;
  w.part.assign(vertexCount, 1);
  for (int v = 0; v < n; ++v) {
    w.part[aId(v)] = 2 + chainOf[v];
    w.part[bId(v)] = 2 + k + chainOf[v];
  }
  w.variant = Variant::properInversionFree;

  std::vector<int> ladder;
  for (int m = 1; m <= h; ++m) ladder.push_back(oId(m));
  std::vector<std::vector<int>> aSide(k), bSide(k);
  for (int c = 0; c < k; ++c)
    for (int v : cover.chains[c]) {
      aSide[c].push_back(aId(v));
      bSide[c].push_back(bId(v));
    }

  // Ladder against any other part: interleave starting with o_1.
  auto interleave = [&](const std::vector<int>& side) {
    std::vector<int> order;
    std::size_t m = 0;
    for (std::size_t t = 0; t < side.size(); ++t) {
      order.push_back(ladder[m++]);
      order.push_back(side[t]);
    }
    for (; m < ladder.size(); ++m) order.push_back(ladder[m]);
    return order;
  };
  // A side of chain i against B side of chain j (i != j): a_u goes before b_v
  // exactly when u <= v in the poset, i.e. when rank(u) is at most the number
  // of chain-i elements below v; a wins ties.
  auto merge_ab = [&](int ci, int cj) {
    std::vector<int> order;
    std::size_t a = 0;
    const std::vector<int>& ai = cover.chains[ci];
    const std::vector<int>& bj = cover.chains[cj];
    for (std::size_t t = 0; t <= bj.size(); ++t) {
      int key;
      if (t < bj.size()) {
        key = 0;
        for (int u : ai)
          if (p.le[u][bj[t]]) ++key;
      } else {
        key = static_cast<int>(ai.size());
      }
      while (a < ai.size() && rank[ai[a]] <= key) order.push_back(aId(ai[a++]));
      if (t < bj.size()) order.push_back(bId(bj[t]));
    }
    return order;
  };
  auto concat = [](const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> order = first;
    order.insert(order.end(), second.begin(), second.end());
    return order;
  };
  auto sideOf = [&](int part) -> const std::vector<int>& {
    return part <= 1 + k ? aSide[part - 2] : bSide[part - 2 - k];
  };

  for (int r = 1; r <= w.k; ++r)
    for (int s = r; s <= w.k; ++s) {
      std::vector<int> order;
      if (r == 1 && s == 1) {
        order = ladder;
      } else if (r == 1) {
        order = interleave(sideOf(s));
      } else if (r == s) {
        order = sideOf(r);
      } else if (r <= 1 + k && s > 1 + k && (s - 1 - k) != (r - 1)) {
        order = merge_ab(r - 2, s - 2 - k);
      } else {
        // Pairs with no edges between them: both A sides, both B sides, or
        // the two sides of one chain.
        order = concat(sideOf(r), sideOf(s));
      }
      if (!order.empty()) w.orders[{r, s}] = std::move(order);
    }

  const VerificationReport report = verify_witness(out.graph, w);
  if (!report.accepted)
    throw Error("encode_poset_to_graph: constructed witness failed verification (" +
                (report.violations.empty() ? std::string("structure")
                                           : report.violations.front().condition) +
                ")");
  return out;
}

namespace {

std::vector<int> graph_mark_set(const std::map<std::string, std::vector<int>>& marks,
                                const std::string& name) {
  auto it = marks.find(name);
  return it == marks.end() ? std::vector<int>{} : it->second;
}

// Chain index per vertex from the C_i marks; 0 when unmarked.  Throws when an
// A/B vertex carries two chain marks.
std::vector<int> chain_index(const Graph& g,
                             const std::map<std::string, std::vector<int>>& marks) {
  std::vector<int> chainOf(g.n, 0);
  for (const auto& [name, ids] : marks) {
    if (name.size() < 3 || name.compare(0, 2, "C_") != 0) continue;
    int value = 0;
    bool numeric = true;
    for (std::size_t t = 2; t < name.size(); ++t) {
      if (name[t] < '0' || name[t] > '9') {
        numeric = false;
        break;
      }
      value = value * 10 + (name[t] - '0');
    }
    if (!numeric || value < 1) continue;
    for (int v : ids) {
      if (v < 0 || v >= g.n)
        throw NotAnEncoding("decode_graph_to_poset: mark " + name + " outside the graph");
      if (chainOf[v] != 0)
        throw NotAnEncoding("decode_graph_to_poset: vertex " + std::to_string(v) +
                            " carries two chain marks");
      chainOf[v] = value;
    }
  }
  return chainOf;
}

MarkedPoset poset_from_relation(const std::vector<int>& domain,
                                const std::vector<detail::Bitset>& rel) {
  const int m = static_cast<int>(domain.size());
  MarkedPoset p;
  p.n = m;
  p.le.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) p.le[a][b] = rel[domain[a]].test(domain[b]);

  for (int a = 0; a < m; ++a) {
    if (!p.le[a][a]) throw NotAnEncoding("decode_graph_to_poset: relation is not reflexive");
    for (int b = 0; b < m; ++b) {
      if (a != b && p.le[a][b] && p.le[b][a])
        throw NotAnEncoding("decode_graph_to_poset: relation is not antisymmetric");
      if (!p.le[a][b]) continue;
      for (int c = 0; c < m; ++c)
        if (p.le[b][c] && !p.le[a][c])
          throw NotAnEncoding("decode_graph_to_poset: relation is not transitive");
    }
  }
  return p;
}

}  // namespace

MarkedPoset decode_graph_to_poset(const Graph& g,
                                  const std::map<std::string, std::vector<int>>& marks,
                                  DecodeMode mode) {
  using detail::Bitset;
  const int total = g.n;
  Bitset aMask(total), bMask(total), oMask(total);
  for (int v : graph_mark_set(marks, "A")) {
    if (v < 0 || v >= total) throw NotAnEncoding("decode_graph_to_poset: mark A outside the graph");
    aMask.set(v);
  }
  for (int v : graph_mark_set(marks, "B")) {
    if (v < 0 || v >= total) throw NotAnEncoding("decode_graph_to_poset: mark B outside the graph");
    if (aMask.test(v))
      throw NotAnEncoding("decode_graph_to_poset: vertex " + std::to_string(v) +
                          " is marked both A and B");
    bMask.set(v);
  }
  for (int v : graph_mark_set(marks, "O")) {
    if (v < 0 || v >= total) throw NotAnEncoding("decode_graph_to_poset: mark O outside the graph");
    if (aMask.test(v) || bMask.test(v))
      throw NotAnEncoding("decode_graph_to_poset: vertex " + std::to_string(v) +
                          " is marked O and A/B");
    oMask.set(v);
  }
  const std::vector<int> chainOf = chain_index(g, marks);

  // Ladder neighbourhoods drive comparability inside a chain.
  std::vector<Bitset> ladderNbh(total, Bitset(total));
  for (int v = 0; v < total; ++v) {
    for (int u : neighbors(g, v))
      if (oMask.test(u)) ladderNbh[v].set(u);
  }
  auto sameChain = [&](int u, int v) { return chainOf[u] != 0 && chainOf[u] == chainOf[v]; };
  auto ladderBelow = [&](int u, int v) { return !(ladderNbh[u] & ~ladderNbh[v]).any(); };

  std::vector<int> domain;
  for (int v = 0; v < total; ++v)
    if (aMask.test(v)) domain.push_back(v);
  const int m = static_cast<int>(domain.size());

  std::vector<Bitset> rel(total, Bitset(total));
  if (mode == DecodeMode::procedural) {
    // Twin of an A vertex: the unique B vertex of the same chain with the same
    // ladder neighbourhood.
    std::vector<int> twin(total, -1);
    for (int a : domain) {
      for (std::size_t b = bMask.find_first(); b != Bitset::npos; b = bMask.find_next(b)) {
        if (!sameChain(a, static_cast<int>(b)) || ladderNbh[a] != ladderNbh[b]) continue;
        if (twin[a] != -1)
          throw NotAnEncoding("decode_graph_to_poset: vertex " + std::to_string(a) +
                              " has two twins");
        twin[a] = static_cast<int>(b);
      }
      if (twin[a] == -1)
        throw NotAnEncoding("decode_graph_to_poset: vertex " + std::to_string(a) +
                            " has no twin");
    }
    for (int u : domain)
      for (int v : domain) {
        const bool below = sameChain(u, v) ? ladderBelow(u, v) : has_edge(g, u, twin[v]);
        if (below) rel[u].set(v);
      }
  } else {
    // First-order mode: same-chain, ladder-containment and twin relations as
    // dense matrices, composed exactly like the defining formulas.
    std::vector<Bitset> sc(total, Bitset(total));
    std::map<int, Bitset> chainMask;
    for (int v = 0; v < total; ++v)
      if (chainOf[v] != 0) {
        auto it = chainMask.emplace(chainOf[v], Bitset(total)).first;
        it->second.set(v);
      }
    for (int v = 0; v < total; ++v)
      if (chainOf[v] != 0) sc[v] = chainMask.at(chainOf[v]);
    std::vector<Bitset> leInt(total, Bitset(total));
    for (int u = 0; u < total; ++u)
      for (int v = 0; v < total; ++v)
        if (ladderBelow(u, v)) leInt[u].set(v);
    std::vector<Bitset> leIntT = detail::transpose(leInt);
    std::vector<Bitset> twins(total, Bitset(total));
    for (int u = 0; u < total; ++u) twins[u] = sc[u] & leInt[u] & leIntT[u];
    std::vector<Bitset> twinsT = detail::transpose(twins);

    std::vector<Bitset> adjRows(total, Bitset(total));
    for (int u = 0; u < total; ++u)
      for (int v : neighbors(g, u)) adjRows[u].set(v);

    std::vector<Bitset> reached(total, Bitset(total));  // u -> A-twin -> edge
    for (int u = 0; u < total; ++u) {
      Bitset partners = twins[u];
      partners &= aMask;
      for (std::size_t t = partners.find_first(); t != Bitset::npos; t = partners.find_next(t))
        reached[u] |= adjRows[t];
    }
    std::vector<Bitset> cross(total, Bitset(total));
    for (int u = 0; u < total; ++u) {
      Bitset viaB = reached[u];
      viaB &= bMask;
      for (std::size_t t = viaB.find_first(); t != Bitset::npos; t = viaB.find_next(t))
        cross[u] |= twinsT[t];
    }
    for (int u = 0; u < total; ++u) rel[u] = (~sc[u] | leInt[u]) & (sc[u] | cross[u]);
  }

  return poset_from_relation(domain, rel);
}

}  // namespace mixthin
