// Encoding between inversion-free proper mixed-thin graphs and marked posets
// (graph -> poset direction), plus the matching decoders and the explicit
// chain-cover certificate.  The poset -> graph direction lives in
// graph_encoding.cpp.
//
// Shape of the encoding produced here: graph vertices keep their ids and carry
// part marks; appended "centre" elements record cross-part successor pairs (S)
// and the endpoints of maximal homogeneous runs (B_i_j).  Each centre sits
// cover-wise between its two join vertices, centres of equal join type are
// ordered by dominance of their joins, and C_i_j marks element 0 exactly when
// the pair relation is complemented adjacency.

#include "mixthin/transduction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bitsets.hpp"
#include "mixthin/errors.hpp"

namespace mixthin {

std::string decode_mode_name(DecodeMode mode) {
  return mode == DecodeMode::procedural ? "proc" : "fo";
}

DecodeMode decode_mode_from_name(const std::string& name) {
  if (name == "proc" || name == "procedural") return DecodeMode::procedural;
  if (name == "fo") return DecodeMode::fo;
  throw UnknownSymbol("decode_mode_from_name: unknown mode '" + name + "'");
}

namespace {

std::string v_mark(int i) { return "V_" + std::to_string(i); }

std::string b_mark(int i, int j) {
  return "B_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string c_mark(int i, int j) {
  return "C_" + std::to_string(i) + "_" + std::to_string(j);
}

// Parses "<prefix>_<a>" or "<prefix>_<a>_<b>"; returns false when the name is
// not of that shape (such marks are simply foreign to the encoding).
bool parse_indexed_mark(const std::string& name, const std::string& prefix,
                        int arity, std::vector<int>& out) {
  if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0 ||
      name[prefix.size()] != '_')
    return false;
  out.clear();
  std::size_t pos = prefix.size() + 1;
  while (pos < name.size()) {
    std::size_t end = name.find('_', pos);
    if (end == std::string::npos) end = name.size();
    if (end == pos) return false;
    int value = 0;
    for (std::size_t t = pos; t < end; ++t) {
      if (name[t] < '0' || name[t] > '9') return false;
      value = value * 10 + (name[t] - '0');
    }
    out.push_back(value);
    pos = end + 1;
  }
  return static_cast<int>(out.size()) == arity;
}

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

// Maximal runs of the pair order of {i, j} in which every relevant vertex pair
// (cross pairs for i < j, all pairs for i == j) lies in the pair relation.
// Returned as position intervals [s, e] with s < e; singleton runs yield no
// connector and are dropped here.
std::vector<std::pair<int, int>> maximal_homogeneous_runs(const Graph& g,
                                                          const MixedThinWitness& w,
                                                          int i, int j) {
  const std::vector<int>& order = pair_order(w, i, j);
  const int m = static_cast<int>(order.size());
  std::vector<int> left(m, 0);  // left[t] = least s with [s, t] homogeneous
  for (int t = 1; t < m; ++t) {
    int lim = left[t - 1];
    left[t] = lim;
    for (int x = t - 1; x >= lim; --x) {
      const bool relevant = (i == j) || (w.part[order[x]] != w.part[order[t]]);
      if (relevant && !pair_edge(g, w, i, j, order[x], order[t])) {
        left[t] = x + 1;  // largest violating partner bounds the run
        break;
      }
    }
  }
  std::vector<std::pair<int, int>> runs;
  for (int e = 0; e < m; ++e) {
    if (e + 1 < m && left[e + 1] <= left[e]) continue;  // extendable rightwards
    if (left[e] < e) runs.emplace_back(left[e], e);
  }
  return runs;
}

struct CentreSpec {
  int kindRank;  // 0 = successor connector, 1 = border connector
  int i, j;      // the part pair the connector belongs to (i <= j)
  int posLower, posUpper;  // join positions inside their own parts
  int lower, upper;        // join vertex ids
};

}  // namespace

MarkedPoset encode_graph_to_poset(const Graph& g, const MixedThinWitness& witness) {
  MixedThinWitness w = witness;
  w.variant = Variant::properInversionFree;
  const VerificationReport report = verify_witness(g, w);
  if (!report.accepted) {
    std::string why = report.violations.empty() ? "structure" : report.violations.front().condition;
    throw InvalidWitness("encode_graph_to_poset: witness rejected at the inversion-free proper variant (" +
                         why + ")");
  }
  const int n = g.n;
  const int k = w.k;

  std::vector<int> posInPart(n, 0);
  for (int i = 1; i <= k; ++i) {
    const std::vector<int>& members = part_members(w, i);
    for (int t = 0; t < static_cast<int>(members.size()); ++t) posInPart[members[t]] = t;
  }

  std::vector<CentreSpec> centres;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const std::vector<int>& order = pair_order(w, i, j);
      for (int t = 0; t + 1 < static_cast<int>(order.size()); ++t) {
        const int v = order[t], u = order[t + 1];
        if (w.part[v] == i && w.part[u] == j)
          centres.push_back({0, i, j, posInPart[v], posInPart[u], v, u});
      }
    }
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      const std::vector<int>& order = pair_order(w, i, j);
      for (const auto& [s, e] : maximal_homogeneous_runs(g, w, i, j)) {
        int lower = order[s], upper = order[e];
        // Keep the lower join in the smaller-indexed part.
        if (i != j && w.part[lower] == j && w.part[upper] == i) std::swap(lower, upper);
        centres.push_back({1, i, j, posInPart[lower], posInPart[upper], lower, upper});
      }
    }

  std::sort(centres.begin(), centres.end(), [](const CentreSpec& a, const CentreSpec& b) {
    return std::tie(a.kindRank, a.i, a.j, a.posLower, a.posUpper) <
           std::tie(b.kindRank, b.i, b.j, b.posLower, b.posUpper);
  });

  const int total = n + static_cast<int>(centres.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i <= k; ++i) {
    const std::vector<int>& members = part_members(w, i);
    for (int t = 0; t + 1 < static_cast<int>(members.size()); ++t)
      rel.emplace_back(members[t], members[t + 1]);
  }
  for (int c = 0; c < static_cast<int>(centres.size()); ++c) {
    rel.emplace_back(centres[c].lower, n + c);
    rel.emplace_back(n + c, centres[c].upper);
  }
  // Dominance between centres whose joins live in the same pair of parts:
  // both joins strictly below both joins.
  std::map<std::pair<int, int>, std::vector<int>> byJoinType;
  for (int c = 0; c < static_cast<int>(centres.size()); ++c)
    byJoinType[{w.part[centres[c].lower], w.part[centres[c].upper]}].push_back(c);
  for (const auto& [type, group] : byJoinType)
    for (int a : group)
      for (int b : group)
        if (centres[a].posLower < centres[b].posLower && centres[a].posUpper < centres[b].posUpper)
          rel.emplace_back(n + a, n + b);

  MarkedPoset p = transitive_closure(rel, total);

  for (int i = 1; i <= k; ++i) {
    std::vector<int> ids = part_members(w, i);
    std::sort(ids.begin(), ids.end());
    p.marks[v_mark(i)] = std::move(ids);
  }
  p.marks["S"] = {};
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      p.marks[b_mark(i, j)] = {};
      p.marks[c_mark(i, j)] = {};
    }
  for (int c = 0; c < static_cast<int>(centres.size()); ++c) {
    if (centres[c].kindRank == 0)
      p.marks["S"].push_back(n + c);
    else
      p.marks[b_mark(centres[c].i, centres[c].j)].push_back(n + c);
  }
  if (n > 0)
    for (const auto& pair : w.complementPairs) p.marks[c_mark(pair.first, pair.second)] = {0};
  return p;
}

namespace {

// ---------------------------------------------------------------------------
// Shared decoding machinery (procedural mode and the certificate)
// ---------------------------------------------------------------------------

struct DecodedCentre {
  int id = -1;
  int lower = -1, upper = -1;  // the unique cover joins (graph vertices)
};

struct ParsedEncoding {
  int k = 0;
  int vertexCount = 0;                     // V-marked elements, ids 0..vertexCount-1
  std::vector<int> partOf;                 // per element; 0 for centres
  std::vector<std::vector<int>> parts;     // 1-based; members in internal chain order
  std::vector<int> posInPart;              // per element; -1 for centres
  std::map<std::pair<int, int>, std::vector<DecodedCentre>> succCentres;   // i < j
  std::map<std::pair<int, int>, std::vector<DecodedCentre>> borderCentres; // i <= j
  std::map<std::pair<int, int>, bool> complemented;                        // i <= j
  // Reconstructed pair orders: position of each vertex of V_i u V_j in the
  // decoded order of the pair {i, j}; -1 for elements outside the union.
  std::map<std::pair<int, int>, std::vector<int>> pairPos;
  std::map<std::pair<int, int>, std::vector<int>> pairOrder;
};

std::vector<int> mark_set(const MarkedPoset& p, const std::string& name) {
  auto it = p.marks.find(name);
  return it == p.marks.end() ? std::vector<int>{} : it->second;
}

ParsedEncoding parse_encoding(const MarkedPoset& p, int k) {
  if (k < 0) throw InvalidParameters("parse_encoding: k must be nonnegative");
  ParsedEncoding enc;
  enc.k = k;
  const int total = p.n;
  enc.partOf.assign(total, 0);
  enc.posInPart.assign(total, -1);
  enc.parts.assign(k + 1, {});

  // Part marks: V_t beyond k must be absent or empty.
  std::vector<int> indices;
  for (const auto& [name, ids] : p.marks) {
    if (!parse_indexed_mark(name, "V", 1, indices)) continue;
    if (indices[0] < 1 || indices[0] > k) {
      if (!ids.empty())
        throw NotAnEncoding("decode: mark " + name + " used outside the declared k = " +
                            std::to_string(k));
      continue;
    }
    for (int v : ids) {
      if (enc.partOf[v] != 0)
        throw NotAnEncoding("decode: element " + std::to_string(v) + " carries two part marks");
      enc.partOf[v] = indices[0];
    }
    enc.parts[indices[0]] = ids;
  }
  for (int v = 0; v < total; ++v)
    if (enc.partOf[v] != 0) ++enc.vertexCount;
  for (int v = 0; v < enc.vertexCount; ++v)
    if (enc.partOf[v] == 0)
      throw NotAnEncoding("decode: graph vertices must occupy the initial element ids");

  // Each part must be a chain; recover its internal order by dominance rank.
  for (int i = 1; i <= k; ++i) {
    std::vector<int>& members = enc.parts[i];
    std::vector<std::pair<int, int>> ranked;
    for (int v : members) {
      int rank = 0;
      for (int u : members)
        if (p.le[u][v]) ++rank;
      ranked.emplace_back(rank, v);
    }
    std::sort(ranked.begin(), ranked.end());
    for (int t = 0; t + 1 < static_cast<int>(ranked.size()); ++t)
      if (!p.le[ranked[t].second][ranked[t + 1].second])
        throw NotAnEncoding("decode: part " + std::to_string(i) + " is not a chain");
    members.clear();
    for (int t = 0; t < static_cast<int>(ranked.size()); ++t) {
      members.push_back(ranked[t].second);
      enc.posInPart[ranked[t].second] = t;
    }
  }

  // Covers, for join recovery.
  std::vector<std::vector<int>> lowerCovers(total), upperCovers(total);
  for (const auto& [a, b] : cover_pairs(p)) {
    lowerCovers[b].push_back(a);
    upperCovers[a].push_back(b);
  }

  std::set<int> succMarked(mark_set(p, "S").begin(), mark_set(p, "S").end());
  std::map<int, std::pair<int, int>> borderMarkOf;
  for (const auto& [name, ids] : p.marks) {
    if (!parse_indexed_mark(name, "B", 2, indices)) continue;
    const int i = indices[0], j = indices[1];
    if (i < 1 || i > j || j > k) {
      if (!ids.empty())
        throw NotAnEncoding("decode: mark " + name + " used outside the declared k = " +
                            std::to_string(k));
      continue;
    }
    for (int x : ids) {
      if (!borderMarkOf.emplace(x, std::make_pair(i, j)).second)
        throw NotAnEncoding("decode: element " + std::to_string(x) +
                            " carries two border-connector marks");
    }
  }
  for (const auto& [name, ids] : p.marks) {
    if (!parse_indexed_mark(name, "C", 2, indices)) continue;
    const int i = indices[0], j = indices[1];
    if (i < 1 || i > j || j > k) {
      if (!ids.empty())
        throw NotAnEncoding("decode: mark " + name + " used outside the declared k = " +
                            std::to_string(k));
      continue;
    }
    enc.complemented[{i, j}] = !ids.empty();
  }

  for (int x = enc.vertexCount; x < total; ++x) {
    const bool isSucc = succMarked.count(x) > 0;
    const auto borderIt = borderMarkOf.find(x);
    const bool isBorder = borderIt != borderMarkOf.end();
    if (isSucc == isBorder)
      throw NotAnEncoding("decode: element " + std::to_string(x) +
                          " is not exactly one of a successor or border connector");
    DecodedCentre centre;
    centre.id = x;
    if (lowerCovers[x].size() != 1 || upperCovers[x].size() != 1)
      throw NotAnEncoding("decode: connector " + std::to_string(x) +
                          " does not sit cover-wise between two joins");
    centre.lower = lowerCovers[x][0];
    centre.upper = upperCovers[x][0];
    const int pl = centre.lower < enc.vertexCount ? enc.partOf[centre.lower] : 0;
    const int pu = centre.upper < enc.vertexCount ? enc.partOf[centre.upper] : 0;
    if (pl == 0 || pu == 0)
      throw NotAnEncoding("decode: connector " + std::to_string(x) +
                          " has a non-vertex join");
    if (isSucc) {
      if (pl >= pu)
        throw NotAnEncoding("decode: successor connector " + std::to_string(x) +
                            " joins parts " + std::to_string(pl) + "," + std::to_string(pu));
      enc.succCentres[{pl, pu}].push_back(centre);
    } else {
      const auto [bi, bj] = borderIt->second;
      const bool typeOk = (pl == bi && pu == bi) || (pl == bj && pu == bj) || (pl == bi && pu == bj);
      if (!typeOk)
        throw NotAnEncoding("decode: border connector " + std::to_string(x) +
                            " joins parts " + std::to_string(pl) + "," + std::to_string(pu) +
                            " outside its pair");
      enc.borderCentres[{bi, bj}].push_back(centre);
    }
  }
  for (int x = 0; x < enc.vertexCount; ++x)
    if (succMarked.count(x) || borderMarkOf.count(x))
      throw NotAnEncoding("decode: graph vertex " + std::to_string(x) +
                          " carries a connector mark");

  // Reconstruct each cross order: a V_i vertex v precedes exactly those V_j
  // vertices w for which some successor connector has join l above v and join
  // u below w; equivalently v sits after min over such connectors of pos(u)
  // many V_j vertices.
  constexpr int kInf = std::numeric_limits<int>::max();
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      std::vector<int> order;
      if (i == j) {
        order = enc.parts[i];
      } else {
        const std::vector<int>& vi = enc.parts[i];
        const std::vector<int>& vj = enc.parts[j];
        std::vector<int> minUpper(vi.size() + 1, kInf);
        auto it = enc.succCentres.find({i, j});
        if (it != enc.succCentres.end())
          for (const DecodedCentre& c : it->second) {
            int& slot = minUpper[enc.posInPart[c.lower]];
            slot = std::min(slot, enc.posInPart[c.upper]);
          }
        for (int t = static_cast<int>(vi.size()) - 1; t >= 0; --t)
          minUpper[t] = std::min(minUpper[t], minUpper[t + 1]);
        std::size_t a = 0;
        for (std::size_t b = 0; b <= vj.size(); ++b) {
          while (a < vi.size() &&
                 std::min<long long>(minUpper[a], vj.size()) <= static_cast<long long>(b))
            order.push_back(vi[a++]);
          if (b < vj.size()) order.push_back(vj[b]);
        }
      }
      std::vector<int> pos(total, -1);
      for (int t = 0; t < static_cast<int>(order.size()); ++t) pos[order[t]] = t;
      enc.pairOrder[{i, j}] = std::move(order);
      enc.pairPos[{i, j}] = std::move(pos);
    }
  return enc;
}

// Border runs of a pair as position intervals of the decoded pair order,
// sorted by left endpoint; both endpoints must be strictly increasing
// (maximal runs can neither nest nor share an endpoint).
std::vector<std::pair<int, int>> border_runs(const ParsedEncoding& enc, int i, int j) {
  std::vector<std::pair<int, int>> runs;
  auto it = enc.borderCentres.find({i, j});
  if (it == enc.borderCentres.end()) return runs;
  const std::vector<int>& pos = enc.pairPos.at({i, j});
  for (const DecodedCentre& c : it->second) {
    const int a = pos[c.lower], b = pos[c.upper];
    runs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(runs.begin(), runs.end());
  for (std::size_t t = 0; t + 1 < runs.size(); ++t)
    if (runs[t].first == runs[t + 1].first || runs[t].second >= runs[t + 1].second)
      throw NotAnEncoding("decode: border runs of pair " + std::to_string(i) + "," +
                          std::to_string(j) + " nest or repeat");
  return runs;
}

Graph decode_procedural(const MarkedPoset& p, int k) {
  const ParsedEncoding enc = parse_encoding(p, k);
  const int n = enc.vertexCount;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      const std::vector<int>& order = enc.pairOrder.at({i, j});
      const int m = static_cast<int>(order.size());
      if (m == 0) continue;
      // reach[t] = rightmost run endpoint over runs starting at or before t.
      std::vector<int> reach(m, -1);
      {
        const auto runs = border_runs(enc, i, j);
        std::size_t next = 0;
        int best = -1;
        for (int t = 0; t < m; ++t) {
          while (next < runs.size() && runs[next].first <= t) best = runs[next++].second;
          reach[t] = best;
        }
      }
      auto complementedIt = enc.complemented.find({i, j});
      const bool flip = complementedIt != enc.complemented.end() && complementedIt->second;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          if (i != j && enc.partOf[order[a]] == enc.partOf[order[b]]) continue;
          const bool related = reach[a] >= b;
          if (related != flip) edges.emplace_back(order[a], order[b]);
        }
    }
  return make_graph(n, edges);
}

// ---------------------------------------------------------------------------
// First-order mode: the same relations, computed as dense boolean matrices by
// following the decoding formulas bottom-up (successor pairs -> cross order ->
// border pairs -> spanned pairs -> edges).  Equivalent to evaluating the edge
// formula at every pair, but polynomial instead of exponential in the number
// of nested quantifiers.
// ---------------------------------------------------------------------------

Graph decode_fo(const MarkedPoset& p, int k) {
  if (k < 0) throw InvalidParameters("decode_poset_to_graph: k must be nonnegative");
  using detail::Bitset;
  using detail::BitMatrix;
  const int total = p.n;

  BitMatrix le = detail::from_bool_matrix(p.le);

  std::vector<Bitset> vi(k + 1, Bitset(total));
  std::vector<int> indices;
  for (const auto& [name, ids] : p.marks) {
    if (!parse_indexed_mark(name, "V", 1, indices)) continue;
    if (indices[0] < 1 || indices[0] > k) {
      if (!ids.empty())
        throw NotAnEncoding("decode: mark " + name + " used outside the declared k = " +
                            std::to_string(k));
      continue;
    }
    for (int v : ids) vi[indices[0]].set(v);
  }
  Bitset anyPart(total);
  for (int i = 1; i <= k; ++i) {
    if ((anyPart & vi[i]).any())
      throw NotAnEncoding("decode: an element carries two part marks");
    anyPart |= vi[i];
  }
  const int n = static_cast<int>(anyPart.count());
  for (int v = 0; v < n; ++v)
    if (!anyPart.test(v))
      throw NotAnEncoding("decode: graph vertices must occupy the initial element ids");

  Bitset succMarked(total);
  for (int x : mark_set(p, "S")) succMarked.set(x);
  std::map<std::pair<int, int>, Bitset> borderMarked;
  std::map<std::pair<int, int>, bool> complemented;
  for (const auto& [name, ids] : p.marks) {
    const bool isBorder = parse_indexed_mark(name, "B", 2, indices);
    const bool isComplement = !isBorder && parse_indexed_mark(name, "C", 2, indices);
    if (!isBorder && !isComplement) continue;
    const int i = indices[0], j = indices[1];
    if (i < 1 || i > j || j > k) {
      if (!ids.empty())
        throw NotAnEncoding("decode: mark " + name + " used outside the declared k = " +
                            std::to_string(k));
      continue;
    }
    if (isBorder) {
      Bitset& bits = borderMarked.emplace(std::make_pair(i, j), Bitset(total)).first->second;
      for (int x : ids) bits.set(x);
    } else {
      complemented[{i, j}] = !ids.empty();
    }
  }

  std::vector<std::vector<int>> lowerCovers(total), upperCovers(total);
  for (const auto& [a, b] : cover_pairs(p)) {
    lowerCovers[b].push_back(a);
    upperCovers[a].push_back(b);
  }

  // Within-part comparability, one matrix per part.
  std::vector<BitMatrix> leWithin(k + 1);
  for (int i = 1; i <= k; ++i) {
    leWithin[i] = detail::make_bitmatrix(total, total);
    for (std::size_t u = vi[i].find_first(); u != Bitset::npos; u = vi[i].find_next(u))
      leWithin[i][u] = le[u] & vi[i];
  }

  BitMatrix edgeAcc = detail::make_bitmatrix(total, total);
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      // Pair comparability <=_ij.
      BitMatrix lePair;
      if (i == j) {
        lePair = leWithin[i];
      } else {
        BitMatrix succ = detail::make_bitmatrix(total, total);
        for (std::size_t x = succMarked.find_first(); x != Bitset::npos;
             x = succMarked.find_next(x)) {
          if (anyPart.test(x)) continue;
          for (int a : lowerCovers[x]) {
            if (!vi[i].test(a)) continue;
            for (int b : upperCovers[x])
              if (vi[j].test(b)) succ[a].set(b);
          }
        }
        BitMatrix lePrime =
            detail::bool_multiply(leWithin[i], detail::bool_multiply(succ, leWithin[j]));
        BitMatrix lePrimeT = detail::transpose(lePrime);
        lePair = detail::make_bitmatrix(total, total);
        for (int u = 0; u < total; ++u) lePair[u] = leWithin[i][u] | leWithin[j][u];
        for (std::size_t u = vi[i].find_first(); u != Bitset::npos; u = vi[i].find_next(u))
          lePair[u] |= lePrime[u] & vi[j];
        for (std::size_t u = vi[j].find_first(); u != Bitset::npos; u = vi[j].find_next(u))
          lePair[u] |= vi[i] & ~lePrimeT[u];
      }

      // Border pairs: joins of B_ij connectors, in any of the four join-type
      // clauses, filtered by pair comparability.
      BitMatrix borderPair = detail::make_bitmatrix(total, total);
      auto bmIt = borderMarked.find({i, j});
      if (bmIt != borderMarked.end()) {
        const Bitset& marked = bmIt->second;
        for (std::size_t x = marked.find_first(); x != Bitset::npos; x = marked.find_next(x)) {
          if (anyPart.test(x)) continue;
          for (int a : lowerCovers[x])
            for (int b : upperCovers[x]) {
              if (vi[i].test(a) && vi[i].test(b)) borderPair[a].set(b);
              if (vi[j].test(a) && vi[j].test(b)) borderPair[a].set(b);
              if (vi[i].test(a) && vi[j].test(b)) {
                borderPair[a].set(b);
                borderPair[b].set(a);
              }
            }
        }
      }
      for (int u = 0; u < total; ++u) borderPair[u] &= lePair[u];

      // Spanned pairs: (u, v) lies under some border pair of the same pair
      // order.
      BitMatrix lePairT = detail::transpose(lePair);
      BitMatrix span =
          detail::bool_multiply(lePairT, detail::bool_multiply(borderPair, lePairT));

      auto complementedIt = complemented.find({i, j});
      const bool flip = complementedIt != complemented.end() && complementedIt->second;
      auto addTerm = [&](const Bitset& fromParts, const Bitset& toParts) {
        for (std::size_t u = fromParts.find_first(); u != Bitset::npos;
             u = fromParts.find_next(u)) {
          Bitset row = lePair[u];
          row &= toParts;
          row &= flip ? ~span[u] : span[u];
          edgeAcc[u] |= row;
        }
      };
      addTerm(vi[i], vi[j]);
      if (i != j) addTerm(vi[j], vi[i]);
    }

  BitMatrix edgeAccT = detail::transpose(edgeAcc);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    Bitset row = edgeAcc[u] | edgeAccT[u];
    row &= anyPart;
    row.reset(u);
    for (std::size_t v = row.find_next(u); v != Bitset::npos; v = row.find_next(v))
      edges.emplace_back(u, static_cast<int>(v));
  }
  return make_graph(n, edges);
}

}  // namespace

Graph decode_poset_to_graph(const MarkedPoset& p, int k, DecodeMode mode) {
  return mode == DecodeMode::procedural ? decode_procedural(p, k) : decode_fo(p, k);
}

ChainDecomposition chain_cover_certificate(const MarkedPoset& p, int k) {
  const ParsedEncoding enc = parse_encoding(p, k);
  std::vector<std::vector<int>> chains;

  auto push_chain = [&](std::vector<int> ids, const std::string& what) {
    for (std::size_t t = 0; t + 1 < ids.size(); ++t)
      if (!p.le[ids[t]][ids[t + 1]])
        throw NotAnEncoding("chain_cover_certificate: " + what + " is not a chain");
    if (!ids.empty()) chains.push_back(std::move(ids));
  };

  for (int i = 1; i <= k; ++i)
    push_chain(enc.parts[i], "part " + std::to_string(i));

  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto it = enc.succCentres.find({i, j});
      if (it == enc.succCentres.end()) continue;
      std::vector<DecodedCentre> group = it->second;
      std::sort(group.begin(), group.end(), [&](const DecodedCentre& a, const DecodedCentre& b) {
        return std::make_pair(enc.posInPart[a.lower], enc.posInPart[a.upper]) <
               std::make_pair(enc.posInPart[b.lower], enc.posInPart[b.upper]);
      });
      std::vector<int> ids;
      for (const DecodedCentre& c : group) ids.push_back(c.id);
      push_chain(std::move(ids), "successor connectors of pair " + std::to_string(i) + "," +
                                     std::to_string(j));
    }

  // Border connectors of a pair split into four classes by join type; within a
  // class maximal runs cannot nest, so join dominance makes each a chain.  The
  // two cross-joined classes are told apart by the reconstructed pair order
  // (the run may sit forwards or backwards between the parts).
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      auto it = enc.borderCentres.find({i, j});
      if (it == enc.borderCentres.end()) continue;
      const std::vector<int>& pos = enc.pairPos.at({i, j});
      std::vector<std::vector<DecodedCentre>> classes(4);
      for (const DecodedCentre& c : it->second) {
        const int pl = enc.partOf[c.lower], pu = enc.partOf[c.upper];
        if (pl == i && pu == i)
          classes[0].push_back(c);
        else if (pl == j && pu == j)
          classes[1].push_back(c);
        else if (pos[c.lower] < pos[c.upper])
          classes[2].push_back(c);
        else
          classes[3].push_back(c);
      }
      static const char* kClassName[4] = {"lower-joined", "upper-joined", "forward cross-joined",
                                          "backward cross-joined"};
      for (int cls = 0; cls < 4; ++cls) {
        std::sort(classes[cls].begin(), classes[cls].end(),
                  [&](const DecodedCentre& a, const DecodedCentre& b) {
                    return std::make_pair(enc.posInPart[a.lower], enc.posInPart[a.upper]) <
                           std::make_pair(enc.posInPart[b.lower], enc.posInPart[b.upper]);
                  });
        std::vector<int> ids;
        for (const DecodedCentre& c : classes[cls]) ids.push_back(c.id);
        push_chain(std::move(ids), std::string(kClassName[cls]) + " border connectors of pair " +
                                       std::to_string(i) + "," + std::to_string(j));
      }
    }
  return ChainDecomposition{std::move(chains)};
}

}  // namespace mixthin
