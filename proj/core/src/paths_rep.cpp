// Intersection graphs of proper path systems in a subdivided host graph.
//
// Each path's class is the pair (set of host edges it touches, set of host
// edges holding its ends); classes become witness parts.  Cross-pair orders
// all come from one placement scheme: enumerate one part, then insert each
// element of the other part right after the last base element it relates to,
// where the relation is intersection — or disjointness for the two part-pair
// shapes that work against the complement (interval-versus-cycle on a shared
// end-edge, and two shared end-edges closing a cycle).  Whenever every
// element's relation set is a prefix of the base enumeration and the placement
// points are monotone, the defining order conditions hold for the result, so
// the code searches the four orientation combinations for that shape.
#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bitsets.hpp"
#include "mixthin/errors.hpp"
#include "mixthin/generators.hpp"

namespace mixthin {

Subdivision subdivide_host(const Graph& host,
                           const std::map<std::pair<int, int>, int>& counts) {
  for (const auto& [e, c] : counts) {
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    if (!has_edge(host, u, v))
      throw ValidationError("subdivide_host: count given for non-edge (" +
                            std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    if (c < 0) throw ValidationError("subdivide_host: negative count");
  }

  Subdivision sub;
  sub.hostEdges = host.edges;
  int nextId = host.n;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : host.edges) {
    auto it = counts.find({u, v});
    const int c = it == counts.end() ? 0 : it->second;
    std::vector<int> inner;
    for (int t = 0; t < c; ++t) inner.push_back(nextId++);
    int prev = u;
    for (int x : inner) {
      edges.emplace_back(prev, x);
      prev = x;
    }
    edges.emplace_back(prev, v);
    sub.innerVertices.push_back(std::move(inner));
  }
  sub.graph = make_graph(nextId, std::move(edges));
  return sub;
}

namespace {

// Placement scheme shared by every cross-part pair.  Base and floaters are
// each part's internal order; `related` is the pair's (possibly complemented)
// edge relation.  Returns an order of base ∪ floaters, trying both
// orientations of both sequences for the prefix/monotone shape that makes the
// placement sound; falls back to the unreversed pair if none fits (an
// out-of-coverage input the verifier will then reject).
template <typename Rel>
std::vector<int> placed_order(const std::vector<int>& baseIn,
                              const std::vector<int>& floatIn, Rel&& related,
                              bool idOrderFrontBlock) {
  auto attempt = [&](bool revBase, bool revFloat, bool force,
                     std::vector<int>& out) {
    std::vector<int> base = baseIn, flo = floatIn;
    if (revBase) std::reverse(base.begin(), base.end());
    if (revFloat) std::reverse(flo.begin(), flo.end());
    const int B = static_cast<int>(base.size());
    std::vector<int> last(flo.size(), -1);
    for (std::size_t y = 0; y < flo.size(); ++y) {
      for (int t = B - 1; t >= 0; --t)
        if (related(base[t], flo[y])) {
          last[y] = t;
          break;
        }
      if (!force)
        for (int t = 0; t <= last[y]; ++t)
          if (!related(base[t], flo[y])) return false;  // not a prefix
    }
    if (!force)
      for (std::size_t y = 1; y < flo.size(); ++y)
        if (last[y] < last[y - 1]) return false;  // placement not monotone

    std::vector<std::vector<int>> slot(B + 1);
    for (std::size_t y = 0; y < flo.size(); ++y)
      slot[last[y] + 1].push_back(flo[y]);
    if (idOrderFrontBlock) std::sort(slot[0].begin(), slot[0].end());
    out = slot[0];
    for (int t = 0; t < B; ++t) {
      out.push_back(base[t]);
      out.insert(out.end(), slot[t + 1].begin(), slot[t + 1].end());
    }
    return true;
  };

  std::vector<int> out;
  for (const auto& [rb, rf] : {std::pair{false, false},
                               std::pair{false, true},
                               std::pair{true, false},
                               std::pair{true, true}})
    if (attempt(rb, rf, false, out)) return out;
  attempt(false, false, true, out);
  return out;
}

}  // namespace

std::pair<Graph, MixedThinWitness> from_path_representation(
    const PathRepresentation& rep) {
  const Subdivision sub = subdivide_host(rep.host, rep.subdivisionCounts);
  const int n = static_cast<int>(rep.paths.size());
  const int subN = sub.graph.n;
  const int hostN = rep.host.n;

  // Which host edge owns each subdivision vertex, and the position of the
  // vertex on that edge counted 1.. from the smaller host endpoint.
  std::vector<int> edgeOf(subN, -1), posOn(subN, 0);
  std::map<std::pair<int, int>, int> hostEdgeIndex;
  for (std::size_t e = 0; e < sub.hostEdges.size(); ++e) {
    hostEdgeIndex[sub.hostEdges[e]] = static_cast<int>(e);
    for (std::size_t t = 0; t < sub.innerVertices[e].size(); ++t) {
      edgeOf[sub.innerVertices[e][t]] = static_cast<int>(e);
      posOn[sub.innerVertices[e][t]] = static_cast<int>(t) + 1;
    }
  }

  std::vector<detail::Bitset> vset(n, detail::Bitset(subN));
  std::vector<std::vector<int>> touched(n);  // S_v as host-edge indices
  std::vector<std::vector<int>> endEdges(n);
  for (int v = 0; v < n; ++v) {
    const auto& path = rep.paths[v];
    if (path.empty())
      throw InvalidPath("path " + std::to_string(v) + " is empty");
    for (int x : path) {
      if (x < 0 || x >= subN)
        throw InvalidPath("path " + std::to_string(v) +
                          " uses unknown vertex " + std::to_string(x));
      if (vset[v].test(x))
        throw InvalidPath("path " + std::to_string(v) + " repeats vertex " +
                          std::to_string(x));
      vset[v].set(x);
    }
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      if (!has_edge(sub.graph, path[t], path[t + 1]))
        throw InvalidPath("path " + std::to_string(v) +
                          " is not connected in the subdivision");
      const int a = path[t], b = path[t + 1];
      if (edgeOf[a] != -1)
        touched[v].push_back(edgeOf[a]);
      else if (edgeOf[b] != -1)
        touched[v].push_back(edgeOf[b]);
      else  // two host vertices adjacent in H' — an unsubdivided host edge
        touched[v].push_back(
            hostEdgeIndex.at({std::min(a, b), std::max(a, b)}));
    }
    if (edgeOf[path.front()] == -1 || edgeOf[path.back()] == -1)
      throw InvalidPath("path " + std::to_string(v) +
                        " must end inside subdivided host edges");
    if (path.size() == 1) touched[v].push_back(edgeOf[path.front()]);
    std::sort(touched[v].begin(), touched[v].end());
    touched[v].erase(std::unique(touched[v].begin(), touched[v].end()),
                     touched[v].end());
    endEdges[v] = {edgeOf[path.front()], edgeOf[path.back()]};
    std::sort(endEdges[v].begin(), endEdges[v].end());
    endEdges[v].erase(std::unique(endEdges[v].begin(), endEdges[v].end()),
                      endEdges[v].end());
  }

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && vset[u].is_subset_of(vset[v]))
        throw NotProper("path " + std::to_string(u) +
                        " is contained in path " + std::to_string(v));

  std::vector<std::vector<bool>> meets(n, std::vector<bool>(n, false));
  std::vector<std::pair<int, int>> gEdges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (vset[u].intersects(vset[v])) {
        meets[u][v] = meets[v][u] = true;
        gEdges.emplace_back(u, v);
      }
  Graph g = make_graph(n, std::move(gEdges));

  // Parts: one per distinct (touched set, end-edge set), in canonical order.
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>>
      classes;
  for (int v = 0; v < n; ++v)
    classes[{touched[v], endEdges[v]}].push_back(v);

  MixedThinWitness w;
  w.k = static_cast<int>(classes.size());
  w.part.assign(n, 0);
  std::vector<std::vector<int>> internal(w.k + 1);
  {
    int idx = 0;
    for (auto& [key, members] : classes) {
      ++idx;
      for (int v : members) w.part[v] = idx;
      // Internal order: ends on the class's smallest end-edge, counted from
      // its smaller host endpoint, then the other end, then the id.
      const int estar = key.second.front();
      std::vector<std::pair<std::pair<int, int>, int>> keyed;
      for (int v : members) {
        std::vector<int> onStar;
        const int f = rep.paths[v].front(), b = rep.paths[v].back();
        if (edgeOf[f] == estar) onStar.push_back(posOn[f]);
        if (edgeOf[b] == estar) onStar.push_back(posOn[b]);
        int posA, posB;
        if (onStar.size() == 2) {
          posA = std::min(onStar[0], onStar[1]);
          posB = std::max(onStar[0], onStar[1]);
        } else {
          posA = onStar.front();
          posB = edgeOf[f] == estar ? posOn[b] : posOn[f];
        }
        keyed.push_back({{posA, posB}, v});
      }
      std::sort(keyed.begin(), keyed.end());
      for (const auto& [kk, v] : keyed) internal[idx].push_back(v);
      w.orders[{idx, idx}] = internal[idx];
    }
  }

  // Cross pairs: the relation is intersection, complemented for the two
  // shapes whose interaction closes a cycle through a shared end-edge.
  std::vector<const std::pair<std::vector<int>, std::vector<int>>*> keyOf(
      w.k + 1);
  {
    int idx = 0;
    for (auto& [key, members] : classes) keyOf[++idx] = &key;
  }
  for (int i = 1; i <= w.k; ++i) {
    for (int j = i + 1; j <= w.k; ++j) {
      const auto& [Si, endsI] = *keyOf[i];
      const auto& [Sj, endsJ] = *keyOf[j];
      std::vector<int> sharedEnds;
      std::set_intersection(endsI.begin(), endsI.end(), endsJ.begin(),
                            endsJ.end(), std::back_inserter(sharedEnds));
      const bool bothSingle = endsI.size() == 1 && endsJ.size() == 1;
      const bool oneIsBareEdge =
          (Si.size() == 1 && Sj.size() > 1) || (Sj.size() == 1 && Si.size() > 1);
      const bool complemented =
          (bothSingle && sharedEnds.size() == 1 && oneIsBareEdge) ||
          sharedEnds.size() == 2;
      if (complemented) w.complementPairs.insert({i, j});
      auto related = [&](int x, int y) { return meets[x][y] != complemented; };
      w.orders[{i, j}] =
          placed_order(internal[i], internal[j], related, complemented);
    }
  }
  w.variant = Variant::proper;
  return {std::move(g), std::move(w)};
}

}  // namespace mixthin
