#include "mixthin/witness.hpp"

#include <algorithm>
#include <string>

#include "mixthin/errors.hpp"

namespace mixthin {

bool variant_requires_c(Variant v) {
  return v == Variant::proper || v == Variant::properInversionFree;
}

bool variant_requires_equal_alignment(Variant v) {
  return v == Variant::inversionFree || v == Variant::properInversionFree;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::mixedThin: return "mixedThin";
    case Variant::proper: return "proper";
    case Variant::inversionFree: return "inversionFree";
    case Variant::properInversionFree: return "properInversionFree";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "mixedThin") return Variant::mixedThin;
  if (name == "proper") return Variant::proper;
  if (name == "inversionFree") return Variant::inversionFree;
  if (name == "properInversionFree") return Variant::properInversionFree;
  throw UnknownSymbol("unknown witness variant: " + name);
}

AlignmentKind alignment(const std::vector<int>& o1, const std::vector<int>& o2) {
  std::vector<int> s1 = o1, s2 = o2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2)
    throw DomainMismatch("alignment: orders range over different sets");
  if (o1.size() <= 1) return AlignmentKind::equal;
  if (o1 == o2) return AlignmentKind::equal;
  if (std::equal(o1.begin(), o1.end(), o2.rbegin())) return AlignmentKind::reversed;
  return AlignmentKind::neither;
}

std::pair<int, int> pair_key(int i, int j) {
  return {std::min(i, j), std::max(i, j)};
}

const std::vector<int>& pair_order(const MixedThinWitness& w, int i, int j) {
  static const std::vector<int> empty;
  auto it = w.orders.find(pair_key(i, j));
  return it == w.orders.end() ? empty : it->second;
}

std::vector<int> restrict_to_part(const MixedThinWitness& w,
                                  const std::vector<int>& order, int p) {
  std::vector<int> out;
  for (int v : order)
    if (v >= 0 && v < static_cast<int>(w.part.size()) && w.part[v] == p)
      out.push_back(v);
  return out;
}

bool pair_edge(const Graph& g, const MixedThinWitness& w, int i, int j, int u,
               int v) {
  const bool edge = g.adj[u][v];
  return w.complementPairs.count(pair_key(i, j)) ? !edge : edge;
}

const std::vector<int>& part_members(const MixedThinWitness& w, int p) {
  return pair_order(w, p, p);
}

namespace {

// Structural checks; every defect here is the witness's fault, not the
// checked conditions', so it throws rather than producing violations.
void validate_shape(const Graph& g, const MixedThinWitness& w) {
  if (w.k < 0) throw InvalidWitness("witness: negative part count");
  if (static_cast<int>(w.part.size()) != g.n)
    throw InvalidWitness("witness: part assignment covers " +
                         std::to_string(w.part.size()) + " vertices, graph has " +
                         std::to_string(g.n));
  for (int v = 0; v < g.n; ++v)
    if (w.part[v] < 1 || w.part[v] > w.k)
      throw InvalidWitness("witness: part of vertex " + std::to_string(v) +
                           " out of range: " + std::to_string(w.part[v]));
  std::vector<std::vector<int>> members(w.k + 1);
  for (int v = 0; v < g.n; ++v) members[w.part[v]].push_back(v);

  for (const auto& [key, ord] : w.orders) {
    auto [i, j] = key;
    if (i < 1 || j < i || j > w.k)
      throw InvalidWitness("witness: order key out of range: (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
    (void)ord;
  }
  for (const auto& [i, j] : w.complementPairs)
    if (i < 1 || j < i || j > w.k)
      throw InvalidWitness("witness: complement pair out of range: (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");

  for (int i = 1; i <= w.k; ++i) {
    for (int j = i; j <= w.k; ++j) {
      std::vector<int> expected = members[i];
      if (j != i)
        expected.insert(expected.end(), members[j].begin(), members[j].end());
      std::sort(expected.begin(), expected.end());
      auto it = w.orders.find({i, j});
      if (it == w.orders.end()) {
        if (!expected.empty())
          throw InvalidWitness("witness: missing order for pair (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
        continue;
      }
      std::vector<int> got = it->second;
      std::sort(got.begin(), got.end());
      if (got != expected)
        throw InvalidWitness("witness: order for pair (" + std::to_string(i) +
                             "," + std::to_string(j) +
                             ") is not a permutation of the part union");
    }
  }
}

}  // namespace

VerificationReport verify_witness(const Graph& g, const MixedThinWitness& w) {
  validate_shape(g, w);
  VerificationReport report;
  const bool needC = variant_requires_c(w.variant);
  const bool needEqual = variant_requires_equal_alignment(w.variant);

  for (int i = 1; i <= w.k; ++i) {
    for (int j = i; j <= w.k; ++j) {
      const std::vector<int>& ord = pair_order(w, i, j);
      const int len = static_cast<int>(ord.size());

      // (a)/(a'): each side's restriction against the part's own order.
      // Vacuous for i == j (the restriction is the internal order itself).
      if (i != j) {
        for (int side : {i, j}) {
          const std::vector<int> restr = restrict_to_part(w, ord, side);
          const std::vector<int>& internal = part_members(w, side);
          const AlignmentKind al = alignment(restr, internal);
          const bool bad = needEqual ? (al != AlignmentKind::equal)
                                     : (al == AlignmentKind::neither);
          if (bad) {
            // Anchor the report at the first position where the restriction
            // departs from the internal order.
            std::vector<int> evidence;
            for (std::size_t p = 0; p < restr.size(); ++p)
              if (restr[p] != internal[p]) {
                evidence = {restr[p], internal[p]};
                break;
              }
            report.violations.push_back(
                {needEqual ? "a'" : "a", i, j, evidence});
          }
        }
      }

      // Partner test: for i != j only cross-part pairs carry the relation;
      // for i == j every within-part pair does.
      auto partners = [&](int x, int y) {
        return i == j || w.part[x] != w.part[y];
      };

      // (b): scanning each element, its relation-neighbours among earlier
      // partners must form a suffix of those partners.
      for (int wp = 0; wp < len; ++wp) {
        const int wv = ord[wp];
        int lastNeighbor = -1;
        for (int q = 0; q < wp; ++q) {
          const int x = ord[q];
          if (!partners(x, wv)) continue;
          if (pair_edge(g, w, i, j, x, wv)) {
            lastNeighbor = x;
          } else if (lastNeighbor != -1) {
            report.violations.push_back({"b", i, j, {lastNeighbor, x, wv}});
            break;
          }
        }
      }

      // (c): each element's relation-neighbours among later partners must
      // form a prefix of those partners.
      if (needC) {
        for (int up = 0; up < len; ++up) {
          const int uv = ord[up];
          int firstNonNeighbor = -1;
          for (int q = up + 1; q < len; ++q) {
            const int x = ord[q];
            if (!partners(uv, x)) continue;
            if (!pair_edge(g, w, i, j, uv, x)) {
              if (firstNonNeighbor == -1) firstNonNeighbor = x;
            } else if (firstNonNeighbor != -1) {
              report.violations.push_back({"c", i, j, {uv, firstNonNeighbor, x}});
              break;
            }
          }
        }
      }
    }
  }

  report.accepted = report.violations.empty();
  return report;
}

}  // namespace mixthin
