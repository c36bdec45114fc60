// The named decoding formulas.  Each builder is a direct transcription of the
// corresponding display, with named subformulas inlined as subtrees.  Pair
// parameters are canonicalized to i <= j for the relations that are symmetric
// in the part pair (the pair order, border pairs, and the B/C mark names);
// connect / succ / le_prime keep their given orientation, which fixes which
// part holds the lower join.
#include <string>
#include <vector>

#include "mixthin/errors.hpp"
#include "mixthin/formula.hpp"

namespace mixthin {

namespace {

std::string v_mark(int i) { return "V_" + std::to_string(i); }
std::string chain_mark(int i) { return "C_" + std::to_string(i); }

std::string b_mark(int i, int j) {
  if (i > j) std::swap(i, j);
  return "B_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string c_mark(int i, int j) {
  if (i > j) std::swap(i, j);
  return "C_" + std::to_string(i) + "_" + std::to_string(j);
}

// u strictly below x in the poset relation.
FormulaPtr lt(const std::string& a, const std::string& b) {
  return f_and(f_le(a, b), f_not(f_eq(a, b)));
}

// Domain formula of the order side: u is a graph vertex, i.e. carries some
// part mark.
FormulaPtr some_part(int k, const std::string& u) {
  std::vector<FormulaPtr> parts;
  for (int i = 1; i <= k; ++i) parts.push_back(f_mark(v_mark(i), u));
  return f_any(parts);
}

FormulaPtr le_ii(int i, const std::string& u, const std::string& v) {
  return f_all({f_mark(v_mark(i), u), f_mark(v_mark(i), v), f_le(u, v)});
}

// w lies between u in part i and v in part j, with both sides cover pairs,
// and w is not itself a graph vertex.
FormulaPtr connect(int i, int j, int k, const std::string& u,
                   const std::string& v, const std::string& w) {
  return f_all({f_mark(v_mark(i), u), f_mark(v_mark(j), v),
                f_not(some_part(k, w)), f_le(u, w), f_le(w, v),
                f_not(f_exists("x", f_and(lt(u, "x"), lt("x", w)))),
                f_not(f_exists("x", f_and(lt(w, "x"), lt("x", v))))});
}

FormulaPtr succ(int i, int j, int k, const std::string& u,
                const std::string& v) {
  return f_exists("w", f_and(connect(i, j, k, u, v, "w"), f_mark("S", "w")));
}

FormulaPtr le_prime(int i, int j, int k, const std::string& u,
                    const std::string& v) {
  return f_exists(
      "u^+", f_exists("v^-", f_all({le_ii(i, u, "u^+"), le_ii(j, "v^-", v),
                                    succ(i, j, k, "u^+", "v^-")})));
}

FormulaPtr le_pair(int i, int j, int k, const std::string& u,
                   const std::string& v) {
  if (i > j) std::swap(i, j);
  if (i == j) return le_ii(i, u, v);
  return f_any(
      {le_ii(i, u, v), le_ii(j, u, v),
       f_all({f_mark(v_mark(i), u), f_mark(v_mark(j), v),
              le_prime(i, j, k, u, v)}),
       f_all({f_mark(v_mark(j), u), f_mark(v_mark(i), v),
              f_not(le_prime(i, j, k, v, u))})});
}

FormulaPtr border_pair(int i, int j, int k, const std::string& u,
                       const std::string& v) {
  if (i > j) std::swap(i, j);
  return f_and(
      le_pair(i, j, k, u, v),
      f_exists(
          "w",
          f_and(f_mark(b_mark(i, j), "w"),
                f_any({f_all({f_mark(v_mark(i), u), f_mark(v_mark(i), v),
                              connect(i, i, k, u, v, "w")}),
                       f_all({f_mark(v_mark(j), u), f_mark(v_mark(j), v),
                              connect(j, j, k, u, v, "w")}),
                       f_all({f_mark(v_mark(i), u), f_mark(v_mark(j), v),
                              connect(i, j, k, u, v, "w")}),
                       f_all({f_mark(v_mark(j), u), f_mark(v_mark(i), v),
                              connect(i, j, k, v, u, "w")})}))));
}

FormulaPtr psi(int k, const std::string& u, const std::string& v) {
  std::vector<FormulaPtr> terms;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      terms.push_back(f_all(
          {f_mark(v_mark(i), u), f_mark(v_mark(j), v), le_pair(i, j, k, u, v),
           f_xor(f_exists("x", f_mark(c_mark(i, j), "x")),
                 f_exists("u^-",
                          f_exists("v^+",
                                   f_all({le_pair(i, j, k, "u^-", u),
                                          le_pair(i, j, k, v, "v^+"),
                                          border_pair(i, j, k, "u^-",
                                                      "v^+")}))))}));
  return f_any(terms);
}

FormulaPtr phi_e(int k) {
  return f_and(f_not(f_eq("u", "v")),
               f_or(psi(k, "u", "v"), psi(k, "v", "u")));
}

FormulaPtr same_chain(int k, const std::string& u, const std::string& v) {
  std::vector<FormulaPtr> terms;
  for (int i = 1; i <= k; ++i)
    terms.push_back(f_and(f_mark(chain_mark(i), u), f_mark(chain_mark(i), v)));
  return f_any(terms);
}

FormulaPtr le_internal(const std::string& u, const std::string& v) {
  return f_forall("w", f_implies(f_and(f_mark("O", "w"), f_edge("w", u)),
                                 f_edge("w", v)));
}

FormulaPtr twins(int k, const std::string& u, const std::string& v) {
  return f_all({same_chain(k, u, v), le_internal(u, v), le_internal(v, u)});
}

FormulaPtr preceq(int k, const std::string& u, const std::string& v) {
  return f_and(
      f_implies(same_chain(k, u, v), le_internal(u, v)),
      f_implies(
          f_not(same_chain(k, u, v)),
          f_exists("u'", f_exists("v'", f_all({twins(k, u, "u'"),
                                               twins(k, v, "v'"),
                                               f_mark("A", "u'"),
                                               f_mark("B", "v'"),
                                               f_edge("u'", "v'")})))));
}

void require_k(const std::string& name, int k) {
  if (k < 1)
    throw InvalidParameters("formula_library: " + name + " needs k >= 1");
}

void require_part(const std::string& name, int value, int k) {
  if (value < 1 || value > k)
    throw InvalidParameters("formula_library: " + name +
                            " needs part indices in 1..k");
}

}  // namespace

FormulaPtr formula_library(const std::string& name, int i, int j, int k) {
  if (name == "le_ii") {
    require_k(name, k);
    require_part(name, i, k);
    return le_ii(i, "u", "v");
  }
  if (name == "connect") {
    require_k(name, k);
    require_part(name, i, k);
    require_part(name, j, k);
    return connect(i, j, k, "u", "v", "w");
  }
  if (name == "succ") {
    require_k(name, k);
    require_part(name, i, k);
    require_part(name, j, k);
    return succ(i, j, k, "u", "v");
  }
  if (name == "le_prime") {
    require_k(name, k);
    require_part(name, i, k);
    require_part(name, j, k);
    return le_prime(i, j, k, "u", "v");
  }
  if (name == "le_ij") {
    require_k(name, k);
    require_part(name, i, k);
    require_part(name, j, k);
    return le_pair(i, j, k, "u", "v");
  }
  if (name == "border_pair") {
    require_k(name, k);
    require_part(name, i, k);
    require_part(name, j, k);
    return border_pair(i, j, k, "u", "v");
  }
  if (name == "psi") {
    require_k(name, k);
    return psi(k, "u", "v");
  }
  if (name == "phi_e") {
    require_k(name, k);
    return phi_e(k);
  }
  if (name == "same_chain") {
    require_k(name, k);
    return same_chain(k, "u", "v");
  }
  if (name == "le_internal") return le_internal("u", "v");
  if (name == "twins") {
    require_k(name, k);
    return twins(k, "u", "v");
  }
  if (name == "phi0") return f_mark("A", "u");
  if (name == "preceq") {
    require_k(name, k);
    return preceq(k, "u", "v");
  }
  throw UnknownSymbol("formula_library: unknown formula name: " + name);
}

}  // namespace mixthin
