// First-order formulas over finite marked structures: an AST closed under the
// usual connectives plus exclusive disjunction and both quantifiers, a naive
// recursive evaluator, an S-expression dump for golden tests, and a library of
// the named decoding formulas used by the poset/graph transductions.
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mixthin/graph.hpp"
#include "mixthin/poset.hpp"

namespace mixthin {

// Atom kinds read the structure's relations: `le` the order relation, `edge`
// adjacency, `mark` a named unary predicate.  Connectives own their children;
// quantifier nodes store the bound variable in `symbol`.
enum class FormulaKind {
  truth,
  le,
  edge,
  mark,
  eq,
  negation,
  conjunction,
  disjunction,
  exclusiveOr,
  implication,
  exists,
  forall,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind = FormulaKind::truth;
  std::string symbol;      // mark name, or bound variable for quantifiers
  std::string var1, var2;  // atom arguments (var2 unused for marks)
  FormulaPtr left, right;  // children; right unused for unary nodes
};

// Builders; formulas are immutable once built, so subtrees may be shared.
FormulaPtr f_true();
FormulaPtr f_le(const std::string& u, const std::string& v);
FormulaPtr f_edge(const std::string& u, const std::string& v);
FormulaPtr f_mark(const std::string& name, const std::string& u);
FormulaPtr f_eq(const std::string& u, const std::string& v);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_xor(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(const std::string& var, FormulaPtr body);
FormulaPtr f_forall(const std::string& var, FormulaPtr body);
// Left-associative folds; f_all of nothing is true, f_any of nothing is the
// negation of true.
FormulaPtr f_all(const std::vector<FormulaPtr>& parts);
FormulaPtr f_any(const std::vector<FormulaPtr>& parts);

// A finite structure with domain 0..n-1.  A relation left empty is absent;
// evaluating an atom against an absent relation, or a mark name that is not a
// key of `marks`, throws UnknownSymbol.  Encoders therefore list every mark
// name they define, with an empty element set when unused.
struct Structure {
  int n = 0;
  std::vector<std::vector<bool>> le;     // n×n when present
  std::vector<std::vector<bool>> edge;   // n×n when present
  std::map<std::string, std::set<int>> marks;
};

// The order side: `le` from the poset relation, no adjacency.
Structure structure_of(const MarkedPoset& p);
// The graph side: `edge` from adjacency, no order relation.
Structure structure_of(const Graph& g,
                       const std::map<std::string, std::vector<int>>& marks);

// Standard satisfaction by recursive enumeration of the domain under each
// quantifier: O(n^quantifierDepth) worst case, with results of shared
// subformulas cached per call so repeated subtrees are not re-enumerated.
// Throws UnboundVariable if an atom mentions a variable that is neither
// assigned nor bound, UnknownSymbol for absent relations/marks.
bool evaluate(const Structure& s, const FormulaPtr& f,
              const std::map<std::string, int>& assignment);

// Deterministic S-expression dump, e.g. "(and (mark V_1 u) (le u v))".
std::string to_sexpr(const FormulaPtr& f);

// Named decoding formulas.  Free variables are "u", "v" ("w" as well for
// connect).  The order side reads marks V_1..V_k, S, B_i_j, C_i_j; the graph
// side reads A, B, O, C_1..C_k.
//
//   le_ii        (i)        both ends in part i, ordered by the poset
//   connect      (i, j, k)  w covers-between u in part i and v in part j
//   succ         (i, j, k)  an S-centre witnesses v as cross successor of u
//   le_prime     (i, j, k)  cross comparison via some successor pair
//   le_ij        (i, j, k)  the full pair order; i and j interchangeable
//   border_pair  (i, j, k)  (u, v) spans a maximal homogeneous subchain
//   psi          (k)        ordered edge witness inside some border pair
//   phi_e        (k)        the edge formula
//   same_chain   (k)        u and v carry the same chain mark
//   le_internal  ()         O-neighborhood containment
//   twins        (k)        same chain and same O-neighborhood
//   phi0         ()         domain formula of the graph side: A(u)
//   preceq       (k)        the decoded partial order
//
// Unknown name → UnknownSymbol; parameters outside 1..k (where used) or k < 1
// → InvalidParameters.
FormulaPtr formula_library(const std::string& name, int i, int j, int k);

}  // namespace mixthin
