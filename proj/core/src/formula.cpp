// AST builders, the recursive evaluator, and the S-expression printer.  The
// evaluator enumerates the domain under every quantifier; results of
// quantifier nodes are cached per call keyed by the values of their free
// variables, so shared subtrees (the library formulas reuse the same order
// subformula many times) are enumerated once instead of per occurrence.
#include "mixthin/formula.hpp"

#include <memory>
#include <utility>

#include "mixthin/errors.hpp"

namespace mixthin {

namespace {

FormulaPtr node(FormulaKind kind, std::string symbol, std::string var1,
                std::string var2, FormulaPtr left, FormulaPtr right) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->symbol = std::move(symbol);
  f->var1 = std::move(var1);
  f->var2 = std::move(var2);
  f->left = std::move(left);
  f->right = std::move(right);
  return f;
}

}  // namespace

FormulaPtr f_true() {
  return node(FormulaKind::truth, "", "", "", nullptr, nullptr);
}
FormulaPtr f_le(const std::string& u, const std::string& v) {
  return node(FormulaKind::le, "", u, v, nullptr, nullptr);
}
FormulaPtr f_edge(const std::string& u, const std::string& v) {
  return node(FormulaKind::edge, "", u, v, nullptr, nullptr);
}
FormulaPtr f_mark(const std::string& name, const std::string& u) {
  return node(FormulaKind::mark, name, u, "", nullptr, nullptr);
}
FormulaPtr f_eq(const std::string& u, const std::string& v) {
  return node(FormulaKind::eq, "", u, v, nullptr, nullptr);
}
FormulaPtr f_not(FormulaPtr a) {
  return node(FormulaKind::negation, "", "", "", std::move(a), nullptr);
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return node(FormulaKind::conjunction, "", "", "", std::move(a), std::move(b));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return node(FormulaKind::disjunction, "", "", "", std::move(a), std::move(b));
}
FormulaPtr f_xor(FormulaPtr a, FormulaPtr b) {
  return node(FormulaKind::exclusiveOr, "", "", "", std::move(a), std::move(b));
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return node(FormulaKind::implication, "", "", "", std::move(a), std::move(b));
}
FormulaPtr f_exists(const std::string& var, FormulaPtr body) {
  return node(FormulaKind::exists, var, "", "", std::move(body), nullptr);
}
FormulaPtr f_forall(const std::string& var, FormulaPtr body) {
  return node(FormulaKind::forall, var, "", "", std::move(body), nullptr);
}

FormulaPtr f_all(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) return f_true();
  FormulaPtr out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = f_and(out, parts[i]);
  return out;
}

FormulaPtr f_any(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) return f_not(f_true());
  FormulaPtr out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = f_or(out, parts[i]);
  return out;
}

Structure structure_of(const MarkedPoset& p) {
  Structure s;
  s.n = p.n;
  s.le = p.le;
  for (const auto& [name, elements] : p.marks)
    s.marks[name] = std::set<int>(elements.begin(), elements.end());
  return s;
}

Structure structure_of(const Graph& g,
                       const std::map<std::string, std::vector<int>>& marks) {
  Structure s;
  s.n = g.n;
  s.edge = g.adj;
  for (const auto& [name, elements] : marks)
    s.marks[name] = std::set<int>(elements.begin(), elements.end());
  return s;
}

namespace {

struct Evaluator {
  const Structure& s;
  std::map<std::string, int> env;
  // Sorted free-variable lists per node, shared across the call.
  std::map<const Formula*, std::vector<std::string>> freeVars;
  // Quantifier results keyed by the values of the node's free variables.
  std::map<std::pair<const Formula*, std::vector<int>>, bool> memo;

  const std::vector<std::string>& free_of(const Formula* f) {
    auto it = freeVars.find(f);
    if (it != freeVars.end()) return it->second;
    std::set<std::string> acc;
    collect_free(f, acc);
    return freeVars
        .emplace(f, std::vector<std::string>(acc.begin(), acc.end()))
        .first->second;
  }

  static void collect_free(const Formula* f, std::set<std::string>& acc) {
    switch (f->kind) {
      case FormulaKind::truth:
        break;
      case FormulaKind::le:
      case FormulaKind::edge:
      case FormulaKind::eq:
        acc.insert(f->var1);
        acc.insert(f->var2);
        break;
      case FormulaKind::mark:
        acc.insert(f->var1);
        break;
      case FormulaKind::negation:
        collect_free(f->left.get(), acc);
        break;
      case FormulaKind::conjunction:
      case FormulaKind::disjunction:
      case FormulaKind::exclusiveOr:
      case FormulaKind::implication:
        collect_free(f->left.get(), acc);
        collect_free(f->right.get(), acc);
        break;
      case FormulaKind::exists:
      case FormulaKind::forall: {
        std::set<std::string> inner;
        collect_free(f->left.get(), inner);
        inner.erase(f->symbol);
        acc.insert(inner.begin(), inner.end());
        break;
      }
    }
  }

  int value_of(const std::string& var) const {
    auto it = env.find(var);
    if (it == env.end())
      throw UnboundVariable("evaluate: unbound variable: " + var);
    return it->second;
  }

  bool eval(const Formula* f) {
    switch (f->kind) {
      case FormulaKind::truth:
        return true;
      case FormulaKind::le: {
        if (s.le.empty())
          throw UnknownSymbol("evaluate: structure has no order relation");
        return s.le[value_of(f->var1)][value_of(f->var2)];
      }
      case FormulaKind::edge: {
        if (s.edge.empty())
          throw UnknownSymbol("evaluate: structure has no adjacency relation");
        return s.edge[value_of(f->var1)][value_of(f->var2)];
      }
      case FormulaKind::mark: {
        auto it = s.marks.find(f->symbol);
        if (it == s.marks.end())
          throw UnknownSymbol("evaluate: unknown mark: " + f->symbol);
        return it->second.count(value_of(f->var1)) > 0;
      }
      case FormulaKind::eq:
        return value_of(f->var1) == value_of(f->var2);
      case FormulaKind::negation:
        return !eval(f->left.get());
      case FormulaKind::conjunction:
        return eval(f->left.get()) && eval(f->right.get());
      case FormulaKind::disjunction:
        return eval(f->left.get()) || eval(f->right.get());
      case FormulaKind::exclusiveOr:
        return eval(f->left.get()) != eval(f->right.get());
      case FormulaKind::implication:
        return !eval(f->left.get()) || eval(f->right.get());
      case FormulaKind::exists:
      case FormulaKind::forall: {
        const auto& fv = free_of(f);
        std::vector<int> key;
        key.reserve(fv.size());
        for (const auto& name : fv) key.push_back(value_of(name));
        const std::pair<const Formula*, std::vector<int>> memoKey{f,
                                                                  std::move(key)};
        auto hit = memo.find(memoKey);
        if (hit != memo.end()) return hit->second;

        const bool isExists = f->kind == FormulaKind::exists;
        auto saved = env.find(f->symbol) == env.end()
                         ? std::pair<bool, int>{false, 0}
                         : std::pair<bool, int>{true, env[f->symbol]};
        bool out = !isExists;
        for (int x = 0; x < s.n; ++x) {
          env[f->symbol] = x;
          if (eval(f->left.get()) == isExists) {
            out = isExists;
            break;
          }
        }
        if (saved.first)
          env[f->symbol] = saved.second;
        else
          env.erase(f->symbol);
        memo.emplace(memoKey, out);
        return out;
      }
    }
    throw Error("evaluate: unreachable formula kind");
  }
};

void print_sexpr(const Formula* f, std::string& out) {
  switch (f->kind) {
    case FormulaKind::truth:
      out += "true";
      return;
    case FormulaKind::le:
      out += "(le " + f->var1 + " " + f->var2 + ")";
      return;
    case FormulaKind::edge:
      out += "(edge " + f->var1 + " " + f->var2 + ")";
      return;
    case FormulaKind::mark:
      out += "(mark " + f->symbol + " " + f->var1 + ")";
      return;
    case FormulaKind::eq:
      out += "(= " + f->var1 + " " + f->var2 + ")";
      return;
    case FormulaKind::negation:
      out += "(not ";
      print_sexpr(f->left.get(), out);
      out += ")";
      return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
    case FormulaKind::exclusiveOr:
    case FormulaKind::implication: {
      const char* name = f->kind == FormulaKind::conjunction     ? "and"
                         : f->kind == FormulaKind::disjunction   ? "or"
                         : f->kind == FormulaKind::exclusiveOr   ? "xor"
                                                                 : "implies";
      out += "(";
      out += name;
      out += " ";
      print_sexpr(f->left.get(), out);
      out += " ";
      print_sexpr(f->right.get(), out);
      out += ")";
      return;
    }
    case FormulaKind::exists:
    case FormulaKind::forall:
      out += f->kind == FormulaKind::exists ? "(exists " : "(forall ";
      out += f->symbol + " ";
      print_sexpr(f->left.get(), out);
      out += ")";
      return;
  }
}

}  // namespace

bool evaluate(const Structure& s, const FormulaPtr& f,
              const std::map<std::string, int>& assignment) {
  if (!f) throw ValidationError("evaluate: null formula");
  for (const auto& [name, value] : assignment)
    if (value < 0 || value >= s.n)
      throw ValidationError("evaluate: assignment of " + name +
                            " outside the domain");
  Evaluator e{s, assignment, {}, {}};
  return e.eval(f.get());
}

std::string to_sexpr(const FormulaPtr& f) {
  if (!f) throw ValidationError("to_sexpr: null formula");
  std::string out;
  print_sexpr(f.get(), out);
  return out;
}

}  // namespace mixthin
