#pragma once

// Universe level algebra: expressions over level variables with 0, successor
// and binary max, normalized to a canonical max-plus form.  Equality of
// normal forms decides semantic equality of level expressions, which is what
// the type checker uses to compare universes.

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace uvk {

struct LevelExpr;
using LevelPtr = std::shared_ptr<const LevelExpr>;

struct LevelExpr {
  enum Kind { Var, Zero, Suc, Max };
  Kind kind;
  std::string name; // Var
  LevelPtr a, b;    // Suc: a; Max: a, b
};

LevelPtr lvar(const std::string &name);
LevelPtr lzero();
LevelPtr lsuc(LevelPtr e);
LevelPtr lmax(LevelPtr a, LevelPtr b);

// Canonical form: max(constant, max over atoms (var + shift)).  The constant
// is always tracked, even when it is 0; atoms are kept in a sorted map so two
// equal normal forms are structurally identical.
struct LevelNF {
  long constant = 0;
  std::map<std::string, long> atoms;

  bool operator==(const LevelNF &o) const {
    return constant == o.constant && atoms == o.atoms;
  }
  bool operator!=(const LevelNF &o) const { return !(*this == o); }
};

LevelNF normalizeLevel(const LevelPtr &e);
LevelNF nfSuc(const LevelNF &n);
LevelNF nfMax(const LevelNF &a, const LevelNF &b);

// Decides u = v by comparing canonical forms.
bool levelEqual(const LevelPtr &a, const LevelPtr &b);

// Capture-free substitution of level expressions for level variables.
LevelPtr substituteLevel(const LevelPtr &e,
                         const std::map<std::string, LevelPtr> &subst);

// Semantics of a normal form under an assignment of naturals to variables.
// Variables missing from the assignment evaluate to 0.
long evalLevel(const LevelNF &nf, const std::map<std::string, long> &rho);

// Canonical expression for a normal form.  normalizeLevel(embedNF(n)) == n,
// and equal normal forms embed to structurally identical expressions.
LevelPtr embedNF(const LevelNF &nf);

// Free variables of an expression, sorted.
std::vector<std::string> levelVars(const LevelPtr &e);

std::string showLevel(const LevelPtr &e);
std::string showLevelNF(const LevelNF &nf);

} // namespace uvk
