#pragma once

#include "uvk/error.hpp"
#include "uvk/eval.hpp"

namespace uvk {

// Typing context: parallel stacks of variable types and display names, plus
// the evaluation environment mapping each bound variable to a fresh neutral.
struct Ctx {
  std::vector<ValuePtr> types; // innermost last
  std::vector<std::string> names;
  Env env;

  int depth() const { return (int)types.size(); }

  const ValuePtr &lookup(int idx) const; // de Bruijn index, 0 = innermost

  Ctx extend(const ValuePtr &type, const std::string &name) const;
};

// Bidirectional checking. Terms here are fully resolved core terms whose
// level expressions mention only the level parameters currently in scope
// (free level variables are treated as opaque atoms by the level algebra).
ValuePtr inferType(const GlobalEnv &g, const Ctx &ctx, const TermPtr &t);
void checkType(const GlobalEnv &g, const Ctx &ctx, const TermPtr &t,
               const ValuePtr &type);

// Infers t's type and requires it to be a universe; returns its level.
LevelNF inferUniverse(const GlobalEnv &g, const Ctx &ctx, const TermPtr &t);

// Checks a complete declaration against g and installs it on success.
void checkDeclaration(GlobalEnv &g, const Declaration &d);

} // namespace uvk
