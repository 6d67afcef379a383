#pragma once

// Core syntax: de Bruijn terms for a Martin-Löf-style calculus with
// Π, Σ (both with definitional η), binary sums, 0, 1, ℕ, identity types
// with J as the only eliminator, and a non-cumulative universe hierarchy.

#include "uvk/level.hpp"

#include <memory>
#include <string>
#include <vector>

namespace uvk {

struct Span {
  int line = 0, col = 0, endLine = 0, endCol = 0;
};

enum class Tag {
  Var,     // idx
  Global,  // name, levels
  Universe,// levels[0]
  Pi,      // kids: dom, cod (1 binder)
  Lam,     // kids: body (1 binder)
  App,     // kids: fn, arg
  Sigma,   // kids: fst, snd (1 binder)
  Pair,    // kids: a, b
  Pr1,     // kids: t
  Pr2,     // kids: t
  Sum,     // kids: A, B
  Inl,     // kids: t
  Inr,     // kids: t
  SumInd,  // kids: motive (1 binder), onl, onr, scrut
  Empty,   // levels[0]
  Absurd,  // kids: target type, t
  Unit,    // levels[0]
  Star,
  UnitInd, // kids: motive (1 binder), base, scrut
  Nat,
  Zero,
  Suc,     // kids: t
  NatInd,  // kids: motive (1 binder), z, s, n
  Id,      // kids: A, a, b
  Refl,    // kids: A, a
  J,       // kids: A, a, motive (2 binders), base, y, p
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Tag tag;
  Span span;
  int idx = 0;                   // Var
  std::string name;              // Global
  std::string hint;              // binder name for printing; ignored by equality
  std::vector<LevelPtr> levels;  // Global arguments; Universe/Empty/Unit level
  std::vector<TermPtr> kids;
};

TermPtr mk(Tag tag, std::vector<TermPtr> kids = {}, Span span = {});
TermPtr mkVar(int idx, Span span = {});
TermPtr mkGlobal(std::string name, std::vector<LevelPtr> levels, Span span = {});
TermPtr mkUniverse(LevelPtr level, Span span = {});
TermPtr mkLeveled(Tag tag, LevelPtr level, Span span = {}); // Empty, Unit
TermPtr withHint(TermPtr t, std::string hint);

// Structural equality up to level normalization; spans and name hints are
// ignored.  On de Bruijn terms this is exactly alpha-equality.
bool termEqual(const TermPtr &a, const TermPtr &b);

// Substitutes level expressions for level variables throughout a term
// (Universe/Empty/Unit annotations and global level arguments).  Term
// variables are untouched; there is no term-level substitution anywhere in
// the kernel.
TermPtr substLevelsTerm(const TermPtr &t,
                        const std::map<std::string, LevelPtr> &subst);

// Collects names of globals referenced anywhere in the term.
void collectGlobals(const TermPtr &t, std::vector<std::string> &out);

} // namespace uvk
