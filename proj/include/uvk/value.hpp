#pragma once

// Semantic domain for normalization by evaluation.  Terms evaluate to values
// with closures; stuck eliminations accumulate in neutral spines that carry
// enough typing information for type-directed readback.

#include "uvk/term.hpp"

#include <functional>
#include <variant>

namespace uvk {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct EnvNode;
using Env = std::shared_ptr<const EnvNode>;
struct EnvNode {
  ValuePtr v;
  Env next;
};
Env envCons(ValuePtr v, Env next);
ValuePtr envLookup(const Env &env, int idx);

class GlobalEnv;

// One-binder closure: either a term body to evaluate in a captured
// environment, or a host-language function (used when readback needs to
// assemble types like the step case of the ℕ eliminator on the fly).
struct Clo1 {
  TermPtr body;
  Env env;
  std::function<ValuePtr(ValuePtr)> fn;
  std::string hint;
};

// Two-binder closure for J motives.
struct Clo2 {
  TermPtr body;
  Env env;
};

enum class VTag {
  U, Pi, Lam, Sigma, Pair, Sum, Inl, Inr, Empty, Unit, Star, Nat, Zero, Suc,
  Id, Refl, Neutral
};

struct FrApp { ValuePtr arg, argType; };
struct FrPr1 {};
struct FrPr2 {};
struct FrNatInd { Clo1 motive; ValuePtr z, s; };
struct FrSumInd { Clo1 motive; ValuePtr onl, onr, A, B; };
struct FrUnitInd { Clo1 motive; ValuePtr base; LevelNF level; };
struct FrAbsurd { ValuePtr target; };
struct FrJ { ValuePtr A, a; Clo2 motive; ValuePtr base, y; };
using Frame =
    std::variant<FrApp, FrPr1, FrPr2, FrNatInd, FrSumInd, FrUnitInd, FrAbsurd,
                 FrJ>;

struct GlobalHead {
  std::string name;
  std::vector<LevelNF> levels;
};

struct Head {
  bool isVar = true;
  int var = 0;       // de Bruijn level of a context variable
  GlobalHead global; // postulate head otherwise
};

struct Neutral {
  Head head;
  std::vector<Frame> frames;
};
using NeutralPtr = std::shared_ptr<const Neutral>;

struct Value {
  VTag tag;
  LevelNF level;     // U, Empty, Unit
  ValuePtr a, b, c;  // Pi: a=dom | Sigma: a=fst | Sum: a,b | Suc/Inl/Inr/Refl: a
                     // Pair: a,b | Id: a=A, b=lhs, c=rhs | Neutral: a=type
  Clo1 clo;          // Pi cod, Lam body, Sigma snd
  NeutralPtr ne;     // Neutral
};

ValuePtr vU(LevelNF level);
ValuePtr vPi(ValuePtr dom, Clo1 cod);
ValuePtr vLam(Clo1 body);
ValuePtr vSigma(ValuePtr fst, Clo1 snd);
ValuePtr vPair(ValuePtr a, ValuePtr b);
ValuePtr vSum(ValuePtr A, ValuePtr B);
ValuePtr vInl(ValuePtr a);
ValuePtr vInr(ValuePtr b);
ValuePtr vEmpty(LevelNF level);
ValuePtr vUnit(LevelNF level);
ValuePtr vStar();
ValuePtr vNat();
ValuePtr vZero();
ValuePtr vSuc(ValuePtr n);
ValuePtr vId(ValuePtr A, ValuePtr lhs, ValuePtr rhs);
ValuePtr vRefl(ValuePtr point);
ValuePtr vNeutral(ValuePtr type, NeutralPtr ne);

// Fresh variable of the given type at the given de Bruijn level.
ValuePtr varNeutral(ValuePtr type, int level);

// Host-function closure helper.
Clo1 hostClo(std::function<ValuePtr(ValuePtr)> fn, std::string hint = "x");

} // namespace uvk
