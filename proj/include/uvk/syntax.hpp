#pragma once

// Surface syntax: tokens, the named surface AST produced by the parser, and
// the resolver that elaborates it into core terms (de Bruijn indices, binder
// bodies for eliminator motives, explicit level arguments).

#include "uvk/error.hpp"
#include "uvk/globals.hpp"

namespace uvk {

enum class Tok {
  Ident, Number,
  KwDef, KwPostulate, KwIn, KwU, KwNat, KwZero, KwStar,
  KwId, KwRefl, KwJ, KwNatInd, KwSumInd, KwUnitInd, KwAbsurd,
  KwSuc, KwInl, KwInr,
  Lambda, PiTok, SigmaTok, Arrow, Times, Plus, Join, LevelSuc,
  LParen, RParen, LBracket, RBracket,
  Comma, Colon, ColonEq, Eq,
  End
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

// Throws CheckError{category: "lex"} on bad input.
std::vector<Token> tokenize(const std::string &text);

struct STerm;
using STermPtr = std::shared_ptr<const STerm>;

enum class SKind {
  Ident,   // name, optional level arguments
  TypeNum, // 0 or 1 with an optional level
  Univ,    // U ℓ
  Lambda,  // binders (possibly untyped), body = args[0]
  PiB,     // typed binders, body = args[0]
  SigmaB,  // typed binders, body = args[0]
  Arrow,   // args[0] → args[1]
  Times,   // args[0] × args[1]
  SumS,    // args[0] + args[1]
  App,     // args[0] args[1]
  PairS,   // (args[0], args[1])
  EqIn,    // args[0] = args[1] in args[2]
  Former,  // keyword former with fixed arity, args in source order
  StarS, ZeroS, NatS
};

struct SBinder {
  std::vector<std::string> names;
  STermPtr type; // null on an untyped λ binder
  Span span;
};

struct STerm {
  SKind kind;
  Span span;
  std::string name;            // Ident
  std::vector<LevelPtr> levels; // Ident args, TypeNum/Univ level
  bool hasLevels = false;
  long num = 0;                // TypeNum
  std::vector<SBinder> binders;
  Tag former = Tag::Nat;       // Former
  std::vector<STermPtr> args;
};

struct SDecl {
  bool isPostulate = false;
  std::string name;
  std::vector<std::string> levelParams;
  std::vector<SBinder> binders;
  STermPtr type;
  STermPtr body; // null for postulates
  Span span;
};

// Throws CheckError{category: "lex" | "parse"}.
std::vector<SDecl> parseFile(const std::string &text);

// Elaborates one surface declaration against the already-checked globals.
// Throws CheckError{category: "unbound"} for resolution failures, including
// level-argument arity and unknown level variables.
Declaration resolveDecl(const GlobalEnv &g, const SDecl &d,
                        const std::string &file);

} // namespace uvk
