#include "uvk/typecheck.hpp"

#include "uvk/pretty.hpp"

#include <set>

namespace uvk {

const ValuePtr &Ctx::lookup(int idx) const {
  if (idx < 0 || idx >= (int)types.size())
    throw KernelBug("context lookup out of range");
  return types[types.size() - 1 - idx];
}

Ctx Ctx::extend(const ValuePtr &type, const std::string &name) const {
  Ctx out = *this;
  out.env = envCons(varNeutral(type, depth()), env);
  out.types.push_back(type);
  out.names.push_back(name.empty() ? "x" : name);
  return out;
}

namespace {

[[noreturn]] void fail(std::string category, const Span &span,
                       std::string message, std::string expected = "",
                       std::string actual = "") {
  throw CheckError{std::move(category), span, std::move(message),
                   std::move(expected), std::move(actual)};
}

std::string show(const GlobalEnv &g, const Ctx &ctx, const ValuePtr &type) {
  return prettyTypeValue(g, ctx.depth(), type, ctx.names);
}

// Conversion failure between an expected and an inferred/annotated type,
// classified: two universes disagree on level, two identity types over a
// convertible carrier disagree on endpoints, anything else is a plain
// type mismatch.
void requireSameType(const GlobalEnv &g, const Ctx &ctx, const Span &span,
                     const ValuePtr &expected, const ValuePtr &actual) {
  if (convertibleType(g, ctx.depth(), expected, actual))
    return;
  std::string cat = "type-mismatch";
  std::string msg = "type mismatch";
  if (expected->tag == VTag::U && actual->tag == VTag::U) {
    cat = "universe-mismatch";
    msg = "universe levels differ";
  } else if (expected->tag == VTag::Id && actual->tag == VTag::Id &&
             convertibleType(g, ctx.depth(), expected->a, actual->a)) {
    cat = "endpoint-mismatch";
    msg = "identity types over the same carrier differ in endpoints";
  }
  fail(cat, span, msg, show(g, ctx, expected), show(g, ctx, actual));
}

ValuePtr eval(const GlobalEnv &g, const Ctx &ctx, const TermPtr &t) {
  return evaluate(g, ctx.env, t);
}

} // namespace

LevelNF inferUniverse(const GlobalEnv &g, const Ctx &ctx, const TermPtr &t) {
  ValuePtr ty = inferType(g, ctx, t);
  if (ty->tag != VTag::U)
    fail("type-mismatch", t->span, "a universe was expected here",
         "U _", show(g, ctx, ty));
  return ty->level;
}

ValuePtr inferType(const GlobalEnv &g, const Ctx &ctx, const TermPtr &t) {
  switch (t->tag) {
  case Tag::Var:
    return ctx.lookup(t->idx);

  case Tag::Global: {
    const Declaration *d = g.find(t->name);
    if (!d)
      fail("unbound", t->span, "unknown name '" + t->name + "'");
    if (d->levelParams.size() != t->levels.size())
      fail("unbound", t->span,
           "'" + t->name + "' takes " +
               std::to_string(d->levelParams.size()) +
               " level argument(s), given " + std::to_string(t->levels.size()));
    return globalType(g, t);
  }

  case Tag::Universe:
    return vU(nfSuc(normalizeLevel(t->levels[0])));

  case Tag::Pi:
  case Tag::Sigma: {
    LevelNF l1 = inferUniverse(g, ctx, t->kids[0]);
    Ctx inner = ctx.extend(eval(g, ctx, t->kids[0]), t->hint);
    LevelNF l2 = inferUniverse(g, inner, t->kids[1]);
    return vU(nfMax(l1, l2));
  }

  case Tag::Sum: {
    LevelNF l1 = inferUniverse(g, ctx, t->kids[0]);
    LevelNF l2 = inferUniverse(g, ctx, t->kids[1]);
    return vU(nfMax(l1, l2));
  }

  case Tag::Empty:
  case Tag::Unit:
    return vU(normalizeLevel(t->levels[0]));

  case Tag::Nat:
    return vU(LevelNF{});

  case Tag::Zero:
    return vNat();

  case Tag::Suc:
    checkType(g, ctx, t->kids[0], vNat());
    return vNat();

  case Tag::Id: {
    LevelNF l = inferUniverse(g, ctx, t->kids[0]);
    ValuePtr A = eval(g, ctx, t->kids[0]);
    checkType(g, ctx, t->kids[1], A);
    checkType(g, ctx, t->kids[2], A);
    return vU(l);
  }

  case Tag::Refl: {
    inferUniverse(g, ctx, t->kids[0]);
    ValuePtr A = eval(g, ctx, t->kids[0]);
    checkType(g, ctx, t->kids[1], A);
    ValuePtr a = eval(g, ctx, t->kids[1]);
    return vId(A, a, a);
  }

  case Tag::App: {
    ValuePtr fty = inferType(g, ctx, t->kids[0]);
    if (fty->tag != VTag::Pi)
      fail("type-mismatch", t->span, "applied expression is not a function",
           "Π _ , _", show(g, ctx, fty));
    checkType(g, ctx, t->kids[1], fty->a);
    return applyClo1(g, fty->clo, eval(g, ctx, t->kids[1]));
  }

  case Tag::Pr1: {
    ValuePtr pty = inferType(g, ctx, t->kids[0]);
    if (pty->tag != VTag::Sigma)
      fail("type-mismatch", t->span, "projected expression is not a pair",
           "Σ _ , _", show(g, ctx, pty));
    return pty->a;
  }

  case Tag::Pr2: {
    ValuePtr pty = inferType(g, ctx, t->kids[0]);
    if (pty->tag != VTag::Sigma)
      fail("type-mismatch", t->span, "projected expression is not a pair",
           "Σ _ , _", show(g, ctx, pty));
    return applyClo1(g, pty->clo, doPr1(g, eval(g, ctx, t->kids[0])));
  }

  case Tag::Absurd: {
    inferUniverse(g, ctx, t->kids[0]);
    ValuePtr ety = inferType(g, ctx, t->kids[1]);
    if (ety->tag != VTag::Empty)
      fail("type-mismatch", t->span,
           "eliminated expression does not inhabit the empty type", "0",
           show(g, ctx, ety));
    return eval(g, ctx, t->kids[0]);
  }

  case Tag::UnitInd: {
    ValuePtr sty = inferType(g, ctx, t->kids[2]);
    if (sty->tag != VTag::Unit)
      fail("type-mismatch", t->span,
           "eliminated expression does not inhabit the unit type", "1",
           show(g, ctx, sty));
    Ctx inner = ctx.extend(sty, "u");
    inferUniverse(g, inner, t->kids[0]);
    Clo1 motive{t->kids[0], ctx.env, {}, "u"};
    checkType(g, ctx, t->kids[1], applyClo1(g, motive, vStar()));
    return applyClo1(g, motive, eval(g, ctx, t->kids[2]));
  }

  case Tag::NatInd: {
    checkType(g, ctx, t->kids[3], vNat());
    Ctx inner = ctx.extend(vNat(), "n");
    inferUniverse(g, inner, t->kids[0]);
    Clo1 motive{t->kids[0], ctx.env, {}, "n"};
    checkType(g, ctx, t->kids[1], applyClo1(g, motive, vZero()));
    ValuePtr stepTy = vPi(
        vNat(), hostClo(
                    [&g, motive](ValuePtr k) {
                      ValuePtr cur = applyClo1(g, motive, k);
                      ValuePtr nxt = applyClo1(g, motive, vSuc(k));
                      return vPi(cur, hostClo([nxt](ValuePtr) { return nxt; },
                                              "_"));
                    },
                    "k"));
    checkType(g, ctx, t->kids[2], stepTy);
    return applyClo1(g, motive, eval(g, ctx, t->kids[3]));
  }

  case Tag::SumInd: {
    ValuePtr sty = inferType(g, ctx, t->kids[3]);
    if (sty->tag != VTag::Sum)
      fail("type-mismatch", t->span,
           "eliminated expression does not inhabit a sum type", "_ + _",
           show(g, ctx, sty));
    Ctx inner = ctx.extend(sty, "z");
    inferUniverse(g, inner, t->kids[0]);
    Clo1 motive{t->kids[0], ctx.env, {}, "z"};
    ValuePtr lTy = vPi(sty->a, hostClo(
                                   [&g, motive](ValuePtr a) {
                                     return applyClo1(g, motive, vInl(a));
                                   },
                                   "a"));
    ValuePtr rTy = vPi(sty->b, hostClo(
                                   [&g, motive](ValuePtr b) {
                                     return applyClo1(g, motive, vInr(b));
                                   },
                                   "b"));
    checkType(g, ctx, t->kids[1], lTy);
    checkType(g, ctx, t->kids[2], rTy);
    return applyClo1(g, motive, eval(g, ctx, t->kids[3]));
  }

  case Tag::J: {
    inferUniverse(g, ctx, t->kids[0]);
    ValuePtr A = eval(g, ctx, t->kids[0]);
    checkType(g, ctx, t->kids[1], A);
    ValuePtr a = eval(g, ctx, t->kids[1]);
    Ctx cy = ctx.extend(A, "y");
    ValuePtr yVar = envLookup(cy.env, 0);
    Ctx cp = cy.extend(vId(A, a, yVar), "p");
    inferUniverse(g, cp, t->kids[2]);
    Clo2 motive{t->kids[2], ctx.env};
    checkType(g, ctx, t->kids[3], applyClo2(g, motive, a, vRefl(a)));
    checkType(g, ctx, t->kids[4], A);
    ValuePtr y = eval(g, ctx, t->kids[4]);
    checkType(g, ctx, t->kids[5], vId(A, a, y));
    return applyClo2(g, motive, y, eval(g, ctx, t->kids[5]));
  }

  case Tag::Lam:
    fail("not-inferable", t->span,
         "cannot infer the type of an unannotated λ-abstraction; "
         "a type ascription or checking position is required");
  case Tag::Pair:
    fail("not-inferable", t->span,
         "cannot infer the type of a pair; the pairing constructor only "
         "checks against a given Σ-type");
  case Tag::Inl:
  case Tag::Inr:
    fail("not-inferable", t->span,
         "cannot infer the type of an injection; the other summand is "
         "not determined");
  case Tag::Star:
    fail("not-inferable", t->span,
         "cannot infer the universe level of star; check it against a "
         "unit type");
  }
  throw KernelBug("unhandled term tag in inference");
}

void checkType(const GlobalEnv &g, const Ctx &ctx, const TermPtr &t,
               const ValuePtr &type) {
  switch (t->tag) {
  case Tag::Lam: {
    if (type->tag != VTag::Pi)
      fail("type-mismatch", t->span,
           "λ-abstraction checked against a non-function type",
           show(g, ctx, type), "λ " + (t->hint.empty() ? "_" : t->hint) +
                                   ", _");
    if (t->kids.size() > 1) { // domain annotation from the surface binder
      inferUniverse(g, ctx, t->kids[1]);
      requireSameType(g, ctx, t->kids[1]->span, type->a,
                      eval(g, ctx, t->kids[1]));
    }
    Ctx inner = ctx.extend(type->a, t->hint);
    checkType(g, inner, t->kids[0],
              applyClo1(g, type->clo, envLookup(inner.env, 0)));
    return;
  }

  case Tag::Pair: {
    if (type->tag != VTag::Sigma)
      fail("type-mismatch", t->span,
           "pair checked against a non-pair type", show(g, ctx, type),
           "(_, _)");
    checkType(g, ctx, t->kids[0], type->a);
    checkType(g, ctx, t->kids[1],
              applyClo1(g, type->clo, eval(g, ctx, t->kids[0])));
    return;
  }

  case Tag::Inl:
  case Tag::Inr: {
    if (type->tag != VTag::Sum)
      fail("type-mismatch", t->span,
           "injection checked against a non-sum type", show(g, ctx, type),
           t->tag == Tag::Inl ? "inl _" : "inr _");
    checkType(g, ctx, t->kids[0], t->tag == Tag::Inl ? type->a : type->b);
    return;
  }

  case Tag::Star: {
    if (type->tag != VTag::Unit)
      fail("type-mismatch", t->span,
           "star checked against a non-unit type", show(g, ctx, type),
           "star");
    return;
  }

  case Tag::Refl: {
    if (type->tag != VTag::Id) {
      ValuePtr ity = inferType(g, ctx, t);
      requireSameType(g, ctx, t->span, type, ity);
      return;
    }
    inferUniverse(g, ctx, t->kids[0]);
    ValuePtr A = eval(g, ctx, t->kids[0]);
    requireSameType(g, ctx, t->kids[0]->span, type->a, A);
    checkType(g, ctx, t->kids[1], A);
    ValuePtr a = eval(g, ctx, t->kids[1]);
    if (!convertible(g, ctx.depth(), A, a, type->b) ||
        !convertible(g, ctx.depth(), A, a, type->c))
      fail("endpoint-mismatch", t->span,
           "reflexivity proof does not match the required endpoints",
           show(g, ctx, type),
           prettyTerm(mk(Tag::Id,
                         {readbackType(g, ctx.depth(), A),
                          readback(g, ctx.depth(), A, a),
                          readback(g, ctx.depth(), A, a)},
                         t->span),
                      ctx.names));
    return;
  }

  default: {
    ValuePtr ity = inferType(g, ctx, t);
    requireSameType(g, ctx, t->span, type, ity);
    return;
  }
  }
}

void checkDeclaration(GlobalEnv &g, const Declaration &d) {
  if (g.find(d.name))
    fail("duplicate-name", d.span,
         "'" + d.name + "' is already declared");
  std::set<std::string> seen;
  for (auto &p : d.levelParams)
    if (!seen.insert(p).second)
      fail("duplicate-name", d.span,
           "level parameter '" + p + "' is bound twice");
  Ctx ctx;
  inferUniverse(g, ctx, d.type);
  ValuePtr ty = evaluate(g, nullptr, d.type);
  if (d.body)
    checkType(g, ctx, d.body, ty);
  g.insert(d);
}

int categoryExitCode(const std::string &category) {
  if (category == "lex" || category == "parse" || category == "unbound")
    return 2;
  if (category == "io" || category == "manifest-drift")
    return 3;
  return 1; // type-mismatch, universe-mismatch, endpoint-mismatch,
            // not-inferable, duplicate-name
}

} // namespace uvk
