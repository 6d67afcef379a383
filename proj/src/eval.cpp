#include "uvk/eval.hpp"

#include <sstream>

namespace uvk {

Env envCons(ValuePtr v, Env next) {
  auto n = std::make_shared<EnvNode>();
  n->v = std::move(v);
  n->next = std::move(next);
  return n;
}

ValuePtr envLookup(const Env &env, int idx) {
  const EnvNode *n = env.get();
  while (idx-- > 0) {
    if (!n)
      throw KernelBug("environment lookup out of range");
    n = n->next.get();
  }
  if (!n)
    throw KernelBug("environment lookup out of range");
  return n->v;
}

static std::shared_ptr<Value> mkv(VTag tag) {
  auto v = std::make_shared<Value>();
  v->tag = tag;
  return v;
}

ValuePtr vU(LevelNF level) {
  auto v = mkv(VTag::U);
  v->level = std::move(level);
  return v;
}
ValuePtr vPi(ValuePtr dom, Clo1 cod) {
  auto v = mkv(VTag::Pi);
  v->a = std::move(dom);
  v->clo = std::move(cod);
  return v;
}
ValuePtr vLam(Clo1 body) {
  auto v = mkv(VTag::Lam);
  v->clo = std::move(body);
  return v;
}
ValuePtr vSigma(ValuePtr fst, Clo1 snd) {
  auto v = mkv(VTag::Sigma);
  v->a = std::move(fst);
  v->clo = std::move(snd);
  return v;
}
ValuePtr vPair(ValuePtr a, ValuePtr b) {
  auto v = mkv(VTag::Pair);
  v->a = std::move(a);
  v->b = std::move(b);
  return v;
}
ValuePtr vSum(ValuePtr A, ValuePtr B) {
  auto v = mkv(VTag::Sum);
  v->a = std::move(A);
  v->b = std::move(B);
  return v;
}
ValuePtr vInl(ValuePtr a) {
  auto v = mkv(VTag::Inl);
  v->a = std::move(a);
  return v;
}
ValuePtr vInr(ValuePtr b) {
  auto v = mkv(VTag::Inr);
  v->a = std::move(b);
  return v;
}
ValuePtr vEmpty(LevelNF level) {
  auto v = mkv(VTag::Empty);
  v->level = std::move(level);
  return v;
}
ValuePtr vUnit(LevelNF level) {
  auto v = mkv(VTag::Unit);
  v->level = std::move(level);
  return v;
}
ValuePtr vStar() { return mkv(VTag::Star); }
ValuePtr vNat() { return mkv(VTag::Nat); }
ValuePtr vZero() { return mkv(VTag::Zero); }
ValuePtr vSuc(ValuePtr n) {
  auto v = mkv(VTag::Suc);
  v->a = std::move(n);
  return v;
}
ValuePtr vId(ValuePtr A, ValuePtr lhs, ValuePtr rhs) {
  auto v = mkv(VTag::Id);
  v->a = std::move(A);
  v->b = std::move(lhs);
  v->c = std::move(rhs);
  return v;
}
ValuePtr vRefl(ValuePtr point) {
  auto v = mkv(VTag::Refl);
  v->a = std::move(point);
  return v;
}
ValuePtr vNeutral(ValuePtr type, NeutralPtr ne) {
  auto v = mkv(VTag::Neutral);
  v->a = std::move(type);
  v->ne = std::move(ne);
  return v;
}

ValuePtr varNeutral(ValuePtr type, int level) {
  auto ne = std::make_shared<Neutral>();
  ne->head.isVar = true;
  ne->head.var = level;
  return vNeutral(std::move(type), ne);
}

Clo1 hostClo(std::function<ValuePtr(ValuePtr)> fn, std::string hint) {
  Clo1 c;
  c.fn = std::move(fn);
  c.hint = std::move(hint);
  return c;
}

ValuePtr applyClo1(const GlobalEnv &g, const Clo1 &c, const ValuePtr &v) {
  if (c.body)
    return evaluate(g, envCons(v, c.env), c.body);
  return c.fn(v);
}

ValuePtr applyClo2(const GlobalEnv &g, const Clo2 &c, const ValuePtr &v1,
                   const ValuePtr &v2) {
  return evaluate(g, envCons(v2, envCons(v1, c.env)), c.body);
}

static ValuePtr pushFrame(const ValuePtr &n, Frame f, ValuePtr resultType) {
  auto ne = std::make_shared<Neutral>(*n->ne);
  ne->frames.push_back(std::move(f));
  return vNeutral(std::move(resultType), ne);
}

ValuePtr doApply(const GlobalEnv &g, const ValuePtr &f, const ValuePtr &a) {
  if (f->tag == VTag::Lam)
    return applyClo1(g, f->clo, a);
  if (f->tag == VTag::Neutral) {
    const ValuePtr &ty = f->a;
    if (ty->tag != VTag::Pi)
      throw KernelBug("application head is not a function");
    return pushFrame(f, FrApp{a, ty->a}, applyClo1(g, ty->clo, a));
  }
  throw KernelBug("application of a non-function value");
}

ValuePtr doPr1(const GlobalEnv &g, const ValuePtr &p) {
  (void)g;
  if (p->tag == VTag::Pair)
    return p->a;
  if (p->tag == VTag::Neutral) {
    const ValuePtr &ty = p->a;
    if (ty->tag != VTag::Sigma)
      throw KernelBug("projection from a non-pair");
    return pushFrame(p, FrPr1{}, ty->a);
  }
  throw KernelBug("projection from a non-pair value");
}

ValuePtr doPr2(const GlobalEnv &g, const ValuePtr &p) {
  if (p->tag == VTag::Pair)
    return p->b;
  if (p->tag == VTag::Neutral) {
    const ValuePtr &ty = p->a;
    if (ty->tag != VTag::Sigma)
      throw KernelBug("projection from a non-pair");
    return pushFrame(p, FrPr2{}, applyClo1(g, ty->clo, doPr1(g, p)));
  }
  throw KernelBug("projection from a non-pair value");
}

static ValuePtr doNatInd(const GlobalEnv &g, const Clo1 &motive,
                         const ValuePtr &z, const ValuePtr &s,
                         const ValuePtr &n) {
  if (n->tag == VTag::Zero)
    return z;
  if (n->tag == VTag::Suc)
    return doApply(g, doApply(g, s, n->a), doNatInd(g, motive, z, s, n->a));
  if (n->tag == VTag::Neutral)
    return pushFrame(n, FrNatInd{motive, z, s}, applyClo1(g, motive, n));
  throw KernelBug("natural number eliminator on a non-numeral");
}

static ValuePtr doSumInd(const GlobalEnv &g, const Clo1 &motive,
                         const ValuePtr &onl, const ValuePtr &onr,
                         const ValuePtr &t) {
  if (t->tag == VTag::Inl)
    return doApply(g, onl, t->a);
  if (t->tag == VTag::Inr)
    return doApply(g, onr, t->a);
  if (t->tag == VTag::Neutral) {
    const ValuePtr &ty = t->a;
    if (ty->tag != VTag::Sum)
      throw KernelBug("sum eliminator scrutinee is not a sum");
    return pushFrame(t, FrSumInd{motive, onl, onr, ty->a, ty->b},
                     applyClo1(g, motive, t));
  }
  throw KernelBug("sum eliminator on a non-sum value");
}

static ValuePtr doUnitInd(const GlobalEnv &g, const Clo1 &motive,
                          const ValuePtr &base, const ValuePtr &t) {
  if (t->tag == VTag::Star)
    return base;
  if (t->tag == VTag::Neutral) {
    const ValuePtr &ty = t->a;
    if (ty->tag != VTag::Unit)
      throw KernelBug("unit eliminator scrutinee is not a unit");
    return pushFrame(t, FrUnitInd{motive, base, ty->level},
                     applyClo1(g, motive, t));
  }
  throw KernelBug("unit eliminator on a non-unit value");
}

static ValuePtr doAbsurd(const GlobalEnv &g, const ValuePtr &target,
                         const ValuePtr &t) {
  (void)g;
  if (t->tag == VTag::Neutral)
    return pushFrame(t, FrAbsurd{target}, target);
  throw KernelBug("empty eliminator on a non-neutral value");
}

static ValuePtr doJ(const GlobalEnv &g, const ValuePtr &A, const ValuePtr &a,
                    const Clo2 &motive, const ValuePtr &base, const ValuePtr &y,
                    const ValuePtr &p) {
  if (p->tag == VTag::Refl)
    return base;
  if (p->tag == VTag::Neutral)
    return pushFrame(p, FrJ{A, a, motive, base, y}, applyClo2(g, motive, y, p));
  throw KernelBug("path eliminator on a non-path value");
}

// Memoized instantiation of a global at concrete level arguments.
static const GlobalEnv::Cached &instantiate(const GlobalEnv &g,
                                            const TermPtr &t) {
  const Declaration *d = g.find(t->name);
  if (!d)
    throw KernelBug("unknown global '" + t->name + "'");
  if (d->levelParams.size() != t->levels.size())
    throw KernelBug("level arity mismatch on '" + t->name + "'");

  std::ostringstream key;
  key << t->name;
  std::map<std::string, LevelPtr> subst;
  for (size_t i = 0; i < t->levels.size(); ++i) {
    LevelNF nf = normalizeLevel(t->levels[i]);
    key << ";" << showLevelNF(nf);
    subst[d->levelParams[i]] = embedNF(nf);
  }
  auto it = g.cache.find(key.str());
  if (it != g.cache.end())
    return it->second;

  GlobalEnv::Cached c;
  c.type = evaluate(g, nullptr, substLevelsTerm(d->type, subst));
  if (d->body) {
    c.value = evaluate(g, nullptr, substLevelsTerm(d->body, subst));
  } else {
    auto ne = std::make_shared<Neutral>();
    ne->head.isVar = false;
    ne->head.global.name = t->name;
    for (auto &l : t->levels)
      ne->head.global.levels.push_back(normalizeLevel(l));
    c.value = vNeutral(c.type, ne);
  }
  return g.cache.emplace(key.str(), std::move(c)).first->second;
}

ValuePtr globalType(const GlobalEnv &g, const TermPtr &t) {
  return instantiate(g, t).type;
}

ValuePtr evaluate(const GlobalEnv &g, const Env &env, const TermPtr &t) {
  switch (t->tag) {
  case Tag::Var:
    return envLookup(env, t->idx);
  case Tag::Global:
    return instantiate(g, t).value;
  case Tag::Universe:
    return vU(normalizeLevel(t->levels[0]));
  case Tag::Pi:
    return vPi(evaluate(g, env, t->kids[0]), Clo1{t->kids[1], env, {}, t->hint});
  case Tag::Lam:
    return vLam(Clo1{t->kids[0], env, {}, t->hint});
  case Tag::App:
    return doApply(g, evaluate(g, env, t->kids[0]), evaluate(g, env, t->kids[1]));
  case Tag::Sigma:
    return vSigma(evaluate(g, env, t->kids[0]),
                  Clo1{t->kids[1], env, {}, t->hint});
  case Tag::Pair:
    return vPair(evaluate(g, env, t->kids[0]), evaluate(g, env, t->kids[1]));
  case Tag::Pr1:
    return doPr1(g, evaluate(g, env, t->kids[0]));
  case Tag::Pr2:
    return doPr2(g, evaluate(g, env, t->kids[0]));
  case Tag::Sum:
    return vSum(evaluate(g, env, t->kids[0]), evaluate(g, env, t->kids[1]));
  case Tag::Inl:
    return vInl(evaluate(g, env, t->kids[0]));
  case Tag::Inr:
    return vInr(evaluate(g, env, t->kids[0]));
  case Tag::SumInd:
    return doSumInd(g, Clo1{t->kids[0], env, {}, ""},
                    evaluate(g, env, t->kids[1]), evaluate(g, env, t->kids[2]),
                    evaluate(g, env, t->kids[3]));
  case Tag::Empty:
    return vEmpty(normalizeLevel(t->levels[0]));
  case Tag::Absurd:
    return doAbsurd(g, evaluate(g, env, t->kids[0]),
                    evaluate(g, env, t->kids[1]));
  case Tag::Unit:
    return vUnit(normalizeLevel(t->levels[0]));
  case Tag::Star:
    return vStar();
  case Tag::UnitInd:
    return doUnitInd(g, Clo1{t->kids[0], env, {}, ""},
                     evaluate(g, env, t->kids[1]),
                     evaluate(g, env, t->kids[2]));
  case Tag::Nat:
    return vNat();
  case Tag::Zero:
    return vZero();
  case Tag::Suc:
    return vSuc(evaluate(g, env, t->kids[0]));
  case Tag::NatInd:
    return doNatInd(g, Clo1{t->kids[0], env, {}, ""},
                    evaluate(g, env, t->kids[1]), evaluate(g, env, t->kids[2]),
                    evaluate(g, env, t->kids[3]));
  case Tag::Id:
    return vId(evaluate(g, env, t->kids[0]), evaluate(g, env, t->kids[1]),
               evaluate(g, env, t->kids[2]));
  case Tag::Refl:
    return vRefl(evaluate(g, env, t->kids[1]));
  case Tag::J:
    return doJ(g, evaluate(g, env, t->kids[0]), evaluate(g, env, t->kids[1]),
               Clo2{t->kids[2], env}, evaluate(g, env, t->kids[3]),
               evaluate(g, env, t->kids[4]), evaluate(g, env, t->kids[5]));
  }
  throw KernelBug("evaluate: unhandled term");
}

static TermPtr readbackNeutral(const GlobalEnv &g, int depth,
                               const NeutralPtr &ne);

TermPtr readbackType(const GlobalEnv &g, int depth, const ValuePtr &v) {
  switch (v->tag) {
  case VTag::U:
    return mkUniverse(embedNF(v->level));
  case VTag::Pi: {
    auto fresh = varNeutral(v->a, depth);
    auto dom = readbackType(g, depth, v->a);
    auto cod = readbackType(g, depth + 1, applyClo1(g, v->clo, fresh));
    return withHint(mk(Tag::Pi, {dom, cod}), v->clo.hint);
  }
  case VTag::Sigma: {
    auto fresh = varNeutral(v->a, depth);
    auto fst = readbackType(g, depth, v->a);
    auto snd = readbackType(g, depth + 1, applyClo1(g, v->clo, fresh));
    return withHint(mk(Tag::Sigma, {fst, snd}), v->clo.hint);
  }
  case VTag::Sum:
    return mk(Tag::Sum,
              {readbackType(g, depth, v->a), readbackType(g, depth, v->b)});
  case VTag::Empty:
    return mkLeveled(Tag::Empty, embedNF(v->level));
  case VTag::Unit:
    return mkLeveled(Tag::Unit, embedNF(v->level));
  case VTag::Nat:
    return mk(Tag::Nat);
  case VTag::Id:
    return mk(Tag::Id, {readbackType(g, depth, v->a),
                        readback(g, depth, v->a, v->b),
                        readback(g, depth, v->a, v->c)});
  case VTag::Neutral:
    return readbackNeutral(g, depth, v->ne);
  default:
    throw KernelBug("readback of a non-type where a type was expected");
  }
}

TermPtr readback(const GlobalEnv &g, int depth, const ValuePtr &type,
                 const ValuePtr &v) {
  switch (type->tag) {
  case VTag::Pi: {
    // η-long: every function value prints as a lambda.
    auto fresh = varNeutral(type->a, depth);
    auto body = readback(g, depth + 1, applyClo1(g, type->clo, fresh),
                         doApply(g, v, fresh));
    return withHint(mk(Tag::Lam, {body}), v->tag == VTag::Lam && !v->clo.hint.empty()
                                              ? v->clo.hint
                                              : type->clo.hint);
  }
  case VTag::Sigma: {
    // η-long: every pair value prints as a pair of projections.
    auto p1 = doPr1(g, v);
    auto fst = readback(g, depth, type->a, p1);
    auto snd = readback(g, depth, applyClo1(g, type->clo, p1), doPr2(g, v));
    return mk(Tag::Pair, {fst, snd});
  }
  case VTag::U:
    return readbackType(g, depth, v);
  case VTag::Nat:
    if (v->tag == VTag::Zero)
      return mk(Tag::Zero);
    if (v->tag == VTag::Suc)
      return mk(Tag::Suc, {readback(g, depth, type, v->a)});
    break;
  case VTag::Sum:
    if (v->tag == VTag::Inl)
      return mk(Tag::Inl, {readback(g, depth, type->a, v->a)});
    if (v->tag == VTag::Inr)
      return mk(Tag::Inr, {readback(g, depth, type->b, v->a)});
    break;
  case VTag::Unit:
    // No η for 1: star and neutrals read back as themselves.
    if (v->tag == VTag::Star)
      return mk(Tag::Star);
    break;
  case VTag::Id:
    if (v->tag == VTag::Refl)
      return mk(Tag::Refl, {readbackType(g, depth, type->a),
                            readback(g, depth, type->a, type->b)});
    break;
  case VTag::Empty:
  case VTag::Neutral:
    break;
  default:
    throw KernelBug("readback at a non-type");
  }
  if (v->tag == VTag::Neutral)
    return readbackNeutral(g, depth, v->ne);
  throw KernelBug("readback: value does not fit its type");
}

static TermPtr readbackNeutral(const GlobalEnv &g, int depth,
                               const NeutralPtr &ne) {
  TermPtr acc;
  if (ne->head.isVar) {
    acc = mkVar(depth - 1 - ne->head.var);
  } else {
    std::vector<LevelPtr> ls;
    for (auto &nf : ne->head.global.levels)
      ls.push_back(embedNF(nf));
    acc = mkGlobal(ne->head.global.name, std::move(ls));
  }
  for (const Frame &fr : ne->frames) {
    if (auto *app = std::get_if<FrApp>(&fr)) {
      acc = mk(Tag::App, {acc, readback(g, depth, app->argType, app->arg)});
    } else if (std::get_if<FrPr1>(&fr)) {
      acc = mk(Tag::Pr1, {acc});
    } else if (std::get_if<FrPr2>(&fr)) {
      acc = mk(Tag::Pr2, {acc});
    } else if (auto *ni = std::get_if<FrNatInd>(&fr)) {
      auto fresh = varNeutral(vNat(), depth);
      auto motive = readbackType(g, depth + 1, applyClo1(g, ni->motive, fresh));
      auto z = readback(g, depth, applyClo1(g, ni->motive, vZero()), ni->z);
      Clo1 m = ni->motive;
      auto sTy = vPi(vNat(), hostClo([&g, m](ValuePtr k) {
                       auto ck = applyClo1(g, m, k);
                       return vPi(ck, hostClo([&g, m, k](ValuePtr) {
                                    return applyClo1(g, m, vSuc(k));
                                  }));
                     }));
      auto s = readback(g, depth, sTy, ni->s);
      acc = mk(Tag::NatInd, {motive, z, s, acc});
    } else if (auto *si = std::get_if<FrSumInd>(&fr)) {
      auto fresh = varNeutral(vSum(si->A, si->B), depth);
      auto motive = readbackType(g, depth + 1, applyClo1(g, si->motive, fresh));
      Clo1 m = si->motive;
      auto lTy = vPi(si->A, hostClo([&g, m](ValuePtr a) {
                       return applyClo1(g, m, vInl(a));
                     }));
      auto rTy = vPi(si->B, hostClo([&g, m](ValuePtr b) {
                       return applyClo1(g, m, vInr(b));
                     }));
      auto onl = readback(g, depth, lTy, si->onl);
      auto onr = readback(g, depth, rTy, si->onr);
      acc = mk(Tag::SumInd, {motive, onl, onr, acc});
    } else if (auto *ui = std::get_if<FrUnitInd>(&fr)) {
      auto fresh = varNeutral(vUnit(ui->level), depth);
      auto motive = readbackType(g, depth + 1, applyClo1(g, ui->motive, fresh));
      auto base = readback(g, depth, applyClo1(g, ui->motive, vStar()), ui->base);
      acc = mk(Tag::UnitInd, {motive, base, acc});
    } else if (auto *ab = std::get_if<FrAbsurd>(&fr)) {
      acc = mk(Tag::Absurd, {readbackType(g, depth, ab->target), acc});
    } else if (auto *j = std::get_if<FrJ>(&fr)) {
      auto A = readbackType(g, depth, j->A);
      auto a = readback(g, depth, j->A, j->a);
      auto freshY = varNeutral(j->A, depth);
      auto freshP = varNeutral(vId(j->A, j->a, freshY), depth + 1);
      auto motive =
          readbackType(g, depth + 2, applyClo2(g, j->motive, freshY, freshP));
      auto base = readback(
          g, depth, applyClo2(g, j->motive, j->a, vRefl(j->a)), j->base);
      auto y = readback(g, depth, j->A, j->y);
      acc = mk(Tag::J, {A, a, motive, base, y, acc});
    }
  }
  return acc;
}

bool convertible(const GlobalEnv &g, int depth, const ValuePtr &type,
                 const ValuePtr &a, const ValuePtr &b) {
  return termEqual(readback(g, depth, type, a), readback(g, depth, type, b));
}

bool convertibleType(const GlobalEnv &g, int depth, const ValuePtr &A,
                     const ValuePtr &B) {
  return termEqual(readbackType(g, depth, A), readbackType(g, depth, B));
}

const Declaration *GlobalEnv::find(const std::string &name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &order_[it->second];
}

void GlobalEnv::insert(Declaration d) {
  index_[d.name] = order_.size();
  order_.push_back(std::move(d));
}

} // namespace uvk
