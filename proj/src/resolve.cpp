#include "uvk/syntax.hpp"

#include "uvk/eval.hpp"

#include <set>

namespace uvk {

namespace {

struct Resolver {
  const GlobalEnv &g;
  std::set<std::string> levelParams;
  std::vector<std::string> scope; // innermost last; "" is unmatchable

  [[noreturn]] void err(const Span &sp, const std::string &msg) const {
    throw CheckError{"unbound", sp, msg, "", ""};
  }

  int lookupLocal(const std::string &name) const {
    if (name.empty())
      return -1;
    for (int j = (int)scope.size() - 1; j >= 0; --j)
      if (scope[j] == name)
        return (int)scope.size() - 1 - j;
    return -1;
  }

  LevelPtr resolveLevel(const LevelPtr &l, const Span &sp) const {
    switch (l->kind) {
    case LevelExpr::Var:
      if (!levelParams.count(l->name))
        err(sp, "unknown level variable '" + l->name + "'");
      return l;
    case LevelExpr::Zero:
      return l;
    case LevelExpr::Suc:
      resolveLevel(l->a, sp);
      return l;
    case LevelExpr::Max:
      resolveLevel(l->a, sp);
      resolveLevel(l->b, sp);
      return l;
    }
    return l;
  }

  bool isProjection(const STermPtr &s) const {
    return s->kind == SKind::Ident && (s->name == "pr1" || s->name == "pr2") &&
           lookupLocal(s->name) < 0;
  }

  TermPtr resolve(const STermPtr &s) {
    switch (s->kind) {
    case SKind::Ident: {
      int idx = lookupLocal(s->name);
      if (idx >= 0) {
        if (s->hasLevels)
          err(s->span, "'" + s->name +
                           "' is a bound variable and takes no level "
                           "arguments");
        return mkVar(idx, s->span);
      }
      if (s->name == "pr1" || s->name == "pr2")
        err(s->span, "'" + s->name + "' needs an argument to project");
      const Declaration *d = g.find(s->name);
      if (!d)
        err(s->span, "unknown name '" + s->name + "'");
      if (d->levelParams.size() != s->levels.size())
        err(s->span, "'" + s->name + "' takes " +
                         std::to_string(d->levelParams.size()) +
                         " level argument(s), given " +
                         std::to_string(s->levels.size()));
      std::vector<LevelPtr> ls;
      for (auto &l : s->levels)
        ls.push_back(resolveLevel(l, s->span));
      return mkGlobal(s->name, std::move(ls), s->span);
    }

    case SKind::TypeNum: {
      LevelPtr l = s->levels.empty() ? lzero()
                                     : resolveLevel(s->levels[0], s->span);
      return mkLeveled(s->num == 0 ? Tag::Empty : Tag::Unit, l, s->span);
    }

    case SKind::Univ:
      return mkUniverse(resolveLevel(s->levels[0], s->span), s->span);

    case SKind::NatS:
      return mk(Tag::Nat, {}, s->span);
    case SKind::ZeroS:
      return mk(Tag::Zero, {}, s->span);
    case SKind::StarS:
      return mk(Tag::Star, {}, s->span);

    case SKind::Lambda: {
      // resolve annotations at their own depth while descending
      std::vector<std::pair<std::string, TermPtr>> entries;
      for (auto &b : s->binders)
        for (auto &n : b.names) {
          TermPtr annot = b.type ? resolve(b.type) : nullptr;
          scope.push_back(n);
          entries.emplace_back(n, annot);
        }
      TermPtr body = resolve(s->args[0]);
      for (size_t j = entries.size(); j-- > 0;) {
        std::vector<TermPtr> kids{body};
        if (entries[j].second)
          kids.push_back(entries[j].second);
        body = withHint(mk(Tag::Lam, std::move(kids), s->span),
                        entries[j].first);
        scope.pop_back();
      }
      return body;
    }

    case SKind::PiB:
    case SKind::SigmaB: {
      Tag tag = s->kind == SKind::PiB ? Tag::Pi : Tag::Sigma;
      std::vector<std::pair<std::string, TermPtr>> entries;
      for (auto &b : s->binders)
        for (auto &n : b.names) {
          TermPtr dom = resolve(b.type);
          scope.push_back(n);
          entries.emplace_back(n, dom);
        }
      TermPtr body = resolve(s->args[0]);
      for (size_t j = entries.size(); j-- > 0;) {
        body = withHint(mk(tag, {entries[j].second, body}, s->span),
                        entries[j].first);
        scope.pop_back();
      }
      return body;
    }

    case SKind::Arrow:
    case SKind::Times: {
      Tag tag = s->kind == SKind::Arrow ? Tag::Pi : Tag::Sigma;
      TermPtr dom = resolve(s->args[0]);
      scope.push_back("");
      TermPtr cod = resolve(s->args[1]);
      scope.pop_back();
      return mk(tag, {dom, cod}, s->span);
    }

    case SKind::SumS:
      return mk(Tag::Sum, {resolve(s->args[0]), resolve(s->args[1])},
                s->span);

    case SKind::App: {
      const STermPtr &f = s->args[0];
      if (isProjection(f)) {
        if (f->hasLevels)
          err(f->span, "'" + f->name + "' takes no level arguments");
        return mk(f->name == "pr1" ? Tag::Pr1 : Tag::Pr2,
                  {resolve(s->args[1])}, s->span);
      }
      return mk(Tag::App, {resolve(f), resolve(s->args[1])}, s->span);
    }

    case SKind::PairS:
      return mk(Tag::Pair, {resolve(s->args[0]), resolve(s->args[1])},
                s->span);

    case SKind::EqIn: // a = b in A  ⇒  Id A a b
      return mk(Tag::Id,
                {resolve(s->args[2]), resolve(s->args[0]),
                 resolve(s->args[1])},
                s->span);

    case SKind::Former: {
      std::vector<TermPtr> kids;
      switch (s->former) {
      case Tag::J:
        kids.push_back(resolve(s->args[0]));
        kids.push_back(resolve(s->args[1]));
        kids.push_back(motiveBody(s->args[2], 2));
        kids.push_back(resolve(s->args[3]));
        kids.push_back(resolve(s->args[4]));
        kids.push_back(resolve(s->args[5]));
        break;
      case Tag::NatInd:
      case Tag::SumInd:
      case Tag::UnitInd:
        kids.push_back(motiveBody(s->args[0], 1));
        for (size_t k = 1; k < s->args.size(); ++k)
          kids.push_back(resolve(s->args[k]));
        break;
      default: // Id, Refl, Suc, Inl, Inr, Absurd: direct children
        for (auto &a : s->args)
          kids.push_back(resolve(a));
        break;
      }
      return mk(s->former, std::move(kids), s->span);
    }
    }
    throw KernelBug("unhandled surface node");
  }

  // An eliminator motive is stored as a body under k binders.  A literal
  // λ-prefix is peeled; whatever is missing is made up by applying the
  // resolved remainder to the fresh variables.
  TermPtr motiveBody(const STermPtr &m, int k) {
    std::vector<std::string> names;
    STermPtr cur = m;
    while ((int)names.size() < k && cur->kind == SKind::Lambda) {
      std::vector<std::pair<std::string, STermPtr>> flat;
      for (auto &b : cur->binders)
        for (auto &n : b.names)
          flat.emplace_back(n, b.type);
      size_t need = k - names.size();
      if (flat.size() <= need) {
        for (auto &p : flat)
          names.push_back(p.first);
        cur = cur->args[0];
      } else {
        for (size_t j = 0; j < need; ++j)
          names.push_back(flat[j].first);
        auto rest = std::make_shared<STerm>();
        rest->kind = SKind::Lambda;
        rest->span = cur->span;
        for (size_t j = need; j < flat.size(); ++j) {
          SBinder b;
          b.names.push_back(flat[j].first);
          b.type = flat[j].second;
          b.span = cur->span;
          rest->binders.push_back(std::move(b));
        }
        rest->args = {cur->args[0]};
        cur = rest;
      }
    }
    int dummies = 0;
    while ((int)names.size() < k) {
      names.push_back("");
      ++dummies;
    }
    for (auto &n : names)
      scope.push_back(n);
    TermPtr body = resolve(cur);
    for (int j = dummies; j-- > 0;)
      body = mk(Tag::App, {body, mkVar(j, m->span)}, m->span);
    for (int j = 0; j < k; ++j)
      scope.pop_back();
    return body;
  }
};

} // namespace

Declaration resolveDecl(const GlobalEnv &g, const SDecl &d,
                        const std::string &file) {
  Resolver r{g, std::set<std::string>(d.levelParams.begin(),
                                      d.levelParams.end()),
             {}};
  std::vector<std::pair<std::string, TermPtr>> entries;
  for (auto &b : d.binders) {
    if (!b.type)
      throw CheckError{"parse", b.span, "declaration binders must be typed",
                       "", ""};
    for (auto &n : b.names) {
      TermPtr dom = r.resolve(b.type);
      r.scope.push_back(n);
      entries.emplace_back(n, dom);
    }
  }
  TermPtr type = r.resolve(d.type);
  TermPtr body = d.body ? r.resolve(d.body) : nullptr;
  for (size_t j = entries.size(); j-- > 0;) {
    type = withHint(mk(Tag::Pi, {entries[j].second, type}, d.span),
                    entries[j].first);
    if (body)
      body = withHint(mk(Tag::Lam, {body, entries[j].second}, d.span),
                      entries[j].first);
  }
  Declaration out;
  out.name = d.name;
  out.levelParams = d.levelParams;
  out.type = type;
  out.body = body;
  out.file = file;
  out.span = d.span;
  return out;
}

} // namespace uvk
