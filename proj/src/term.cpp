#include "uvk/term.hpp"

namespace uvk {

TermPtr mk(Tag tag, std::vector<TermPtr> kids, Span span) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->kids = std::move(kids);
  t->span = span;
  return t;
}

TermPtr mkVar(int idx, Span span) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Var;
  t->idx = idx;
  t->span = span;
  return t;
}

TermPtr mkGlobal(std::string name, std::vector<LevelPtr> levels, Span span) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Global;
  t->name = std::move(name);
  t->levels = std::move(levels);
  t->span = span;
  return t;
}

TermPtr mkUniverse(LevelPtr level, Span span) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Universe;
  t->levels = {std::move(level)};
  t->span = span;
  return t;
}

TermPtr mkLeveled(Tag tag, LevelPtr level, Span span) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->levels = {std::move(level)};
  t->span = span;
  return t;
}

TermPtr withHint(TermPtr t, std::string hint) {
  auto c = std::make_shared<Term>(*t);
  c->hint = std::move(hint);
  return c;
}

bool termEqual(const TermPtr &a, const TermPtr &b) {
  if (a.get() == b.get())
    return true;
  if (a->tag != b->tag)
    return false;
  switch (a->tag) {
  case Tag::Var:
    if (a->idx != b->idx)
      return false;
    break;
  case Tag::Global:
    if (a->name != b->name)
      return false;
    break;
  default:
    break;
  }
  if (a->levels.size() != b->levels.size())
    return false;
  for (size_t i = 0; i < a->levels.size(); ++i)
    if (!levelEqual(a->levels[i], b->levels[i]))
      return false;
  if (a->kids.size() != b->kids.size())
    return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!termEqual(a->kids[i], b->kids[i]))
      return false;
  return true;
}

TermPtr substLevelsTerm(const TermPtr &t,
                        const std::map<std::string, LevelPtr> &subst) {
  auto c = std::make_shared<Term>(*t);
  for (auto &l : c->levels)
    l = substituteLevel(l, subst);
  for (auto &k : c->kids)
    k = substLevelsTerm(k, subst);
  return c;
}

void collectGlobals(const TermPtr &t, std::vector<std::string> &out) {
  if (t->tag == Tag::Global)
    out.push_back(t->name);
  for (auto &k : t->kids)
    collectGlobals(k, out);
}

} // namespace uvk
