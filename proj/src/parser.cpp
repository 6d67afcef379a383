#include "uvk/syntax.hpp"

namespace uvk {

namespace {

struct FormerInfo {
  Tag tag;
  int arity;
};

bool formerFor(Tok k, FormerInfo &out) {
  switch (k) {
  case Tok::KwId: out = {Tag::Id, 3}; return true;
  case Tok::KwRefl: out = {Tag::Refl, 2}; return true;
  case Tok::KwJ: out = {Tag::J, 6}; return true;
  case Tok::KwNatInd: out = {Tag::NatInd, 4}; return true;
  case Tok::KwSumInd: out = {Tag::SumInd, 4}; return true;
  case Tok::KwUnitInd: out = {Tag::UnitInd, 3}; return true;
  case Tok::KwAbsurd: out = {Tag::Absurd, 2}; return true;
  case Tok::KwSuc: out = {Tag::Suc, 1}; return true;
  case Tok::KwInl: out = {Tag::Inl, 1}; return true;
  case Tok::KwInr: out = {Tag::Inr, 1}; return true;
  default: return false;
  }
}

std::shared_ptr<STerm> node(SKind kind, Span span) {
  auto t = std::make_shared<STerm>();
  t->kind = kind;
  t->span = span;
  return t;
}

struct Parser {
  const std::vector<Token> &ts;
  size_t i = 0;

  explicit Parser(const std::vector<Token> &toks) : ts(toks) {}

  const Token &cur() const { return ts[i]; }
  bool at(Tok k) const { return cur().kind == k; }

  [[noreturn]] void err(const std::string &msg) const {
    throw CheckError{"parse", cur().span, msg, "", ""};
  }

  Token take() { return ts[i++]; }

  Token expect(Tok k, const char *what) {
    if (!at(k))
      err(std::string("expected ") + what);
    return take();
  }

  // ---- levels ----

  LevelPtr levelAtom() {
    LevelPtr base;
    if (at(Tok::Ident)) {
      base = lvar(take().text);
    } else if (at(Tok::Number)) {
      Token t = take();
      if (t.text != "0")
        throw CheckError{"parse", t.span, "the only level literal is 0", "",
                         ""};
      base = lzero();
    } else if (at(Tok::LParen)) {
      take();
      base = levelExpr();
      expect(Tok::RParen, "')' after level expression");
    } else {
      err("expected a level");
    }
    while (at(Tok::LevelSuc)) {
      take();
      base = lsuc(base);
    }
    return base;
  }

  LevelPtr levelExpr() {
    LevelPtr a = levelAtom();
    while (at(Tok::Join)) {
      take();
      a = lmax(a, levelAtom());
    }
    return a;
  }

  // ---- terms ----

  bool atAtomStart() const {
    switch (cur().kind) {
    case Tok::Ident:
    case Tok::Number:
    case Tok::KwNat:
    case Tok::KwZero:
    case Tok::KwStar:
    case Tok::KwU:
    case Tok::LParen:
      return true;
    default:
      return false;
    }
  }

  STermPtr atom() {
    Span sp = cur().span;
    switch (cur().kind) {
    case Tok::Ident: {
      auto t = node(SKind::Ident, sp);
      t->name = take().text;
      if (at(Tok::LBracket)) {
        take();
        t->hasLevels = true;
        while (!at(Tok::RBracket))
          t->levels.push_back(levelExpr());
        take();
      }
      return t;
    }
    case Tok::Number: {
      Token tk = take();
      if (tk.text != "0" && tk.text != "1")
        throw CheckError{"parse", tk.span,
                         "only 0 and 1 name types; other numerals have no "
                         "meaning here",
                         "", ""};
      auto t = node(SKind::TypeNum, sp);
      t->num = tk.text == "1" ? 1 : 0;
      if (at(Tok::LBracket)) {
        take();
        t->hasLevels = true;
        t->levels.push_back(levelExpr());
        expect(Tok::RBracket, "']' after the level argument");
      }
      return t;
    }
    case Tok::KwNat:
      take();
      return node(SKind::NatS, sp);
    case Tok::KwZero:
      take();
      return node(SKind::ZeroS, sp);
    case Tok::KwStar:
      take();
      return node(SKind::StarS, sp);
    case Tok::KwU: {
      take();
      auto t = node(SKind::Univ, sp);
      t->levels.push_back(levelAtom());
      t->hasLevels = true;
      return t;
    }
    case Tok::LParen: {
      take();
      STermPtr t = term();
      if (at(Tok::Comma)) {
        std::vector<STermPtr> elems{t};
        while (at(Tok::Comma)) {
          take();
          elems.push_back(term());
        }
        expect(Tok::RParen, "')' after pair components");
        STermPtr acc = elems.back();
        for (size_t k = elems.size() - 1; k-- > 0;) {
          auto p = node(SKind::PairS, sp);
          p->args = {elems[k], acc};
          acc = p;
        }
        return acc;
      }
      expect(Tok::RParen, "')'");
      return t;
    }
    default: {
      FormerInfo fi;
      if (formerFor(cur().kind, fi))
        err("'" + cur().text + "' must be parenthesized in argument position");
      err("expected a term");
    }
    }
  }

  STermPtr application() {
    Span sp = cur().span;
    STermPtr head;
    FormerInfo fi;
    if (formerFor(cur().kind, fi)) {
      take();
      auto f = node(SKind::Former, sp);
      f->former = fi.tag;
      for (int k = 0; k < fi.arity; ++k)
        f->args.push_back(atom());
      head = f;
    } else {
      head = atom();
    }
    while (atAtomStart()) {
      auto a = node(SKind::App, sp);
      a->args = {head, atom()};
      head = a;
    }
    return head;
  }

  STermPtr timesT() {
    Span sp = cur().span;
    STermPtr l = application();
    if (at(Tok::Times)) {
      take();
      auto t = node(SKind::Times, sp);
      t->args = {l, timesT()};
      return t;
    }
    return l;
  }

  STermPtr sumT() {
    Span sp = cur().span;
    STermPtr l = timesT();
    if (at(Tok::Plus)) {
      take();
      auto t = node(SKind::SumS, sp);
      t->args = {l, sumT()};
      return t;
    }
    return l;
  }

  STermPtr arrow() {
    Span sp = cur().span;
    STermPtr l = sumT();
    if (at(Tok::Arrow)) {
      take();
      auto t = node(SKind::Arrow, sp);
      t->args = {l, term()}; // codomains may open new binders
      return t;
    }
    return l;
  }

  STermPtr eqIn() {
    Span sp = cur().span;
    STermPtr a = arrow();
    if (at(Tok::Eq)) {
      take();
      STermPtr b = arrow();
      expect(Tok::KwIn, "'in' naming the type of the two sides");
      STermPtr A = term(); // the type side extends as far as possible
      auto t = node(SKind::EqIn, sp);
      t->args = {a, b, A};
      return t;
    }
    return a;
  }

  SBinder binderGroup() {
    SBinder b;
    b.span = cur().span;
    expect(Tok::LParen, "'('");
    while (at(Tok::Ident))
      b.names.push_back(take().text);
    if (b.names.empty())
      err("expected at least one bound name");
    expect(Tok::Colon, "':' between bound names and their type");
    b.type = term();
    expect(Tok::RParen, "')' closing the binder");
    return b;
  }

  STermPtr term() {
    Span sp = cur().span;
    if (at(Tok::Lambda)) {
      take();
      auto t = node(SKind::Lambda, sp);
      while (at(Tok::Ident) || at(Tok::LParen)) {
        if (at(Tok::Ident)) {
          SBinder b;
          b.span = cur().span;
          b.names.push_back(take().text);
          t->binders.push_back(std::move(b));
        } else {
          t->binders.push_back(binderGroup());
        }
      }
      if (t->binders.empty())
        err("λ needs at least one bound name");
      expect(Tok::Comma, "',' after λ binders");
      t->args = {term()};
      return t;
    }
    if (at(Tok::PiTok) || at(Tok::SigmaTok)) {
      bool isPi = take().kind == Tok::PiTok;
      auto t = node(isPi ? SKind::PiB : SKind::SigmaB, sp);
      while (at(Tok::LParen))
        t->binders.push_back(binderGroup());
      if (t->binders.empty())
        err(isPi ? "Π needs a typed binder" : "Σ needs a typed binder");
      expect(Tok::Comma, "',' after binders");
      t->args = {term()};
      return t;
    }
    return eqIn();
  }

  // ---- declarations ----

  SDecl decl() {
    SDecl d;
    if (at(Tok::KwDef))
      d.isPostulate = false;
    else if (at(Tok::KwPostulate))
      d.isPostulate = true;
    else
      err("expected 'def' or 'postulate'");
    take();
    Token name = expect(Tok::Ident, "a declaration name");
    d.name = name.text;
    d.span = name.span;
    if (at(Tok::LBracket)) {
      take();
      while (at(Tok::Ident))
        d.levelParams.push_back(take().text);
      if (d.levelParams.empty())
        err("expected level parameter names");
      expect(Tok::RBracket, "']' after level parameters");
    }
    while (at(Tok::LParen))
      d.binders.push_back(binderGroup());
    expect(Tok::Colon, "':' before the declared type");
    d.type = term();
    if (d.isPostulate) {
      if (at(Tok::ColonEq))
        err("a postulate has no body");
    } else {
      expect(Tok::ColonEq, "':=' and a body (only postulates omit one)");
      d.body = term();
    }
    return d;
  }

  std::vector<SDecl> file() {
    std::vector<SDecl> ds;
    while (!at(Tok::End))
      ds.push_back(decl());
    return ds;
  }
};

} // namespace

std::vector<SDecl> parseFile(const std::string &text) {
  std::vector<Token> toks = tokenize(text);
  Parser p(toks);
  return p.file();
}

} // namespace uvk
