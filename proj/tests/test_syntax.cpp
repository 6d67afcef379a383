#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uvk/check.hpp"
#include "uvk/syntax.hpp"

using namespace uvk;

static TermPtr v(int i) { return mkVar(i); }
static TermPtr lam(TermPtr body) { return mk(Tag::Lam, {std::move(body)}); }
static TermPtr lamA(TermPtr body, TermPtr annot) {
  return mk(Tag::Lam, {std::move(body), std::move(annot)});
}
static TermPtr app(TermPtr f, TermPtr a) {
  return mk(Tag::App, {std::move(f), std::move(a)});
}
static TermPtr natT() { return mk(Tag::Nat); }
static TermPtr pi(TermPtr d, TermPtr c) {
  return mk(Tag::Pi, {std::move(d), std::move(c)});
}
static TermPtr sig(TermPtr d, TermPtr c) {
  return mk(Tag::Sigma, {std::move(d), std::move(c)});
}

// parse + resolve a single declaration against an empty global environment
static Declaration one(const std::string &src) {
  GlobalEnv g;
  auto ds = parseFile(src);
  REQUIRE(ds.size() == 1);
  return resolveDecl(g, ds[0], "t.uv");
}

static std::string failCategory(const std::string &src) {
  GlobalEnv g;
  try {
    auto ds = parseFile(src);
    for (auto &d : ds) {
      Declaration r = resolveDecl(g, d, "t.uv");
      checkDeclaration(g, r);
    }
  } catch (const CheckError &e) {
    return e.category;
  }
  return "";
}

TEST_CASE("binders elaborate to indices and annotated abstractions") {
  Declaration d = one("def idfun [u] (A : U u) (x : A) : A := x");
  CHECK(d.levelParams == std::vector<std::string>{"u"});
  CHECK(termEqual(d.type, pi(mkUniverse(lvar("u")), pi(v(0), v(1)))));
  CHECK(termEqual(d.body, lamA(lamA(v(0), v(0)), mkUniverse(lvar("u")))));
}

TEST_CASE("untyped λ binders and grouped names") {
  Declaration d = one("def k : Nat -> Nat -> Nat := \\ m n, m");
  CHECK(termEqual(d.type, pi(natT(), pi(natT(), natT()))));
  CHECK(termEqual(d.body, lam(lam(v(1)))));

  Declaration d2 = one("def s : Π (m n : ℕ), ℕ := λ (m n : ℕ), n");
  CHECK(termEqual(d2.type, pi(natT(), pi(natT(), natT()))));
  CHECK(termEqual(d2.body, lamA(lamA(v(0), natT()), natT())));
}

TEST_CASE("operator precedence and associativity") {
  // × binds tighter than +, + tighter than →; all right-associative
  Declaration d = one("def T : U 0 := ℕ + ℕ × ℕ");
  CHECK(termEqual(d.body, mk(Tag::Sum, {natT(), sig(natT(), natT())})));

  Declaration d2 = one("def T : U 0 := (ℕ + ℕ) × ℕ");
  CHECK(termEqual(d2.body, sig(mk(Tag::Sum, {natT(), natT()}), natT())));

  Declaration d3 = one("def T : U 0 := ℕ + ℕ → ℕ");
  CHECK(termEqual(d3.body, pi(mk(Tag::Sum, {natT(), natT()}), natT())));

  Declaration d4 = one("def T : U 0 := ℕ → ℕ → ℕ");
  CHECK(termEqual(d4.body, pi(natT(), pi(natT(), natT()))));

  // application is left-associative and tighter than ×
  Declaration d5 =
      one("def T (F : ℕ → ℕ → U 0) : U 0 := F zero zero × ℕ");
  CHECK(termEqual(d5.body,
                  lamA(sig(app(app(v(0), mk(Tag::Zero)), mk(Tag::Zero)),
                           natT()),
                       pi(natT(), pi(natT(), mkUniverse(lzero()))))));
}

TEST_CASE("identity sugar and pairs") {
  Declaration d = one("def E (x : ℕ) : U 0 := x = zero in ℕ");
  CHECK(termEqual(d.body,
                  lamA(mk(Tag::Id, {natT(), v(0), mk(Tag::Zero)}), natT())));

  // the type side of `in` extends through arrows without parentheses
  Declaration d2 =
      one("def E (f g : ℕ → ℕ) : U 0 := f = g in ℕ → ℕ");
  CHECK(termEqual(
      d2.body,
      lamA(lamA(mk(Tag::Id, {pi(natT(), natT()), v(1), v(0)}),
                pi(natT(), natT())),
           pi(natT(), natT()))));

  Declaration d3 = one("def p : ℕ × ℕ × ℕ := (zero, zero, zero)");
  CHECK(termEqual(d3.body,
                  mk(Tag::Pair, {mk(Tag::Zero),
                                 mk(Tag::Pair,
                                    {mk(Tag::Zero), mk(Tag::Zero)})})));

  Declaration d4 =
      one("def sw : ℕ × ℕ → ℕ × ℕ := λ p, (pr2 p, pr1 p)");
  CHECK(termEqual(d4.body, lam(mk(Tag::Pair, {mk(Tag::Pr2, {v(0)}),
                                              mk(Tag::Pr1, {v(0)})}))));
}

TEST_CASE("type constants carry levels") {
  Declaration d = one("def T [u v] : U ((u ⊔ v) ⁺) := 1 [u] + 0 [v]");
  CHECK(termEqual(d.type,
                  mkUniverse(lsuc(lmax(lvar("u"), lvar("v"))))));
  CHECK(termEqual(d.body, mk(Tag::Sum, {mkLeveled(Tag::Unit, lvar("u")),
                                        mkLeveled(Tag::Empty, lvar("v"))})));

  // bare 0/1 default to the bottom level; ASCII aliases for ⊔ and ⁺
  Declaration d2 = one("def T [u v] : U ((u \\/ v) ^+) := 1 + 0");
  CHECK(termEqual(d2.type, d.type));
  CHECK(termEqual(d2.body, mk(Tag::Sum, {mkLeveled(Tag::Unit, lzero()),
                                         mkLeveled(Tag::Empty, lzero())})));
}

TEST_CASE("eliminator motives become binder bodies") {
  // literal λ motive is peeled
  Declaration d = one(
      "def two : ℕ := natInd (λ n, ℕ) zero (λ k r, suc r) (suc zero)");
  CHECK(termEqual(d.body,
                  mk(Tag::NatInd,
                     {natT(), mk(Tag::Zero),
                      lam(lam(mk(Tag::Suc, {v(0)}))),
                      mk(Tag::Suc, {mk(Tag::Zero)})})));

  // a non-λ motive is applied to the fresh variable instead
  Declaration d2 = one(
      "def two (M : ℕ → U 0) (z : M zero) (s : Π (k : ℕ), M k → M (suc k))"
      " : M (suc zero) := natInd M z s (suc zero)");
  TermPtr motive = app(v(3), v(0)); // M applied to the bound number
  CHECK(termEqual(
      d2.body,
      lamA(lamA(lamA(mk(Tag::NatInd,
                        {motive, v(1), v(0), mk(Tag::Suc, {mk(Tag::Zero)})}),
                     pi(natT(), pi(app(v(2), v(0)),
                                   app(v(3), mk(Tag::Suc, {v(1)}))))),
                app(v(0), mk(Tag::Zero))),
           pi(natT(), mkUniverse(lzero())))));

  // J takes a two-binder motive
  Declaration d3 = one(
      "def sym (x y : ℕ) (p : x = y in ℕ) : y = x in ℕ"
      " := J ℕ x (λ y' p', y' = x in ℕ) (refl ℕ x) y p");
  TermPtr jterm = mk(Tag::J, {natT(), v(2), mk(Tag::Id, {natT(), v(1), v(4)}),
                              mk(Tag::Refl, {natT(), v(2)}), v(1), v(0)});
  CHECK(termEqual(d3.body,
                  lamA(lamA(lamA(jterm, mk(Tag::Id, {natT(), v(1), v(0)})),
                            natT()),
                       natT())));
}

TEST_CASE("comments and whitespace") {
  Declaration d = one("-- a comment\n"
                      "def x -- trailing\n"
                      "  : ℕ   -- more\n"
                      "  := zero\n");
  CHECK(d.name == "x");
  CHECK(termEqual(d.body, mk(Tag::Zero)));
}

TEST_CASE("failure categories at the surface") {
  CHECK(failCategory("def x : U 0 := mystery") == "unbound");
  CHECK(failCategory("def x : ℕ := λ") == "parse");
  CHECK(failCategory("def x : ℕ := suc suc zero") == "parse");
  CHECK(failCategory("def x : ℕ :=") == "parse");
  CHECK(failCategory("postulate x : ℕ := zero") == "parse");
  CHECK(failCategory("def x : ℕ := b $ c") == "lex");
  CHECK(failCategory("def x : ℕ := zero - zero") == "lex");
  CHECK(failCategory("def f [u] (A : U u) : U u := A\n"
                     "def y : U 0 := f ℕ") == "unbound"); // level arity
  CHECK(failCategory("def f [u] (A : U u) : U u := A\n"
                     "def y : U 0 := f [0 0] ℕ") == "unbound");
  CHECK(failCategory("def x [u] : U u := U v") == "unbound"); // level var
  CHECK(failCategory("def x : ℕ := zero\ndef x : ℕ := zero") ==
        "duplicate-name");
  CHECK(failCategory("def x : ℕ := pr1") == "unbound");
  CHECK(failCategory("def x (p : ℕ × ℕ) : ℕ := pr1 p") == "");
}

TEST_CASE("keep-going reports independent failures and spans name lines") {
  GlobalEnv g;
  std::string src = "def a : ℕ := zero\n"
                    "def b : ℕ := missing\n"
                    "def c : ℕ := suc (suc zero)\n";
  CheckOutcome out = checkSource(g, "t.uv", src, true);
  CHECK(out.checkedNames == std::vector<std::string>{"a", "c"});
  REQUIRE(out.diagnostics.size() == 1);
  CHECK(out.diagnostics[0].category == "unbound");
  CHECK(out.diagnostics[0].declaration == "b");
  CHECK(out.diagnostics[0].span.line == 2);

  GlobalEnv g2;
  CheckOutcome strict = checkSource(g2, "t.uv", src, false);
  CHECK(strict.checkedNames == std::vector<std::string>{"a"});
}
