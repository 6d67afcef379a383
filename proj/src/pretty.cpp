#include "uvk/pretty.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace uvk {

namespace {

bool usesVar(const TermPtr &t, int idx) {
  switch (t->tag) {
  case Tag::Var:
    return t->idx == idx;
  case Tag::Pi:
  case Tag::Sigma:
    return usesVar(t->kids[0], idx) || usesVar(t->kids[1], idx + 1);
  case Tag::Lam:
    if (usesVar(t->kids[0], idx + 1))
      return true;
    return t->kids.size() > 1 && usesVar(t->kids[1], idx);
  case Tag::J: {
    for (size_t i = 0; i < t->kids.size(); ++i)
      if (usesVar(t->kids[i], idx + (i == 2 ? 2 : 0)))
        return true;
    return false;
  }
  case Tag::NatInd:
  case Tag::SumInd:
  case Tag::UnitInd: {
    for (size_t i = 0; i < t->kids.size(); ++i)
      if (usesVar(t->kids[i], idx + (i == 0 ? 1 : 0)))
        return true;
    return false;
  }
  default:
    for (auto &k : t->kids)
      if (usesVar(k, idx))
        return true;
    return false;
  }
}

std::string freshen(const std::vector<std::string> &scope, std::string hint) {
  if (hint.empty() || hint == "_")
    hint = "x";
  std::string cand = hint;
  int n = 0;
  while (std::find(scope.begin(), scope.end(), cand) != scope.end())
    cand = hint + std::to_string(++n);
  return cand;
}

std::string levelAtom(const LevelPtr &l) {
  std::string s = showLevel(l);
  if (l->kind == LevelExpr::Max)
    return "(" + s + ")";
  return s;
}

bool zeroLevel(const LevelPtr &l) { return normalizeLevel(l) == LevelNF{}; }

struct Printer {
  std::ostringstream os;
  std::vector<std::string> scope;

  void paren(bool need, const std::function<void()> &f) {
    if (need)
      os << "(";
    f();
    if (need)
      os << ")";
  }

  // prec: 0 binder bodies, 1 arrow, 2 sum, 3 product, 4 application, 5 atom
  void print(const TermPtr &t, int prec) {
    switch (t->tag) {
    case Tag::Var: {
      int i = (int)scope.size() - 1 - t->idx;
      if (i >= 0 && i < (int)scope.size())
        os << scope[i];
      else
        os << "#" << t->idx;
      return;
    }
    case Tag::Global: {
      os << t->name;
      if (!t->levels.empty()) {
        os << " [";
        for (size_t i = 0; i < t->levels.size(); ++i)
          os << (i ? " " : "") << levelAtom(t->levels[i]);
        os << "]";
      }
      return;
    }
    case Tag::Universe:
      paren(prec > 4, [&] { os << "U " << levelAtom(t->levels[0]); });
      return;
    case Tag::Empty:
    case Tag::Unit: {
      const char *name = t->tag == Tag::Empty ? "0" : "1";
      if (zeroLevel(t->levels[0]))
        os << name;
      else
        os << name << " [" << levelAtom(t->levels[0]) << "]";
      return;
    }
    case Tag::Nat:
      os << "Nat";
      return;
    case Tag::Zero:
      os << "zero";
      return;
    case Tag::Star:
      os << "star";
      return;
    case Tag::Pi: {
      bool dep = usesVar(t->kids[1], 0);
      if (!dep) {
        paren(prec > 1, [&] {
          print(t->kids[0], 2);
          os << " → ";
          scope.push_back("_");
          print(t->kids[1], 1);
          scope.pop_back();
        });
        return;
      }
      paren(prec > 0, [&] {
        std::string n = freshen(scope, t->hint);
        os << "Π (" << n << " : ";
        print(t->kids[0], 0);
        os << "), ";
        scope.push_back(n);
        print(t->kids[1], 0);
        scope.pop_back();
      });
      return;
    }
    case Tag::Sigma: {
      bool dep = usesVar(t->kids[1], 0);
      if (!dep) {
        paren(prec > 3, [&] {
          print(t->kids[0], 4);
          os << " × ";
          scope.push_back("_");
          print(t->kids[1], 3);
          scope.pop_back();
        });
        return;
      }
      paren(prec > 0, [&] {
        std::string n = freshen(scope, t->hint);
        os << "Σ (" << n << " : ";
        print(t->kids[0], 0);
        os << "), ";
        scope.push_back(n);
        print(t->kids[1], 0);
        scope.pop_back();
      });
      return;
    }
    case Tag::Sum:
      paren(prec > 2, [&] {
        print(t->kids[0], 3);
        os << " + ";
        print(t->kids[1], 2);
      });
      return;
    case Tag::Lam:
      paren(prec > 0, [&] {
        std::string n = freshen(scope, t->hint);
        os << "λ " << n << ", ";
        scope.push_back(n);
        print(t->kids[0], 0);
        scope.pop_back();
      });
      return;
    case Tag::App:
      paren(prec > 4, [&] {
        print(t->kids[0], 4);
        os << " ";
        print(t->kids[1], 5);
      });
      return;
    case Tag::Pair:
      os << "(";
      print(t->kids[0], 0);
      os << ", ";
      print(t->kids[1], 0);
      os << ")";
      return;
    case Tag::Pr1:
    case Tag::Pr2:
      paren(prec > 4, [&] {
        os << (t->tag == Tag::Pr1 ? "pr1 " : "pr2 ");
        print(t->kids[0], 5);
      });
      return;
    case Tag::Inl:
    case Tag::Inr:
      paren(prec > 4, [&] {
        os << (t->tag == Tag::Inl ? "inl " : "inr ");
        print(t->kids[0], 5);
      });
      return;
    case Tag::Suc:
      paren(prec > 4, [&] {
        os << "suc ";
        print(t->kids[0], 5);
      });
      return;
    case Tag::Id:
      paren(prec > 4, [&] {
        os << "Id ";
        print(t->kids[0], 5);
        os << " ";
        print(t->kids[1], 5);
        os << " ";
        print(t->kids[2], 5);
      });
      return;
    case Tag::Refl:
      paren(prec > 4, [&] {
        os << "refl ";
        print(t->kids[0], 5);
        os << " ";
        print(t->kids[1], 5);
      });
      return;
    case Tag::Absurd:
      paren(prec > 4, [&] {
        os << "absurd ";
        print(t->kids[0], 5);
        os << " ";
        print(t->kids[1], 5);
      });
      return;
    case Tag::UnitInd:
    case Tag::NatInd:
    case Tag::SumInd: {
      const char *kw = t->tag == Tag::UnitInd  ? "unitInd"
                       : t->tag == Tag::NatInd ? "natInd"
                                               : "sumInd";
      paren(prec > 4, [&] {
        os << kw << " ";
        std::string n = freshen(scope, t->tag == Tag::NatInd ? "n" : "z");
        os << "(λ " << n << ", ";
        scope.push_back(n);
        print(t->kids[0], 0);
        scope.pop_back();
        os << ")";
        for (size_t i = 1; i < t->kids.size(); ++i) {
          os << " ";
          print(t->kids[i], 5);
        }
      });
      return;
    }
    case Tag::J:
      paren(prec > 4, [&] {
        os << "J ";
        print(t->kids[0], 5);
        os << " ";
        print(t->kids[1], 5);
        std::string y = freshen(scope, "y");
        std::string p = freshen(scope, "p");
        os << " (λ " << y << " " << p << ", ";
        scope.push_back(y);
        scope.push_back(p);
        print(t->kids[2], 0);
        scope.pop_back();
        scope.pop_back();
        os << ")";
        for (size_t i = 3; i < t->kids.size(); ++i) {
          os << " ";
          print(t->kids[i], 5);
        }
      });
      return;
    }
  }
};

} // namespace

std::string prettyTerm(const TermPtr &t, std::vector<std::string> scope) {
  Printer p;
  p.scope = std::move(scope);
  p.print(t, 0);
  return p.os.str();
}

std::string prettyTypeValue(const GlobalEnv &g, int depth, const ValuePtr &v,
                            std::vector<std::string> scope) {
  while ((int)scope.size() < depth)
    scope.push_back("x" + std::to_string(scope.size()));
  return prettyTerm(readbackType(g, depth, v), std::move(scope));
}

} // namespace uvk
