#include "uvk/level.hpp"

#include <algorithm>
#include <sstream>

namespace uvk {

LevelPtr lvar(const std::string &name) {
  auto e = std::make_shared<LevelExpr>();
  e->kind = LevelExpr::Var;
  e->name = name;
  return e;
}

LevelPtr lzero() {
  auto e = std::make_shared<LevelExpr>();
  e->kind = LevelExpr::Zero;
  return e;
}

LevelPtr lsuc(LevelPtr a) {
  auto e = std::make_shared<LevelExpr>();
  e->kind = LevelExpr::Suc;
  e->a = std::move(a);
  return e;
}

LevelPtr lmax(LevelPtr a, LevelPtr b) {
  auto e = std::make_shared<LevelExpr>();
  e->kind = LevelExpr::Max;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

LevelNF nfSuc(const LevelNF &n) {
  LevelNF r;
  r.constant = n.constant + 1;
  for (auto &[v, k] : n.atoms)
    r.atoms[v] = k + 1;
  return r;
}

LevelNF nfMax(const LevelNF &a, const LevelNF &b) {
  LevelNF r = a;
  r.constant = std::max(a.constant, b.constant);
  for (auto &[v, k] : b.atoms) {
    auto it = r.atoms.find(v);
    if (it == r.atoms.end())
      r.atoms[v] = k;
    else
      it->second = std::max(it->second, k);
  }
  return r;
}

LevelNF normalizeLevel(const LevelPtr &e) {
  switch (e->kind) {
  case LevelExpr::Var: {
    LevelNF r;
    r.atoms[e->name] = 0;
    return r;
  }
  case LevelExpr::Zero:
    return LevelNF{};
  case LevelExpr::Suc:
    return nfSuc(normalizeLevel(e->a));
  case LevelExpr::Max:
    return nfMax(normalizeLevel(e->a), normalizeLevel(e->b));
  }
  return LevelNF{};
}

bool levelEqual(const LevelPtr &a, const LevelPtr &b) {
  return normalizeLevel(a) == normalizeLevel(b);
}

LevelPtr substituteLevel(const LevelPtr &e,
                         const std::map<std::string, LevelPtr> &subst) {
  switch (e->kind) {
  case LevelExpr::Var: {
    auto it = subst.find(e->name);
    return it == subst.end() ? e : it->second;
  }
  case LevelExpr::Zero:
    return e;
  case LevelExpr::Suc:
    return lsuc(substituteLevel(e->a, subst));
  case LevelExpr::Max:
    return lmax(substituteLevel(e->a, subst), substituteLevel(e->b, subst));
  }
  return e;
}

long evalLevel(const LevelNF &nf, const std::map<std::string, long> &rho) {
  long r = nf.constant;
  for (auto &[v, k] : nf.atoms) {
    auto it = rho.find(v);
    long val = it == rho.end() ? 0 : it->second;
    r = std::max(r, val + k);
  }
  return r;
}

LevelPtr embedNF(const LevelNF &nf) {
  auto iter = [](LevelPtr base, long n) {
    for (long i = 0; i < n; ++i)
      base = lsuc(base);
    return base;
  };
  // Atoms come out of the sorted map, so the result is canonical.  The
  // constant component is dropped only when some atom's shift already
  // dominates it (the normalizer guarantees shift <= constant, so this
  // means shift == constant for the largest shift).
  LevelPtr acc;
  long maxShift = -1;
  for (auto &[v, k] : nf.atoms) {
    maxShift = std::max(maxShift, k);
    auto at = iter(lvar(v), k);
    acc = acc ? lmax(acc, at) : at;
  }
  if (!acc || nf.constant > maxShift) {
    auto c = iter(lzero(), nf.constant);
    acc = acc ? lmax(c, acc) : c;
  }
  return acc;
}

std::vector<std::string> levelVars(const LevelPtr &e) {
  LevelNF nf = normalizeLevel(e);
  std::vector<std::string> out;
  for (auto &[v, k] : nf.atoms) {
    (void)k;
    out.push_back(v);
  }
  return out;
}

static void showRec(const LevelPtr &e, std::ostream &os, bool atom) {
  switch (e->kind) {
  case LevelExpr::Var:
    os << e->name;
    return;
  case LevelExpr::Zero:
    os << "0";
    return;
  case LevelExpr::Suc:
    showRec(e->a, os, true);
    os << " ⁺";
    return;
  case LevelExpr::Max:
    if (atom)
      os << "(";
    showRec(e->a, os, true);
    os << " ⊔ ";
    showRec(e->b, os, true);
    if (atom)
      os << ")";
    return;
  }
}

std::string showLevel(const LevelPtr &e) {
  std::ostringstream os;
  showRec(e, os, false);
  return os.str();
}

std::string showLevelNF(const LevelNF &nf) { return showLevel(embedNF(nf)); }

} // namespace uvk
