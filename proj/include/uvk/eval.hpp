#pragma once

// Normalization by evaluation.  evaluate() performs β, ι and transparent δ
// steps and never inspects types; readback() is type-directed and produces
// β-normal η-long terms (η for Π and Σ only).  Conversion is readback
// equality.

#include "uvk/globals.hpp"
#include "uvk/value.hpp"

#include <stdexcept>

namespace uvk {

// Internal malfunction (ill-typed value reached the evaluator); distinct from
// user-facing type errors.
struct KernelBug : std::logic_error {
  using std::logic_error::logic_error;
};

ValuePtr evaluate(const GlobalEnv &g, const Env &env, const TermPtr &t);

// Type of a global reference (a Global term carrying level arguments),
// memoized together with its unfolding.
ValuePtr globalType(const GlobalEnv &g, const TermPtr &t);

ValuePtr applyClo1(const GlobalEnv &g, const Clo1 &c, const ValuePtr &v);
ValuePtr applyClo2(const GlobalEnv &g, const Clo2 &c, const ValuePtr &v1,
                   const ValuePtr &v2);

ValuePtr doApply(const GlobalEnv &g, const ValuePtr &f, const ValuePtr &a);
ValuePtr doPr1(const GlobalEnv &g, const ValuePtr &p);
ValuePtr doPr2(const GlobalEnv &g, const ValuePtr &p);

// depth = number of free variables in scope (de Bruijn levels 0..depth-1).
TermPtr readback(const GlobalEnv &g, int depth, const ValuePtr &type,
                 const ValuePtr &v);
TermPtr readbackType(const GlobalEnv &g, int depth, const ValuePtr &v);

bool convertible(const GlobalEnv &g, int depth, const ValuePtr &type,
                 const ValuePtr &a, const ValuePtr &b);
bool convertibleType(const GlobalEnv &g, int depth, const ValuePtr &A,
                     const ValuePtr &B);

} // namespace uvk
