#pragma once

#include "uvk/eval.hpp"
#include "uvk/term.hpp"

#include <string>
#include <vector>

namespace uvk {

// Renders a core term using binder hints where available.  `scope` supplies
// names for free de Bruijn variables (innermost last).
std::string prettyTerm(const TermPtr &t,
                       std::vector<std::string> scope = {});

// Reads a type value back and renders it; `scope` must have `depth` names.
std::string prettyTypeValue(const GlobalEnv &g, int depth, const ValuePtr &v,
                            std::vector<std::string> scope = {});

} // namespace uvk
