#pragma once

#include "uvk/globals.hpp"

namespace uvk {

// The axiom interface and its supporting definitions, compiled into the
// binary.  Checked into g like any other source; a failure here is an
// internal defect, not user error.
void loadPrelude(GlobalEnv &g);

// Raw source text of the embedded prelude (for tooling and tests).
const char *preludeText();

// Names the prelude postulates (the axiom ledger baseline), in order.
std::vector<std::string> preludePostulates();

} // namespace uvk
