#include "uvk/prelude.hpp"

#include "uvk/check.hpp"

#include "prelude_text.hpp"

namespace uvk {

const char *preludeText() { return kPreludeText; }

void loadPrelude(GlobalEnv &g) {
  CheckOutcome out = checkSource(g, "<prelude>", kPreludeText, false);
  if (!out.diagnostics.empty())
    throw KernelBug("embedded prelude failed to check: " +
                    formatDiagnostic(out.diagnostics.front()));
}

std::vector<std::string> preludePostulates() {
  GlobalEnv g;
  loadPrelude(g);
  std::vector<std::string> names;
  for (const Declaration &d : g.declarations())
    if (d.isPostulate())
      names.push_back(d.name);
  return names;
}

} // namespace uvk
