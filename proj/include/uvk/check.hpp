#pragma once

// File-level checking driver shared by the CLI and the corpus verifier.

#include "uvk/syntax.hpp"
#include "uvk/typecheck.hpp"

namespace uvk {

struct CheckOutcome {
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> checkedNames; // declarations accepted, in order
  bool parseFailed = false;              // lex/parse stopped the whole file
};

// Parses, resolves and checks every declaration of `text` against g.
// Successful declarations are installed in g.  By default checking stops at
// the first failing declaration; with keepGoing, later declarations are still
// attempted (each failure is independent; a declaration depending on a failed
// one will report its own unbound error).
CheckOutcome checkSource(GlobalEnv &g, const std::string &file,
                         const std::string &text, bool keepGoing);

// `file line:col [category] (in declaration) message; expected/actual` text.
std::string formatDiagnostic(const Diagnostic &d);

// Whole file as a string; throws CheckError{category: "io"}.
std::string readFileText(const std::string &path);

Diagnostic toDiagnostic(const CheckError &e, const std::string &file,
                        const std::string &declaration);

} // namespace uvk
