#pragma once

#include "uvk/term.hpp"

#include <string>

namespace uvk {

// User-facing failure, thrown by the lexer, parser, resolver and checker.
// category is one of: lex, parse, unbound, duplicate-name, not-inferable,
// type-mismatch, universe-mismatch, endpoint-mismatch (plus io and
// manifest-drift at the driver level).
struct CheckError {
  std::string category;
  Span span;
  std::string message;
  std::string expected; // pretty-printed, may be empty
  std::string actual;   // pretty-printed, may be empty
};

// Fully attributed error record as reported to the user.
struct Diagnostic {
  std::string file;
  Span span;
  std::string category;
  std::string message;
  std::string expected;
  std::string actual;
  std::string declaration; // innermost declaration being checked, if any
};

// Process exit code class for an error category: 1 for type errors, 2 for
// syntax/resolution errors, 3 for IO and manifest problems.
int categoryExitCode(const std::string &category);

} // namespace uvk
