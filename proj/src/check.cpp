#include "uvk/check.hpp"

#include <fstream>
#include <sstream>

namespace uvk {

Diagnostic toDiagnostic(const CheckError &e, const std::string &file,
                        const std::string &declaration) {
  Diagnostic d;
  d.file = file;
  d.span = e.span;
  d.category = e.category;
  d.message = e.message;
  d.expected = e.expected;
  d.actual = e.actual;
  d.declaration = declaration;
  return d;
}

CheckOutcome checkSource(GlobalEnv &g, const std::string &file,
                         const std::string &text, bool keepGoing) {
  CheckOutcome out;
  std::vector<SDecl> decls;
  try {
    decls = parseFile(text);
  } catch (const CheckError &e) {
    out.diagnostics.push_back(toDiagnostic(e, file, ""));
    out.parseFailed = true;
    return out;
  }
  for (const SDecl &sd : decls) {
    try {
      Declaration d = resolveDecl(g, sd, file);
      checkDeclaration(g, d);
      out.checkedNames.push_back(sd.name);
    } catch (const CheckError &e) {
      out.diagnostics.push_back(toDiagnostic(e, file, sd.name));
      if (!keepGoing)
        break;
    }
  }
  return out;
}

std::string readFileText(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CheckError{"io", Span{}, "cannot read '" + path + "'", "", ""};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string formatDiagnostic(const Diagnostic &d) {
  std::ostringstream os;
  os << d.file << ":" << d.span.line << ":" << d.span.col << " [" << d.category
     << "]";
  if (!d.declaration.empty())
    os << " in '" << d.declaration << "'";
  os << ": " << d.message;
  if (!d.expected.empty())
    os << "\n  expected: " << d.expected;
  if (!d.actual.empty())
    os << "\n  actual:   " << d.actual;
  return os.str();
}

} // namespace uvk
