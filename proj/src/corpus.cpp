#include "uvk/corpus.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace uvk {

std::string corpusDirFromEnv(const std::string &fallback) {
  const char *env = std::getenv("UVK_CORPUS_DIR");
  return env && *env ? env : fallback;
}

std::vector<CorpusEntry> readManifest(const std::string &path) {
  std::string text = readFileText(path);
  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    std::vector<std::string> fields;
    size_t start = 0;
    for (size_t tab = line.find('\t'); tab != std::string::npos;
         tab = line.find('\t', start)) {
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    fields.push_back(line.substr(start));
    if (fields.size() != 4)
      throw CheckError{"manifest-drift", Span{lineNo, 1, lineNo, 1},
                       "manifest line " + std::to_string(lineNo) +
                           " does not have 4 tab-separated fields",
                       "", ""};
    CorpusEntry e{fields[0], fields[1], fields[2], fields[3]};
    if (e.tier != "TIER1" && e.tier != "TIER2")
      throw CheckError{"manifest-drift", Span{lineNo, 1, lineNo, 1},
                       "unknown tier '" + e.tier + "' for '" + e.name + "'",
                       "", ""};
    if (!names.insert(e.name).second)
      throw CheckError{"manifest-drift", Span{lineNo, 1, lineNo, 1},
                       "'" + e.name + "' is listed twice in the manifest", "",
                       ""};
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

// A tier-two entry is axiomatic: either a postulate, or a definition whose
// body is exactly one reference to a postulate.
bool tier2Shape(const GlobalEnv &g, const Declaration &d) {
  if (d.isPostulate())
    return true;
  if (d.body->tag != Tag::Global)
    return false;
  const Declaration *target = g.find(d.body->name);
  return target && target->isPostulate();
}

} // namespace

CorpusReport verifyCorpus(GlobalEnv &g, const std::string &corpusDir,
                          const std::vector<CorpusEntry> &manifest,
                          bool keepGoing) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusReport rep;

  // manifest order: files by first appearance, names per file in sequence
  std::vector<std::string> files;
  std::map<std::string, std::vector<const CorpusEntry *>> byFile;
  for (const CorpusEntry &e : manifest) {
    auto &v = byFile[e.file];
    if (v.empty())
      files.push_back(e.file);
    v.push_back(&e);
  }

  std::map<std::string, std::string> tierOf;
  for (const CorpusEntry &e : manifest)
    tierOf[e.name] = e.tier;

  auto report = [&](const Diagnostic &d) {
    rep.diagnostics.push_back(d);
    if (rep.exitCode == 0)
      rep.exitCode = categoryExitCode(d.category);
  };

  bool stop = false;
  for (const std::string &file : files) {
    if (stop)
      break;
    const auto &expected = byFile[file];
    std::string path = corpusDir + "/" + file;
    std::vector<SDecl> decls;
    try {
      decls = parseFile(readFileText(path));
    } catch (const CheckError &e) {
      report(toDiagnostic(e, path, ""));
      if (!keepGoing)
        stop = true;
      continue;
    }

    // drift: the file's declaration sequence must equal the manifest's
    bool drift = false;
    for (size_t i = 0; i < decls.size() || i < expected.size(); ++i) {
      if (i >= decls.size()) {
        report(Diagnostic{path, Span{}, "manifest-drift",
                          "manifest lists '" + expected[i]->name +
                              "' but the file ends before it",
                          "", "", expected[i]->name});
        drift = true;
        break;
      }
      if (i >= expected.size()) {
        report(Diagnostic{path, decls[i].span, "manifest-drift",
                          "'" + decls[i].name +
                              "' is not listed in the manifest",
                          "", "", decls[i].name});
        drift = true;
        break;
      }
      if (decls[i].name != expected[i]->name) {
        report(Diagnostic{path, decls[i].span, "manifest-drift",
                          "declaration order drifted: file has '" +
                              decls[i].name + "' where the manifest lists '" +
                              expected[i]->name + "'",
                          "", "", decls[i].name});
        drift = true;
        break;
      }
    }
    if (drift) {
      if (!keepGoing)
        stop = true;
      continue;
    }

    for (size_t i = 0; i < decls.size() && !stop; ++i) {
      const CorpusEntry &entry = *expected[i];
      DeclVerdict v{file, entry.name, entry.tier, false, ""};
      try {
        Declaration d = resolveDecl(g, decls[i], file);
        checkDeclaration(g, d);
        if (entry.tier == "TIER1" && d.isPostulate()) {
          v.category = "manifest-drift";
          report(Diagnostic{path, decls[i].span, "manifest-drift",
                            "tier-one entry '" + entry.name +
                                "' has an axiomatic body",
                            "", "", entry.name});
        } else if (entry.tier == "TIER2" && !tier2Shape(g, d)) {
          v.category = "manifest-drift";
          report(Diagnostic{path, decls[i].span, "manifest-drift",
                            "tier-two entry '" + entry.name +
                                "' carries a real proof; retier it",
                            "", "", entry.name});
        } else {
          v.pass = true;
          (entry.tier == "TIER1" ? rep.tier1Pass : rep.tier2Pass)++;
        }
      } catch (const CheckError &e) {
        v.category = e.category;
        report(toDiagnostic(e, path, entry.name));
      }
      if (!v.pass) {
        ++rep.failures;
        if (!keepGoing)
          stop = true;
      }
      rep.decls.push_back(std::move(v));
    }
  }

  // tier-one proofs must not lean on tier-two names
  for (const DeclVerdict &v : rep.decls) {
    if (!v.pass || v.tier != "TIER1")
      continue;
    const Declaration *d = g.find(v.name);
    if (!d || !d->body)
      continue;
    std::vector<std::string> refs;
    collectGlobals(d->body, refs);
    for (const std::string &r : refs) {
      auto it = tierOf.find(r);
      if (it != tierOf.end() && it->second == "TIER2") {
        report(Diagnostic{v.file, d->span, "manifest-drift",
                          "tier-one proof '" + v.name +
                              "' references tier-two '" + r + "'",
                          "", "", v.name});
        ++rep.failures;
        break;
      }
    }
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  rep.ok = rep.diagnostics.empty();
  if (rep.ok)
    rep.exitCode = 0;
  return rep;
}

} // namespace uvk
