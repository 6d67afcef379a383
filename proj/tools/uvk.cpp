#include <CLI11.hpp>
#include <json.hpp>

#include "uvk/corpus.hpp"
#include "uvk/eval.hpp"
#include "uvk/prelude.hpp"
#include "uvk/pretty.hpp"

#include <iostream>

using nlohmann::ordered_json;
using namespace uvk;

namespace {

struct Options {
  bool json = false, keepGoing = false, quiet = false, noPrelude = false;
};

ordered_json diagnosticRecord(const Diagnostic &d) {
  ordered_json j;
  j["file"] = d.file;
  j["span"] = ordered_json{{"line", d.span.line},
                           {"col", d.span.col},
                           {"endLine", d.span.endLine},
                           {"endCol", d.span.endCol}};
  j["category"] = d.category;
  j["message"] = d.message;
  if (!d.expected.empty())
    j["expected"] = d.expected;
  if (!d.actual.empty())
    j["actual"] = d.actual;
  if (!d.declaration.empty())
    j["declaration"] = d.declaration;
  return j;
}

void emitDiagnostics(const std::vector<Diagnostic> &ds, const Options &opt) {
  for (const Diagnostic &d : ds) {
    if (opt.json)
      std::cout << diagnosticRecord(d).dump() << "\n";
    else
      std::cerr << formatDiagnostic(d) << "\n";
  }
}

int setupEnv(GlobalEnv &g, const Options &opt) {
  if (!opt.noPrelude)
    loadPrelude(g);
  return 0;
}

int runCheck(const std::vector<std::string> &paths, const Options &opt) {
  GlobalEnv g;
  setupEnv(g, opt);
  int code = 0;
  for (const std::string &path : paths) {
    std::string text;
    try {
      text = readFileText(path);
    } catch (const CheckError &e) {
      emitDiagnostics({toDiagnostic(e, path, "")}, opt);
      if (code == 0)
        code = categoryExitCode(e.category);
      if (!opt.keepGoing)
        break;
      continue;
    }
    CheckOutcome out = checkSource(g, path, text, opt.keepGoing);
    emitDiagnostics(out.diagnostics, opt);
    if (!out.diagnostics.empty()) {
      if (code == 0)
        code = categoryExitCode(out.diagnostics.front().category);
      if (!opt.keepGoing)
        break;
    } else if (!opt.quiet && !opt.json) {
      std::cout << path << ": ok (" << out.checkedNames.size()
                << " declarations)\n";
    }
  }
  return code;
}

int runNormalize(const std::string &path, const std::string &name,
                 const Options &opt) {
  GlobalEnv g;
  setupEnv(g, opt);
  std::string text;
  try {
    text = readFileText(path);
  } catch (const CheckError &e) {
    emitDiagnostics({toDiagnostic(e, path, "")}, opt);
    return categoryExitCode(e.category);
  }
  CheckOutcome out = checkSource(g, path, text, opt.keepGoing);
  emitDiagnostics(out.diagnostics, opt);
  if (!out.diagnostics.empty())
    return categoryExitCode(out.diagnostics.front().category);
  const Declaration *d = g.find(name);
  if (!d) {
    emitDiagnostics({Diagnostic{path,
                                Span{},
                                "unknown-definition",
                                "no definition named '" + name + "'",
                                "",
                                "",
                                name}},
                    opt);
    return 1;
  }
  std::vector<LevelPtr> levels;
  for (const std::string &p : d->levelParams)
    levels.push_back(lvar(p));
  TermPtr ref = mkGlobal(name, levels);
  ValuePtr ty = globalType(g, ref);
  ValuePtr val = evaluate(g, nullptr, ref);
  TermPtr nf = readback(g, 0, ty, val);
  if (opt.json) {
    ordered_json j;
    j["name"] = name;
    j["levelParams"] = d->levelParams;
    j["type"] = prettyTerm(readbackType(g, 0, ty));
    j["normalForm"] = prettyTerm(nf);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << prettyTerm(nf) << "\n";
  }
  return 0;
}

std::string dirnameOf(const std::string &path) {
  size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

int runCorpus(const std::string &manifestArg, const Options &opt) {
  std::string dir, manifestPath;
  if (manifestArg.empty()) {
    dir = corpusDirFromEnv("corpus");
    manifestPath = dir + "/manifest.tsv";
  } else {
    manifestPath = manifestArg;
    dir = dirnameOf(manifestArg);
  }
  GlobalEnv g;
  setupEnv(g, opt);
  std::vector<CorpusEntry> manifest;
  try {
    manifest = readManifest(manifestPath);
  } catch (const CheckError &e) {
    emitDiagnostics({toDiagnostic(e, manifestPath, "")}, opt);
    return categoryExitCode(e.category);
  }
  CorpusReport rep = verifyCorpus(g, dir, manifest, opt.keepGoing);
  if (opt.json) {
    ordered_json j;
    j["ok"] = rep.ok;
    j["tier1Pass"] = rep.tier1Pass;
    j["tier2Pass"] = rep.tier2Pass;
    j["failures"] = rep.failures;
    ordered_json decls = ordered_json::array();
    for (const DeclVerdict &v : rep.decls)
      decls.push_back(ordered_json{{"file", v.file},
                                   {"name", v.name},
                                   {"tier", v.tier},
                                   {"status", v.pass ? "PASS" : "FAIL"}});
    j["declarations"] = decls;
    ordered_json diags = ordered_json::array();
    for (const Diagnostic &d : rep.diagnostics)
      diags.push_back(diagnosticRecord(d));
    j["diagnostics"] = diags;
    j["seconds"] = rep.seconds;
    std::cout << j.dump(2) << "\n";
  } else {
    emitDiagnostics(rep.diagnostics, opt);
    if (!opt.quiet)
      for (const DeclVerdict &v : rep.decls)
        std::cout << (v.pass ? "PASS " : "FAIL ") << v.tier << "  "
                  << v.file << "  " << v.name << "\n";
    std::cout << "tier1 " << rep.tier1Pass << " passed, tier2 "
              << rep.tier2Pass << " passed, " << rep.failures
              << " failed (" << rep.decls.size() << " declarations, "
              << manifest.size() << " listed)\n";
  }
  return rep.exitCode;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"uvk: kernel and corpus checker for a small univalent type "
               "theory"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output on stdout");
  app.add_flag("--keep-going", opt.keepGoing,
               "report every failing declaration instead of stopping");
  app.add_flag("--quiet", opt.quiet, "suppress per-item progress output");
  app.add_flag("--no-prelude", opt.noPrelude,
               "start from an empty global environment");

  auto *check = app.add_subcommand("check", "type-check source files");
  check->fallthrough();
  std::vector<std::string> paths;
  check->add_option("paths", paths, "files to check")->required();

  auto *normalize =
      app.add_subcommand("normalize", "print a definition's normal form");
  normalize->fallthrough();
  std::string npath, nname;
  normalize->add_option("path", npath, "file to check")->required();
  normalize->add_option("name", nname, "definition to normalize")->required();

  auto *corpus = app.add_subcommand("corpus", "verify the shipped corpus");
  corpus->fallthrough();
  std::string manifestArg;
  corpus->add_option("manifest", manifestArg, "manifest file (default: "
                                              "$UVK_CORPUS_DIR/manifest.tsv)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return runCheck(paths, opt);
    if (normalize->parsed())
      return runNormalize(npath, nname, opt);
    return runCorpus(manifestArg, opt);
  } catch (const KernelBug &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70; // EX_SOFTWARE
  }
}
