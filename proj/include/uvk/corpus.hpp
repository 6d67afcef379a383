#pragma once

// Corpus verification: checks the shipped .uv files in manifest order,
// enforcing that every declaration is listed, that the listed tier matches
// what the file provides (tier one = full proof, tier two = axiomatic body),
// and that no tier-one proof refers to a tier-two name.

#include "uvk/check.hpp"

namespace uvk {

struct CorpusEntry {
  std::string file, name, tier, anchor;
};

struct DeclVerdict {
  std::string file, name, tier;
  bool pass = false;
  std::string category; // failure category when !pass, else empty
};

struct CorpusReport {
  std::vector<DeclVerdict> decls;
  std::vector<Diagnostic> diagnostics;
  int tier1Pass = 0, tier2Pass = 0, failures = 0;
  double seconds = 0;
  bool ok = false;
  int exitCode = 0;
};

// Reads `file<TAB>name<TAB>tier<TAB>anchor` records; '#' lines are comments.
// Throws CheckError{"io"} or CheckError{"manifest-drift"}.
std::vector<CorpusEntry> readManifest(const std::string &path);

CorpusReport verifyCorpus(GlobalEnv &g, const std::string &corpusDir,
                          const std::vector<CorpusEntry> &manifest,
                          bool keepGoing);

// UVK_CORPUS_DIR when set, else the fallback.
std::string corpusDirFromEnv(const std::string &fallback = "corpus");

} // namespace uvk
