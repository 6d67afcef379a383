#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uvk/corpus.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace uvk;
namespace fs = std::filesystem;

// ---- scratch corpora -------------------------------------------------------

namespace {

// A throwaway directory populated with source files for one test.
struct Scratch {
  fs::path dir;

  Scratch() {
    std::string tmpl =
        (fs::temp_directory_path() / "uvk-corpus-XXXXXX").string();
    REQUIRE(mkdtemp(tmpl.data()) != nullptr);
    dir = tmpl;
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }

  std::string write(const std::string &name, const std::string &text) {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << text;
    return p.string();
  }
};

CorpusEntry entry(std::string file, std::string name, std::string tier) {
  return {std::move(file), std::move(name), std::move(tier), "anchor"};
}

std::string categoryOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const CheckError &e) {
    return e.category;
  }
  return "";
}

} // namespace

// ---- manifest reading ------------------------------------------------------

TEST_CASE("manifest rows parse; comments, blanks and CRLF are tolerated") {
  Scratch s;
  std::string path = s.write("manifest.tsv",
                             "# corpus index\n"
                             "\n"
                             "a.uv\tone\tTIER1\tfirst anchor\r\n"
                             "a.uv\ttwo\tTIER2\tsecond anchor\n"
                             "# trailing comment\n");
  auto entries = readManifest(path);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].file == "a.uv");
  CHECK(entries[0].name == "one");
  CHECK(entries[0].tier == "TIER1");
  CHECK(entries[0].anchor == "first anchor");
  CHECK(entries[1].name == "two");
  CHECK(entries[1].tier == "TIER2");
}

TEST_CASE("malformed manifests are rejected as drift") {
  Scratch s;
  auto read = [&](const std::string &text) {
    std::string path = s.write("m.tsv", text);
    return categoryOf([&] { readManifest(path); });
  };
  CHECK(read("a.uv\tone\tTIER1\n") == "manifest-drift");          // 3 fields
  CHECK(read("a.uv\tone\tTIER1\tx\tmore\n") == "manifest-drift"); // 5 fields
  CHECK(read("a.uv\tone\tTIER3\tx\n") == "manifest-drift");       // bad tier
  CHECK(read("a.uv\tone\tTIER1\tx\n"
             "b.uv\tone\tTIER2\ty\n") == "manifest-drift"); // duplicate name
  CHECK(categoryOf([&] { readManifest((s.dir / "absent.tsv").string()); }) ==
        "io");
}

// ---- corpus verification ---------------------------------------------------

TEST_CASE("a corpus matching its manifest verifies green across files") {
  Scratch s;
  s.write("a.uv", "def idNat (n : ℕ) : ℕ := n\n"
                  "postulate ax : ℕ\n");
  s.write("b.uv", "def useIt : ℕ := idNat (suc zero)\n");
  std::vector<CorpusEntry> manifest = {
      entry("a.uv", "idNat", "TIER1"),
      entry("a.uv", "ax", "TIER2"),
      entry("b.uv", "useIt", "TIER1"),
  };
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(rep.ok);
  CHECK(rep.exitCode == 0);
  CHECK(rep.failures == 0);
  CHECK(rep.tier1Pass == 2);
  CHECK(rep.tier2Pass == 1);
  REQUIRE(rep.decls.size() == 3);
  for (const DeclVerdict &v : rep.decls)
    CHECK(v.pass);
  // later files see the earlier files' declarations
  CHECK(g.find("useIt") != nullptr);
}

TEST_CASE("a declaration missing from the manifest is drift") {
  Scratch s;
  s.write("a.uv", "def one : ℕ := suc zero\n"
                  "def sneaky : ℕ := zero\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "one", "TIER1")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(!rep.ok);
  CHECK(rep.exitCode == 3);
  REQUIRE(!rep.diagnostics.empty());
  CHECK(rep.diagnostics[0].category == "manifest-drift");
  CHECK(rep.diagnostics[0].message.find("sneaky") != std::string::npos);
}

TEST_CASE("a manifest entry missing from the file is drift") {
  Scratch s;
  s.write("a.uv", "def one : ℕ := suc zero\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "one", "TIER1"),
                                       entry("a.uv", "gone", "TIER1")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(!rep.ok);
  CHECK(rep.exitCode == 3);
  REQUIRE(!rep.diagnostics.empty());
  CHECK(rep.diagnostics[0].category == "manifest-drift");
  CHECK(rep.diagnostics[0].message.find("gone") != std::string::npos);
}

TEST_CASE("declaration order must match the manifest") {
  Scratch s;
  s.write("a.uv", "def b : ℕ := zero\n"
                  "def a : ℕ := zero\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "a", "TIER1"),
                                       entry("a.uv", "b", "TIER1")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(!rep.ok);
  REQUIRE(!rep.diagnostics.empty());
  CHECK(rep.diagnostics[0].category == "manifest-drift");
  CHECK(rep.diagnostics[0].message.find("order") != std::string::npos);
}

TEST_CASE("a tier-one entry may not have an axiomatic body") {
  Scratch s;
  s.write("a.uv", "postulate claimed : ℕ\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "claimed", "TIER1")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(!rep.ok);
  CHECK(rep.exitCode == 3);
  CHECK(rep.failures == 1);
  REQUIRE(rep.decls.size() == 1);
  CHECK(!rep.decls[0].pass);
  CHECK(rep.decls[0].category == "manifest-drift");
}

TEST_CASE("a tier-two entry must be a postulate or alias one") {
  Scratch s;
  s.write("a.uv", "postulate ax : ℕ\n"
                  "def axAlias : ℕ := ax\n"
                  "def real : ℕ := suc zero\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "ax", "TIER2"),
                                       entry("a.uv", "axAlias", "TIER2"),
                                       entry("a.uv", "real", "TIER2")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, true);
  CHECK(!rep.ok);
  CHECK(rep.tier2Pass == 2); // the postulate and its alias
  CHECK(rep.failures == 1);  // the genuine proof mis-tiered as axiomatic
  REQUIRE(rep.decls.size() == 3);
  CHECK(rep.decls[0].pass);
  CHECK(rep.decls[1].pass);
  CHECK(!rep.decls[2].pass);
  CHECK(rep.decls[2].category == "manifest-drift");
}

TEST_CASE("tier-one proofs may not lean on tier-two names") {
  Scratch s;
  s.write("a.uv", "postulate ax : ℕ\n"
                  "def leak : ℕ := suc ax\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "ax", "TIER2"),
                                       entry("a.uv", "leak", "TIER1")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(!rep.ok);
  CHECK(rep.exitCode == 3);
  bool found = false;
  for (const Diagnostic &d : rep.diagnostics)
    if (d.category == "manifest-drift" &&
        d.message.find("tier-two") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("type errors surface with their own categories and exit class") {
  Scratch s;
  s.write("a.uv", "def bad : ℕ := star\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "bad", "TIER1")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(!rep.ok);
  CHECK(rep.exitCode == 1);
  REQUIRE(rep.decls.size() == 1);
  CHECK(!rep.decls[0].pass);
  CHECK(rep.decls[0].category == "type-mismatch");
}

TEST_CASE("keep-going reports every failure, stopping early otherwise") {
  Scratch s;
  s.write("a.uv", "def bad1 : ℕ := star\n"
                  "def good : ℕ := zero\n"
                  "def bad2 : ℕ := star\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "bad1", "TIER1"),
                                       entry("a.uv", "good", "TIER1"),
                                       entry("a.uv", "bad2", "TIER1")};
  {
    GlobalEnv g;
    CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
    CHECK(rep.failures == 1);
    CHECK(rep.decls.size() == 1); // stopped at the first failure
  }
  {
    GlobalEnv g;
    CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, true);
    CHECK(rep.failures == 2);
    REQUIRE(rep.decls.size() == 3);
    CHECK(!rep.decls[0].pass);
    CHECK(rep.decls[1].pass);
    CHECK(!rep.decls[2].pass);
    CHECK(rep.tier1Pass == 1);
  }
}

TEST_CASE("an unparsable file is reported against its path") {
  Scratch s;
  s.write("a.uv", "def broken ℕ := zero\n");
  std::vector<CorpusEntry> manifest = {entry("a.uv", "broken", "TIER1")};
  GlobalEnv g;
  CorpusReport rep = verifyCorpus(g, s.dir.string(), manifest, false);
  CHECK(!rep.ok);
  CHECK(rep.exitCode == 2);
  REQUIRE(!rep.diagnostics.empty());
  CHECK(rep.diagnostics[0].category == "parse");
  CHECK(rep.diagnostics[0].file.find("a.uv") != std::string::npos);
}

TEST_CASE("corpus directory resolution honors the environment override") {
  const char *old = std::getenv("UVK_CORPUS_DIR");
  std::string saved = old ? old : "";
  setenv("UVK_CORPUS_DIR", "/some/override", 1);
  CHECK(corpusDirFromEnv("corpus") == "/some/override");
  unsetenv("UVK_CORPUS_DIR");
  CHECK(corpusDirFromEnv("corpus") == "corpus");
  CHECK(corpusDirFromEnv("elsewhere") == "elsewhere");
  if (old)
    setenv("UVK_CORPUS_DIR", saved.c_str(), 1);
}
