#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;
namespace fs = std::filesystem;

// ---- driving the installed binary ------------------------------------------

namespace {

std::string cliPath() {
  const char *env = std::getenv("UVK_CLI");
  return env && *env ? env : "./build/uvk";
}

std::string corpusDir() {
  const char *env = std::getenv("UVK_CORPUS_DIR");
  return env && *env ? env : "corpus";
}

struct RunResult {
  int exit = -1;
  std::string out; // captured stdout (plus stderr when merged)
};

RunResult run(const std::string &args, bool mergeStderr = false) {
  std::string cmd = "\"" + cliPath() + "\" " + args +
                    (mergeStderr ? " 2>&1" : " 2>/dev/null");
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    r.out.append(buf, n);
  int st = pclose(p);
  r.exit = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      out.push_back(line);
  return out;
}

struct Scratch {
  fs::path dir;

  Scratch() {
    std::string tmpl = (fs::temp_directory_path() / "uvk-cli-XXXXXX").string();
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

} // namespace

// ---- check -----------------------------------------------------------------

TEST_CASE("check reports each clean file with its declaration count") {
  Scratch s;
  std::string p = s.write("good.uv", "def one : ℕ := suc zero\n"
                                     "def two : ℕ := suc one\n"
                                     "def three : ℕ := suc two\n");
  RunResult r = run("check \"" + p + "\"");
  CHECK(r.exit == 0);
  CHECK(r.out == p + ": ok (3 declarations)\n");
}

TEST_CASE("check accumulates declarations across paths in order") {
  Scratch s;
  std::string p1 = s.write("base.uv", "def one : ℕ := suc zero\n");
  std::string p2 = s.write("uses.uv", "def two : ℕ := suc one\n");
  RunResult r = run("check \"" + p1 + "\" \"" + p2 + "\"");
  CHECK(r.exit == 0);
  CHECK(lines(r.out).size() == 2);
  // the other order leaves 'one' unbound
  RunResult rev = run("check \"" + p2 + "\" \"" + p1 + "\"");
  CHECK(rev.exit == 2);
}

TEST_CASE("an unreadable path is an io failure with exit 3") {
  Scratch s;
  RunResult r = run("check \"" + (s.dir / "absent.uv").string() + "\"");
  CHECK(r.exit == 3);
  CHECK(r.out.empty()); // diagnostics go to standard error
  RunResult merged =
      run("check \"" + (s.dir / "absent.uv").string() + "\"", true);
  CHECK(merged.out.find("[io]") != std::string::npos);
}

TEST_CASE("quiet mode suppresses the per-file ok lines") {
  Scratch s;
  std::string p = s.write("good.uv", "def one : ℕ := suc zero\n");
  RunResult r = run("--quiet check \"" + p + "\"");
  CHECK(r.exit == 0);
  CHECK(r.out.empty());
}

TEST_CASE("machine diagnostics: one record per line, span and category") {
  Scratch s;
  std::string p = s.write("bad.uv", "def bad1 : ℕ := star\n"
                                    "def good : ℕ := zero\n"
                                    "def bad2 : ℕ := star\n");
  RunResult first = run("--json check \"" + p + "\"");
  CHECK(first.exit == 1);
  REQUIRE(lines(first.out).size() == 1); // stops at the first failure

  RunResult all = run("--json --keep-going check \"" + p + "\"");
  CHECK(all.exit == 1);
  auto ls = lines(all.out);
  REQUIRE(ls.size() == 2); // both failures, the good one stays quiet
  for (const std::string &line : ls) {
    json j = json::parse(line);
    CHECK(j.at("file") == p);
    CHECK(j.at("category") == "type-mismatch");
    CHECK(j.at("span").at("line").get<int>() > 0);
    CHECK(j.at("span").at("col").get<int>() > 0);
    CHECK(!j.at("message").get<std::string>().empty());
    CHECK(!j.at("declaration").get<std::string>().empty());
  }
}

TEST_CASE("the axiom interface is preloaded unless opted out") {
  Scratch s;
  std::string p =
      s.write("t.uv", "def truncated [u] (X : U u) : U u := Trunc [u] X\n");
  CHECK(run("check \"" + p + "\"").exit == 0);
  RunResult bare = run("--json --no-prelude check \"" + p + "\"");
  CHECK(bare.exit == 2);
  json j = json::parse(lines(bare.out).at(0));
  CHECK(j.at("category") == "unbound");
}

// ---- normalize -------------------------------------------------------------

TEST_CASE("normalize prints beta-normal eta-long forms") {
  Scratch s;
  std::string p = s.write("n.uv",
                          "def idf : Π (X : U 0), X → X := λ X x, x\n"
                          "def idAlias : Π (X : U 0), X → X := idf\n"
                          "def three : ℕ := suc (suc (suc zero))\n");
  RunResult r = run("normalize \"" + p + "\" idf");
  CHECK(r.exit == 0);
  CHECK(r.out == "λ X, λ x, x\n");
  // a bare alias eta-expands to the same normal form
  CHECK(run("normalize \"" + p + "\" idAlias").out == "λ X, λ x, x\n");
  CHECK(run("normalize \"" + p + "\" three").out == "suc (suc (suc zero))\n");
}

TEST_CASE("normalize computes through the eliminators") {
  Scratch s;
  std::string p = s.write(
      "arith.uv",
      "def add (m n : ℕ) : ℕ := natInd (λ k, ℕ) n (λ k r, suc r) m\n"
      "def four : ℕ := add (suc (suc zero)) (suc (suc zero))\n");
  RunResult r = run("normalize \"" + p + "\" four");
  CHECK(r.exit == 0);
  CHECK(r.out == "suc (suc (suc (suc zero)))\n");
}

TEST_CASE("normalize reports unknown definitions with exit 1") {
  Scratch s;
  std::string p = s.write("n.uv", "def one : ℕ := suc zero\n");
  RunResult r = run("--json normalize \"" + p + "\" missing");
  CHECK(r.exit == 1);
  json j = json::parse(lines(r.out).at(0));
  CHECK(j.at("category") == "unknown-definition");
}

TEST_CASE("normalize --json carries the type alongside the normal form") {
  Scratch s;
  std::string p =
      s.write("n.uv", "def idf : Π (X : U 0), X → X := λ X x, x\n");
  RunResult r = run("--json normalize \"" + p + "\" idf");
  CHECK(r.exit == 0);
  json j = json::parse(lines(r.out).at(0));
  CHECK(j.at("name") == "idf");
  CHECK(j.at("type") == "Π (X : U 0), X → X");
  CHECK(j.at("normalForm") == "λ X, λ x, x");
}

TEST_CASE("normalize rejects missing arguments at the command line") {
  Scratch s;
  std::string p = s.write("n.uv", "def one : ℕ := suc zero\n");
  CHECK(run("normalize \"" + p + "\"").exit != 0);
}

// ---- corpus ----------------------------------------------------------------

TEST_CASE("the shipped corpus verifies under the default manifest") {
  RunResult r = run("--quiet corpus");
  CHECK(r.exit == 0);
  auto ls = lines(r.out);
  REQUIRE(!ls.empty());
  int t1 = 0, t2 = 0, failed = 0, decls = 0, listed = 0;
  REQUIRE(sscanf(ls.back().c_str(),
                 "tier1 %d passed, tier2 %d passed, %d failed "
                 "(%d declarations, %d listed)",
                 &t1, &t2, &failed, &decls, &listed) == 5);
  CHECK(failed == 0);
  CHECK(t1 + t2 == decls);
  CHECK(decls == listed);
  CHECK(decls >= 45);
}

TEST_CASE("corpus lists a tier-tagged verdict per declaration") {
  RunResult r = run("corpus");
  CHECK(r.exit == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() >= 46); // one per declaration plus the summary
  int tagged = 0;
  for (const std::string &line : ls)
    if (line.rfind("PASS TIER", 0) == 0)
      ++tagged;
  CHECK(tagged == (int)ls.size() - 1);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("corpus --json emits one document with verdicts and timing") {
  RunResult r =
      run("--json corpus \"" + corpusDir() + "/manifest.tsv\"");
  CHECK(r.exit == 0);
  json j = json::parse(r.out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("failures") == 0);
  CHECK(j.at("diagnostics").empty());
  CHECK(j.at("seconds").get<double>() < 30.0);
  auto decls = j.at("declarations");
  CHECK((int)decls.size() >= 45);
  CHECK(j.at("tier1Pass").get<int>() + j.at("tier2Pass").get<int>() ==
        (int)decls.size());
  for (const auto &d : decls) {
    CHECK(d.at("status") == "PASS");
    bool tierKnown = d.at("tier") == "TIER1" || d.at("tier") == "TIER2";
    CHECK(tierKnown);
  }
}

TEST_CASE("corpus drift is caught end to end with exit 3") {
  Scratch s;
  s.write("a.uv", "def one : ℕ := suc zero\n");
  std::string m = s.write("manifest.tsv", "a.uv\tone\tTIER1\tx\n"
                                          "a.uv\tgone\tTIER1\ty\n");
  RunResult r = run("corpus \"" + m + "\"", true);
  CHECK(r.exit == 3);
  CHECK(r.out.find("manifest-drift") != std::string::npos);

  std::string bad = s.write("bad.tsv", "a.uv\tone\tTIER9\tx\n");
  CHECK(run("corpus \"" + bad + "\"").exit == 3);
}

TEST_CASE("a proof silently replaced by a postulate no longer verifies") {
  Scratch s;
  s.write("a.uv", "postulate one : ℕ\n");
  std::string m = s.write("manifest.tsv", "a.uv\tone\tTIER1\tx\n");
  RunResult r = run("corpus \"" + m + "\"", true);
  CHECK(r.exit == 3);
  CHECK(r.out.find("axiomatic body") != std::string::npos);
}
