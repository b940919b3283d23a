// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef ICX_CLI_PATH
#define ICX_CLI_PATH "icx"
#endif
#ifndef ICX_CORPUS_DIR
#define ICX_CORPUS_DIR "corpus"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ICX_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string corpus_file(const std::string& name) {
  return std::string(ICX_CORPUS_DIR) + "/" + name + ".icx";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check reports violations with exit code 1") {
  const auto res = run("check " + corpus_file("exla1"));
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "status: violation"));
  CHECK(contains(res.output, "witness-point"));
}

TEST_CASE("check accepts integrally convex inputs with exit code 0") {
  for (const std::string name : {"rmconjic-set", "unit-box", "rmsubg"}) {
    const auto res = run("check " + corpus_file(name));
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "status: ok"));
  }
}

TEST_CASE("check rejects a mismatched --kind") {
  const auto res = run("check " + corpus_file("unit-box") + " --kind fn");
  CHECK(res.exit_code == 2);
}

TEST_CASE("parse errors exit with code 2 and a line number") {
  const auto res = run("check /dev/null");
  CHECK(res.exit_code == 2);
  const auto res2 = run("check " + std::string(ICX_CORPUS_DIR) + "/missing.icx");
  CHECK(res2.exit_code == 2);
}

TEST_CASE("subgrad prints the certificate and trace") {
  const auto res = run("subgrad " + corpus_file("rmsubg") + " --at 0 0 0 --trace");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "p: (0,1,0)"));
  CHECK(contains(res.output, "interval"));
}

TEST_CASE("subgrad on a non-IC input prints the emptiness proof") {
  const auto res = run("subgrad " + corpus_file("exla1") + " --at 0 0 0");
  CHECK(res.exit_code == 2);
  CHECK(contains(res.output, "integer-subdifferential: empty"));
  CHECK(contains(res.output, "no integer"));
}

TEST_CASE("subgrad accepts an elimination order") {
  const auto res = run("subgrad " + corpus_file("rmsubg") + " --at 0 0 0 --order 2 0 1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "verified-rows: 3"));
}

TEST_CASE("conj evaluates single prices and tables") {
  const auto at = run("conj " + corpus_file("rmconjic-set") + " --at 1 1 1 2");
  CHECK(at.exit_code == 0);
  CHECK(contains(at.output, "value: 2"));
  const auto table =
      run("conj " + corpus_file("abs-1d") + " --lo -2 --hi 2");
  CHECK(table.exit_code == 0);
  CHECK(contains(table.output, "dim 1"));
  CHECK(contains(table.output, "fn"));
}

TEST_CASE("biconj reports the gap at the star origin") {
  const auto res = run("biconj " + corpus_file("exla1") + " --at 0 0 0");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "value: -1"));
  CHECK(contains(res.output, "f-value: 0"));
  CHECK(contains(res.output, "gap: 1"));
}

TEST_CASE("dc on an identical pair") {
  const std::string f = corpus_file("sep-squares");
  const auto res = run("dc --g " + f + " --h " + f);
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "primal: 0"));
  CHECK(contains(res.output, "dual: 0"));
  CHECK(contains(res.output, "equal: true"));
}

TEST_CASE("hull shows the parallelogram paradox") {
  const auto res = run("hull " + corpus_file("rmedgedir"));
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "all-vertices-integral: true"));
  CHECK(contains(res.output, "directions-in-pm1: true"));
  CHECK(contains(res.output, "integrally-convex: false"));
}

TEST_CASE("minimize walks to a certified minimizer") {
  const auto res = run("minimize " + corpus_file("sep-squares") + " --from 2 2");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "minimizer: (0,0)"));
  CHECK(contains(res.output, "certified: true"));
}

TEST_CASE("gen writes a parseable instance that check accepts") {
  const std::string out = "/tmp/icx_cli_test_gen.icx";
  const auto gen = run("gen --kind separable --n 2 --lo -1 -1 --hi 2 2 --seed 7 --out " + out);
  CHECK(gen.exit_code == 0);
  const auto chk = run("check " + out);
  CHECK(chk.exit_code == 0);
  std::remove(out.c_str());
}

TEST_CASE("corpus-verify passes on the shipped corpus") {
  const auto res = run("corpus-verify --dir " + std::string(ICX_CORPUS_DIR));
  CHECK(res.exit_code == 0);
  CHECK(!contains(res.output, "FAIL"));
}

TEST_CASE("json output carries the same payload") {
  const auto res = run("check " + corpus_file("unit-box") + " --json");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "\"status\": \"ok\""));
  CHECK(contains(res.output, "\"verdict\": \"integrally-convex\""));
}

TEST_CASE("exact rationals render canonically in output") {
  const auto res = run("check " + corpus_file("rmedgedir"));
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "witness-point: (1,1/2,0)"));
}
