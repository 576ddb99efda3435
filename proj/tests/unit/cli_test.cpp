// Copyright 2026 The qparse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "corpus.hpp"
#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct Run {
  int exit = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  fs::create_directories(SCRATCH_DIR);
  return SCRATCH_DIR;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

/// Runs the CLI through the shell. `input`, when given, is fed on stdin.
Run run(const std::string& args, const fs::path& input = {}) {
  const auto err_path = scratch() / "stderr.txt";
  std::string cmd = quote(QPARSE_CLI) + " " + args + " 2>" + quote(err_path.string());
  if (!input.empty()) cmd += " <" + quote(input.string());
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = corpus::read(err_path);
  return r;
}

std::string corpus_file(const std::string& lang, const std::string& name) {
  return quote((corpus::root() / lang / name).string());
}

}  // namespace

TEST_CASE("parse prints a json ast") {
  const auto r = run("parse --lang qasm --format json " + corpus_file("qasm", "bell.qasm"));
  CHECK(r.exit == 0);
  CHECK(r.out.rfind("{\"kind\":\"Program\"", 0) == 0);
  CHECK(r.out.back() == '\n');
  CHECK(r.err.empty());
}

TEST_CASE("language defaults to the file extension") {
  CHECK(run("parse " + corpus_file("blackbird", "teleport.xbb")).exit == 0);
  CHECK(run("check " + corpus_file("qmasm", "chain2.qmasm")).exit == 0);
  const auto odd = write("prog.txt", "a 1\n");
  CHECK(run("check " + quote(odd.string())).exit == 3);
}

TEST_CASE("check is silent on success") {
  const auto r = run("check --lang qmasm " + corpus_file("qmasm", "checklist.qmasm"));
  CHECK(r.exit == 0);
  CHECK(r.out.empty());
}

TEST_CASE("solve the ferromagnetic pair") {
  const auto r = run("solve " + corpus_file("qmasm", "chain2.qmasm"));
  CHECK(r.exit == 0);
  CHECK(r.out == "{\"energy\":-1,\"states\":[{\"a\":-1,\"b\":-1},{\"a\":1,\"b\":1}],\"feasible\":4}\n");
}

TEST_CASE("ising emits the model") {
  const auto r = run("ising " + corpus_file("qmasm", "chain2.qmasm"));
  CHECK(r.exit == 0);
  CHECK(r.out.find("\"J\":[[\"a\",\"b\",-1]]") != std::string::npos);
}

TEST_CASE("syntax errors exit 1 with one diagnostic on stderr") {
  const auto bad = write("bad.qasm", "qreg q[1];\ncx q[0];\n");
  const auto r = run("parse --lang qasm " + quote(bad.string()));
  CHECK(r.exit == 1);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("error PAR103: ", 0) == 0);
  CHECK(r.err.find("cx q[0];\n^^^^^^^^\n") != std::string::npos);
}

TEST_CASE("semantic errors exit 2") {
  const auto bad = write("bad.qmasm", "a := true\na := false\n");
  const auto r = run("check " + quote(bad.string()));
  CHECK(r.exit == 2);
  CHECK(r.err.rfind("error SEM309", 0) == 0);
  CHECK(r.out.empty());
  CHECK(run("solve --max-spins 1 " + corpus_file("qmasm", "chain2.qmasm")).exit == 2);
}

TEST_CASE("usage errors exit 3") {
  CHECK(run("").exit == 3);
  CHECK(run("frobnicate x").exit == 3);
  CHECK(run("parse --lang cobol " + corpus_file("qasm", "bell.qasm")).exit == 3);
  CHECK(run("parse --bogus " + corpus_file("qasm", "bell.qasm")).exit == 3);
  CHECK(run("parse --format yaml " + corpus_file("qasm", "bell.qasm")).exit == 3);
  CHECK(run("solve --max-spins 99 " + corpus_file("qmasm", "chain2.qmasm")).exit == 3);
  CHECK(run("check --max-spins 3 " + corpus_file("qmasm", "chain2.qmasm")).exit == 3);
  CHECK(run("parse -", corpus::root() / "qasm" / "bell.qasm").exit == 3);
  CHECK(run("ising --lang qasm " + corpus_file("qasm", "bell.qasm")).exit == 3);
}

TEST_CASE("io errors exit 4") {
  const auto r = run("parse --lang qasm " + quote((scratch() / "does-not-exist.qasm").string()));
  CHECK(r.exit == 4);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("stdin behaves like the file") {
  for (const char* lang : {"qasm", "blackbird", "qmasm"})
    for (const auto& path : corpus::files(lang)) {
      if (path.filename() == "common.qmasm") continue;
      CAPTURE(path.string());
      const std::string from_file = run(std::string("parse --lang ") + lang + " " + quote(path.string())).out;
      const auto from_stdin = run(std::string("parse --lang ") + lang + " -", path);
      CHECK(from_stdin.exit == 0);
      CHECK(from_stdin.out == from_file);
    }
}

TEST_CASE("includes resolve from the input's directory or --include-dir") {
  const auto src = corpus::root() / "qmasm" / "checklist.qmasm";
  CHECK(run("check " + quote(src.string())).exit == 0);
  CHECK(run("check --lang qmasm -", src).exit == 2);
  CHECK(run("check --lang qmasm --include-dir " + quote((corpus::root() / "qmasm").string()) + " -", src).exit == 0);
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"parse --format pretty", "ising", "solve"}) {
    const auto file = corpus_file("qmasm", "ring.qmasm");
    const auto a = run(std::string(cmd) + " --lang qmasm " + file);
    const auto b = run(std::string(cmd) + " --lang qmasm " + file);
    CHECK(a.exit == 0);
    CHECK(a.out == b.out);
  }
}
