#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/generators.hpp"
#include "valiant/cli.hpp"

using namespace valiant;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("valiant_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kParen = testing::data_path("paren.cnf");

}  // namespace

TEST_CASE("recognize") {
  CHECK(run({"recognize", "--grammar", kParen, "--input", "(())"}).out == "yes\n");
  CHECK(run({"recognize", "--grammar", kParen, "--input", "(())"}).code == kExitOk);
  const auto no = run({"recognize", "--grammar", kParen, "--input", ")("});
  CHECK(no.code == kExitNegative);
  CHECK(no.out == "no\n");
  CHECK(run({"recognize", "--grammar", "/nonexistent.cnf", "--input", "()"}).code ==
        kExitInputError);
  CHECK(run({"recognize", "--grammar", kParen, "--input", ""}).code == kExitInputError);

  const auto words = temp_file("words.cnf", "start: S\nS -> A B\nA -> 'hello'\nB -> 'world'\n");
  CHECK(run({"recognize", "--grammar", words, "--input", "hello  world", "--tokens",
             "whitespace"})
            .code == kExitOk);
  CHECK(run({"recognize", "--grammar", words, "--input", "hello world"}).code == kExitNegative);
  CHECK(run({"recognize", "--grammar", words, "--input", "x", "--tokens", "bytes"}).code ==
        kExitInputError);
}

TEST_CASE("parse") {
  const auto r = run({"parse", "--grammar", kParen, "--input", "()"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "(S (L \"(\") (R \")\"))\n");
  CHECK(run({"parse", "--grammar", kParen, "--input", "(())"}).out ==
        "(S (L \"(\") (X (S (L \"(\") (R \")\")) (R \")\")))\n");
  const auto neg = run({"parse", "--grammar", kParen, "--input", "(()"});
  CHECK(neg.code == kExitNegative);
  CHECK(neg.out.empty());
  CHECK(run({"parse", "--grammar", kParen, "--input", "(()())", "--check"}).code == kExitOk);
}

TEST_CASE("closure") {
  const auto mp = temp_file(
      "mp.json", R"({"semiring":"minplus","size":3,"entries":[[0,1,1],[1,2,2],[0,2,10]]})");
  const std::string expected =
      "{\"semiring\":\"minplus\",\"size\":3,\"entries\":[[0,1,1],[0,2,3],[1,2,2]]}\n";
  for (const char* oracle : {"valiant", "cyk", "kleene"}) {
    const auto r = run({"closure", "--matrix", mp, "--oracle", oracle});
    CHECK(r.code == kExitOk);
    CHECK(r.out == expected);
  }
  CHECK(run({"closure", "--matrix", mp}).out == expected);
  CHECK(run({"closure", "--semiring", "minplus", "--matrix", mp}).code == kExitOk);
  CHECK(run({"closure", "--semiring", "bool", "--matrix", mp}).code == kExitInputError);
  CHECK(run({"closure", "--matrix", mp, "--oracle", "magic"}).code == kExitInputError);

  const auto chain = temp_file(
      "chain.json", R"({"semiring":"bool","size":4,"entries":[[0,1,true],[1,2,true],[2,3,true]]})");
  CHECK(run({"closure", "--matrix", chain}).out ==
        "{\"semiring\":\"bool\",\"size\":4,\"entries\":[[0,1,true],[0,2,true],[0,3,true],"
        "[1,2,true],[1,3,true],[2,3,true]]}\n");
  CHECK(run({"closure", "--matrix", temp_file("bad.json", "{")}).code == kExitInputError);
}

TEST_CASE("check-laws") {
  for (const char* s : {"bool", "minplus"}) {
    const auto r = run({"check-laws", "--semiring", s, "--samples", "50", "--seed", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("9/9 laws hold") != std::string::npos);
  }
  CHECK(run({"check-laws", "--grammar", kParen, "--samples", "50"}).code == kExitOk);
  CHECK(run({"check-laws"}).code == kExitInputError);
  CHECK(run({"check-laws", "--semiring", "bool", "--grammar", kParen}).code == kExitInputError);
  CHECK(run({"check-laws", "--semiring", "reals"}).code == kExitInputError);
  const auto a = run({"check-laws", "--semiring", "minplus", "--samples", "30", "--seed", "9"});
  CHECK(a.out == run({"check-laws", "--semiring", "minplus", "--samples", "30", "--seed", "9"}).out);
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--grammar", kParen, "--sizes", "8,16", "--reps", "1"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,valiant_ms,cyk_ms,kleene_ms");
  std::getline(lines, line);
  CHECK(line.rfind("8,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("16,", 0) == 0);
  CHECK(run({"bench", "--grammar", kParen, "--sizes", "7"}).code == kExitInputError);
  CHECK(run({"bench", "--grammar", kParen, "--sizes", "a,b"}).code == kExitInputError);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"recognize", "--input", "()"}).code == kExitInputError);
}
