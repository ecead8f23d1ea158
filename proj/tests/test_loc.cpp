#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "perfume/stats/loc.hpp"

#include "support/fixtures.hpp"

using namespace perfume;

TEST_CASE("empty text counts as zero lines") {
  CHECK(count_loc("") == LocBreakdown{0, 0, 0});
}

TEST_CASE("one line of each class") {
  auto r = count_loc("int a; // x\n\n/* c */\n");
  CHECK(r.code == 1);
  CHECK(r.comment == 1);
  CHECK(r.blank == 1);
}

TEST_CASE("mixed code and comment counts as code") {
  CHECK(count_loc("int a; /* trailing */\n").code == 1);
  CHECK(count_loc("/* leading */ int a;\n").code == 1);
}

TEST_CASE("block comment state carries across lines") {
  auto r = count_loc("/*\n * doc\n */\nint a;\n");
  CHECK(r.comment == 3);
  CHECK(r.code == 1);
  CHECK(r.blank == 0);
}

TEST_CASE("whitespace-only lines are blank even inside block comments") {
  auto r = count_loc("/*\n\n*/\n");
  CHECK(r.comment == 2);
  CHECK(r.blank == 1);
}

TEST_CASE("string literals shield comment markers") {
  auto r = count_loc("String s = \"// not a comment\";\n");
  CHECK(r == LocBreakdown{1, 0, 0});
  r = count_loc("String s = \"/*\";\nint a;\nString t = \"*/\";\n");
  CHECK(r == LocBreakdown{3, 0, 0});
  r = count_loc("char c = '\"'; // still a comment marker after\n");
  CHECK(r == LocBreakdown{1, 0, 0});
}

TEST_CASE("text blocks shield markers and count as code") {
  auto r = count_loc("String s = \"\"\"\n  // inside\n  */ also inside\n  \"\"\";\n");
  CHECK(r.code == 4);
  CHECK(r.comment == 0);
}

TEST_CASE("a file without a trailing newline still counts its last line") {
  CHECK(count_loc("int a;") == LocBreakdown{1, 0, 0});
  CHECK(count_loc("// only\nint a;") == LocBreakdown{1, 1, 0});
}

TEST_CASE("fixture files match their hand-counted triples") {
  // code, comment, blank; counted by hand when the fixtures were written.
  const std::map<std::string, LocBreakdown> expected = {
      {"DisplayData.java", {14, 1, 1}},
      {"Pawn.java", {16, 0, 2}},
      {"Range.java", {24, 0, 5}},
      {"Command.java", {14, 0, 3}},
      {"Child.java", {13, 0, 2}},
      {"SudokuBoard.java", {13, 0, 3}},
      {"KalahBoard.java", {13, 0, 4}},
      {"Mover.java", {13, 0, 3}},
      {"Charset.java", {7, 0, 1}},
      {"CommandLoop.java", {24, 0, 3}},
      {"Game.java", {8, 0, 1}},
      {"LineReader.java", {11, 0, 1}},
      {"Grid.java", {9, 0, 2}},
      {"PerfumeTest.java", {7, 0, 1}},
      {"ExceptionContractTest.java", {11, 0, 3}},
      {"ToBuild.java", {16, 0, 4}},
      {"Controller.java", {12, 0, 3}},
      {"Tape.java", {20, 0, 4}},
      {"MachineConsole.java", {17, 0, 2}},
      {"Shell.java", {10, 0, 2}},
  };
  for (const auto& path : testsupport::fixture_files("positive")) {
    auto it = expected.find(path.filename().string());
    REQUIRE(it != expected.end());
    auto got = count_loc(testsupport::slurp(path));
    INFO(path.filename().string() << " code=" << got.code << " comment="
                                  << got.comment << " blank=" << got.blank);
    CHECK(got == it->second);
  }
}

TEST_CASE("counts are additive over concatenation outside open comments") {
  auto files = testsupport::fixture_files("positive");
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, files.size() - 1);
  for (int round = 0; round < 25; ++round) {
    std::string a = testsupport::slurp(files[pick(rng)]);
    std::string b = testsupport::slurp(files[pick(rng)]);
    LocBreakdown sum = count_loc(a);
    sum += count_loc(b);
    CHECK(count_loc(a + b) == sum);
  }
}

TEST_CASE("total always equals the physical line count") {
  for (const auto& path : testsupport::fixture_files("positive")) {
    std::string text = testsupport::slurp(path);
    std::size_t lines = 0;
    for (char c : text)
      if (c == '\n') ++lines;
    if (!text.empty() && text.back() != '\n') ++lines;
    CHECK(count_loc(text).total() == lines);
  }
}

TEST_CASE("CRLF line endings classify like LF") {
  CHECK(count_loc("int a;\r\n\r\n// c\r\n") == LocBreakdown{1, 1, 1});
}
