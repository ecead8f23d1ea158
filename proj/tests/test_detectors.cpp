#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "perfume/detect/detectors.hpp"
#include "perfume/source/parser.hpp"

#include "support/fixtures.hpp"

using namespace perfume;

namespace {

struct Corpus {
  std::vector<CompilationUnit> units;
  ProjectIndex index;
};

Corpus corpus_of(std::vector<std::pair<std::string, std::string>> files) {
  Corpus c;
  for (auto& [path, src] : files) {
    c.units.push_back(parse_compilation_unit(src, path));
    REQUIRE(c.units.back().parsed());
  }
  c.index = build_project_index(c.units);
  return c;
}

std::vector<Finding> run_one(int id, const Corpus& c, std::size_t unit_idx = 0) {
  for (const auto& entry : all_detectors())
    if (entry.id == id) return entry.fn(c.units[unit_idx], c.index);
  FAIL("unknown detector id");
  return {};
}

std::string detail_of(const Finding& f, const std::string& key) {
  for (const auto& [k, v] : f.details)
    if (k == key) return v;
  return "";
}

const std::map<std::string, std::pair<int, int>>& positive_expectations() {
  // fixture file -> (perfume id, anchor line)
  static const std::map<std::string, std::pair<int, int>> table = {
      {"DisplayData.java", {1, 4}},
      {"Pawn.java", {2, 8}},
      {"Range.java", {3, 18}},
      {"Command.java", {4, 1}},
      {"Child.java", {5, 11}},
      {"SudokuBoard.java", {6, 4}},
      {"KalahBoard.java", {7, 15}},
      {"Mover.java", {8, 9}},
      {"Charset.java", {9, 4}},
      {"CommandLoop.java", {10, 3}},
      {"Game.java", {11, 5}},
      {"LineReader.java", {12, 8}},
      {"Grid.java", {13, 1}},
      {"PerfumeTest.java", {14, 3}},
      {"ExceptionContractTest.java", {15, 8}},
      {"ToBuild.java", {16, 8}},
      {"Controller.java", {17, 1}},
      {"Tape.java", {18, 11}},
      {"MachineConsole.java", {19, 8}},
      {"Shell.java", {20, 1}},
  };
  return table;
}

const std::map<std::string, int>& nearmiss_expectations() {
  static const std::map<std::string, int> table = {
      {"Copycat.java", 1},      {"Knight.java", 2},
      {"Countdown.java", 3},    {"Score.java", 4},
      {"Extended.java", 5},     {"HalfValue.java", 6},
      {"DeckIndex.java", 7},    {"Validator.java", 8},
      {"Labels.java", 9},       {"Dispatcher.java", 10},
      {"Inspector.java", 11},   {"SafeRunner.java", 12},
      {"LooseGrid.java", 13},   {"PublicStyleTest.java", 14},
      {"ChainedCallTest.java", 15}, {"LooseBuild.java", 16},
      {"OpenController.java", 17},  {"Spool.java", 18},
      {"Calculator.java", 19},  {"MathBag.java", 20},
  };
  return table;
}

}  // namespace

TEST_CASE("each positive fixture yields exactly one finding of its own id") {
  std::vector<CompilationUnit> units;
  for (const auto& path : testsupport::fixture_files("positive"))
    units.push_back(parse_compilation_unit(testsupport::slurp(path),
                                           path.filename().string()));
  auto index = build_project_index(units);

  std::map<int, std::size_t> counts;
  for (const auto& unit : units) {
    auto expected = positive_expectations().at(unit.path);
    auto findings = run_all_detectors(unit, index);
    for (const auto& f : findings) counts[f.perfume_id]++;
    bool anchored = false;
    for (const auto& f : findings) {
      if (f.perfume_id == expected.first &&
          f.span.begin.line == expected.second)
        anchored = true;
    }
    INFO(unit.path);
    CHECK(anchored);
  }
  for (int id = 1; id <= 20; ++id) {
    INFO("perfume id " << id);
    CHECK(counts[id] == 1);
  }
}

TEST_CASE("each near-miss fixture yields zero findings of its perfume") {
  std::vector<CompilationUnit> units;
  for (const auto& path : testsupport::fixture_files("nearmiss"))
    units.push_back(parse_compilation_unit(testsupport::slurp(path),
                                           path.filename().string()));
  auto index = build_project_index(units);
  for (const auto& unit : units) {
    int banned = nearmiss_expectations().at(unit.path);
    for (const auto& f : run_all_detectors(unit, index)) {
      INFO(unit.path);
      CHECK(f.perfume_id != banned);
    }
  }
}

TEST_CASE("detectors emit nothing for empty or failed units") {
  auto empty = corpus_of({{"Empty.java", ""}});
  for (const auto& entry : all_detectors())
    CHECK(entry.fn(empty.units[0], empty.index).empty());

  auto failed = parse_compilation_unit("class {", "Bad.java");
  ProjectIndex index;
  for (const auto& entry : all_detectors())
    CHECK(entry.fn(failed, index).empty());
}

TEST_CASE("clone blueprint requires the Cloneable subtype") {
  auto c = corpus_of({{"NoClone.java",
                       "class NoClone {\n"
                       "  public NoClone clone() {\n"
                       "    try {\n"
                       "      return (NoClone) super.clone();\n"
                       "    } catch (CloneNotSupportedException e) {\n"
                       "      throw new Error(e);\n"
                       "    }\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(1, c).empty());
}

TEST_CASE("equals blueprint rejects a non-Object parameter") {
  auto c = corpus_of({{"P.java",
                       "class P {\n"
                       "  public boolean equals(P o) {\n"
                       "    if (o == this) {\n"
                       "      return true;\n"
                       "    }\n"
                       "    return o instanceof P;\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(2, c).empty());
}

TEST_CASE("equals blueprint accepts getClass type checks") {
  auto c = corpus_of({{"G.java",
                       "class G {\n"
                       "  private int v;\n"
                       "  @Override\n"
                       "  public boolean equals(Object o) {\n"
                       "    if (this == o) {\n"
                       "      return true;\n"
                       "    }\n"
                       "    if (o == null || getClass() != o.getClass()) {\n"
                       "      return false;\n"
                       "    }\n"
                       "    return ((G) o).v == v;\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(2, c).size() == 1);
}

TEST_CASE("enum set factory calls count as optimized enum collections") {
  auto c = corpus_of({{"Mask.java",
                       "import java.util.EnumSet;\n"
                       "enum Bit { A, B }\n"
                       "class Mask {\n"
                       "  private EnumSet<Bit> bits = EnumSet.noneOf(Bit.class);\n"
                       "}\n"}});
  auto found = run_one(7, c);
  REQUIRE(found.size() == 1);
  CHECK(detail_of(found[0], "kind") == "EnumSet");
  CHECK(detail_of(found[0], "factory") == "noneOf");
}

TEST_CASE("every assert in a private method is a separate finding") {
  auto c = corpus_of({{"A.java",
                       "class A {\n"
                       "  private int f(int x) {\n"
                       "    assert x > 0 : \"positive\";\n"
                       "    assert x < 100;\n"
                       "    return x;\n"
                       "  }\n"
                       "}\n"}});
  auto found = run_one(8, c);
  REQUIRE(found.size() == 2);
  CHECK(detail_of(found[0], "has_message") == "true");
  CHECK(detail_of(found[1], "has_message") == "false");
}

TEST_CASE("varargs without a preceding fixed parameter does not count") {
  auto c = corpus_of({{"V.java",
                       "class V {\n"
                       "  static int sum(int... xs) {\n"
                       "    return xs.length;\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(9, c).empty());
}

TEST_CASE("arrow-form switch expressions with default are detected") {
  auto c = corpus_of({{"S.java",
                       "class S {\n"
                       "  int pick(int n) {\n"
                       "    return switch (n) {\n"
                       "      case 1 -> 10;\n"
                       "      default -> 0;\n"
                       "    };\n"
                       "  }\n"
                       "}\n"}});
  auto found = run_one(10, c);
  REQUIRE(found.size() == 1);
  CHECK(detail_of(found[0], "form") == "expression");
}

TEST_CASE("two pattern bindings in one method give two findings") {
  auto c = corpus_of({{"T.java",
                       "class T {\n"
                       "  int f(Object a) {\n"
                       "    int n = 0;\n"
                       "    if (a instanceof String s) {\n"
                       "      n += s.length();\n"
                       "    }\n"
                       "    if (a instanceof Integer i) {\n"
                       "      n += i;\n"
                       "    }\n"
                       "    return n;\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(11, c).size() == 2);
}

TEST_CASE("try with two resources reports resource_count 2") {
  auto c = corpus_of({{"R.java",
                       "import java.io.*;\n"
                       "class R {\n"
                       "  void copy(File a, File b) throws IOException {\n"
                       "    try (FileReader in = new FileReader(a);\n"
                       "         FileWriter out = new FileWriter(b)) {\n"
                       "      out.write(in.read());\n"
                       "    }\n"
                       "  }\n"
                       "}\n"}});
  auto found = run_one(12, c);
  REQUIRE(found.size() == 1);
  CHECK(detail_of(found[0], "resource_count") == "2");
}

TEST_CASE("two synchronized pairs give two findings naming each pair") {
  auto c = corpus_of({{"B.java",
                       "class B {\n"
                       "  private int a;\n"
                       "  private int b;\n"
                       "  synchronized int getA() { return a; }\n"
                       "  synchronized void setA(int v) { a = v; }\n"
                       "  synchronized int getB() { return b; }\n"
                       "  synchronized void setB(int v) { b = v; }\n"
                       "}\n"}});
  auto found = run_one(13, c);
  REQUIRE(found.size() == 2);
  CHECK(detail_of(found[0], "pair") == "A");
  CHECK(detail_of(found[1], "pair") == "B");
}

TEST_CASE("junit4 imports do not satisfy the jupiter requirement") {
  auto c = corpus_of({{"OldTest.java",
                       "import org.junit.Test;\n"
                       "class OldTest {\n"
                       "  @Test\n"
                       "  void t() { }\n"
                       "}\n"}});
  CHECK(run_one(14, c).empty());
}

TEST_CASE("fully qualified jupiter annotation counts without an import") {
  auto c = corpus_of({{"Fq.java",
                       "class Fq {\n"
                       "  @org.junit.jupiter.api.Test\n"
                       "  void t() { }\n"
                       "}\n"}});
  CHECK(run_one(14, c).size() == 1);
}

TEST_CASE("a block lambda with two calls is not a single-call exception test") {
  auto c = corpus_of(
      {{"TwoCalls.java",
        "import static org.junit.jupiter.api.Assertions.assertThrows;\n"
        "class TwoCalls {\n"
        "  void t() {\n"
        "    assertThrows(Exception.class, () -> {\n"
        "      warmUp();\n"
        "      trigger();\n"
        "    });\n"
        "  }\n"
        "  private void warmUp() { }\n"
        "  private void trigger() { }\n"
        "}\n"}});
  CHECK(run_one(15, c).empty());
}

TEST_CASE("assertThatThrownBy with one call is detected") {
  auto c = corpus_of(
      {{"Aj.java",
        "import static org.assertj.core.api.Assertions.assertThatThrownBy;\n"
        "class Aj {\n"
        "  void t() {\n"
        "    assertThatThrownBy(() -> trigger());\n"
        "  }\n"
        "  private void trigger() { }\n"
        "}\n"}});
  auto found = run_one(15, c);
  REQUIRE(found.size() == 1);
  CHECK(detail_of(found[0], "assertion") == "assertThatThrownBy");
}

TEST_CASE("non-static nested builder is rejected") {
  auto c = corpus_of({{"N.java",
                       "public class N {\n"
                       "  private N(Builder b) { }\n"
                       "  public class Builder {\n"
                       "    public N build() {\n"
                       "      return new N(this);\n"
                       "    }\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(16, c).empty());
}

TEST_CASE("singleton variants and precedence") {
  SECTION("enum with a single constant is the enum variant") {
    auto c = corpus_of({{"One.java", "enum One { INSTANCE }"}});
    auto found = run_one(17, c);
    REQUIRE(found.size() == 1);
    CHECK(detail_of(found[0], "variant") == "enum");
  }
  SECTION("enum with two constants is not a singleton") {
    auto c = corpus_of({{"Two.java", "enum Two { A, B }"}});
    CHECK(run_one(17, c).empty());
  }
  SECTION("field variant wins over factory") {
    auto c = corpus_of({{"Both.java",
                         "final class Both {\n"
                         "  public static final Both INSTANCE = new Both();\n"
                         "  private Both() { }\n"
                         "  public static Both getInstance() {\n"
                         "    return INSTANCE;\n"
                         "  }\n"
                         "  void use() { }\n"
                         "}\n"}});
    auto found = run_one(17, c);
    REQUIRE(found.size() == 1);
    CHECK(detail_of(found[0], "variant") == "field");
  }
}

TEST_CASE("defensive null check mechanisms") {
  SECTION("the opening example: guard plus IllegalArgumentException") {
    auto c = corpus_of({{"Scorer.java",
                         "class ChessBoard {\n"
                         "  int getHumanColor() { return 0; }\n"
                         "}\n"
                         "class Scorer {\n"
                         "  public static double score(ChessBoard board) {\n"
                         "    if (board == null) {\n"
                         "      throw new IllegalArgumentException(\"Board is null!\");\n"
                         "    }\n"
                         "    return board.getHumanColor();\n"
                         "  }\n"
                         "}\n"}});
    auto found = run_one(19, c);
    REQUIRE(found.size() == 1);
    CHECK(detail_of(found[0], "mechanism") == "comparison");
    CHECK(detail_of(found[0], "parameters") == "board");
  }
  SECTION("Objects.requireNonNull counts") {
    auto c = corpus_of({{"Req.java",
                         "import java.util.Objects;\n"
                         "class Req {\n"
                         "  public int len(String text) {\n"
                         "    Objects.requireNonNull(text, \"text\");\n"
                         "    return text.length();\n"
                         "  }\n"
                         "}\n"}});
    auto found = run_one(19, c);
    REQUIRE(found.size() == 1);
    CHECK(detail_of(found[0], "mechanism") == "requireNonNull");
  }
  SECTION("@NotNull style annotations count") {
    auto c = corpus_of({{"Anno.java",
                         "class Anno {\n"
                         "  public int len(@NotNull String text) {\n"
                         "    return text.length();\n"
                         "  }\n"
                         "}\n"}});
    auto found = run_one(19, c);
    REQUIRE(found.size() == 1);
    CHECK(detail_of(found[0], "mechanism") == "annotation");
  }
  SECTION("several checked parameters still give one finding per method") {
    auto c = corpus_of({{"Multi.java",
                         "class Multi {\n"
                         "  public int f(String a, String b) {\n"
                         "    if (a == null || b == null) {\n"
                         "      return 0;\n"
                         "    }\n"
                         "    return a.length() + b.length();\n"
                         "  }\n"
                         "}\n"}});
    auto found = run_one(19, c);
    REQUIRE(found.size() == 1);
    CHECK(detail_of(found[0], "parameters") == "a,b");
  }
  SECTION("a varargs parameter of primitive elements is not a reference") {
    auto c = corpus_of({{"Var.java",
                         "class Var {\n"
                         "  public static boolean ok(int... xs) {\n"
                         "    return xs != null;\n"
                         "  }\n"
                         "}\n"}});
    CHECK(run_one(19, c).empty());
  }
}

TEST_CASE("utility class body forms") {
  SECTION("throwing private constructor is accepted") {
    auto c = corpus_of({{"U.java",
                         "final class U {\n"
                         "  private U() {\n"
                         "    throw new AssertionError();\n"
                         "  }\n"
                         "  static int id(int x) { return x; }\n"
                         "}\n"}});
    CHECK(run_one(20, c).size() == 1);
  }
  SECTION("an instance method disqualifies the class") {
    auto c = corpus_of({{"U.java",
                         "final class U {\n"
                         "  private U() { }\n"
                         "  static int id(int x) { return x; }\n"
                         "  int bad() { return 1; }\n"
                         "}\n"}});
    CHECK(run_one(20, c).empty());
  }
}

TEST_CASE("detector invariants over the positive corpus") {
  std::vector<CompilationUnit> units;
  for (const auto& path : testsupport::fixture_files("positive"))
    units.push_back(parse_compilation_unit(testsupport::slurp(path),
                                           path.filename().string()));
  auto index = build_project_index(units);

  for (const auto& unit : units) {
    auto first = run_all_detectors(unit, index);
    auto second = run_all_detectors(unit, index);
    REQUIRE(first.size() == second.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < first.size(); ++i) {
      const Finding& f = first[i];
      // determinism
      CHECK(f.perfume_id == second[i].perfume_id);
      CHECK(f.span == second[i].span);
      CHECK(f.element == second[i].element);
      // soundness to catalog and file
      CHECK(f.perfume_id >= 1);
      CHECK(f.perfume_id <= 20);
      CHECK(f.file == unit.path);
      CHECK_FALSE(f.element.empty());
      // spans within the file
      CHECK(f.span.begin.line >= 1);
      CHECK(f.span.end.line <= unit.line_count);
      // no duplicate (file, span, id, details)
      std::string key = f.file + "|" + to_string(f.span) + "|" +
                        std::to_string(f.perfume_id);
      for (const auto& [k, v] : f.details) key += "|" + k + "=" + v;
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("detector ids match their registry slots") {
  std::vector<CompilationUnit> units;
  for (const auto& path : testsupport::fixture_files("positive"))
    units.push_back(parse_compilation_unit(testsupport::slurp(path),
                                           path.filename().string()));
  auto index = build_project_index(units);
  for (const auto& entry : all_detectors()) {
    for (const auto& unit : units) {
      for (const auto& f : entry.fn(unit, index)) {
        CHECK(f.perfume_id == entry.id);
      }
    }
  }
}

TEST_CASE("clause fallback applies when resolution leaves the index") {
  // "custom.Iterator" resolves nowhere, so the subtype answer is unknown
  // and the direct implements clause naming Iterator decides.
  auto c = corpus_of({{"W.java",
                       "class W implements custom.Iterator<Integer> {\n"
                       "  public Integer next() {\n"
                       "    throw new java.util.NoSuchElementException();\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(3, c).size() == 1);
}

TEST_CASE("builder build method must be parameterless and typed") {
  auto c = corpus_of({{"B.java",
                       "public class B {\n"
                       "  private B(Builder b) { }\n"
                       "  public static class Builder {\n"
                       "    public B build(int extra) {\n"
                       "      return new B(this);\n"
                       "    }\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(16, c).empty());
}

TEST_CASE("asserts inside anonymous class methods stay with their own method") {
  auto c = corpus_of({{"A.java",
                       "class A {\n"
                       "  private Runnable r() {\n"
                       "    return new Runnable() {\n"
                       "      public void run() {\n"
                       "        assert true;\n"
                       "      }\n"
                       "    };\n"
                       "  }\n"
                       "}\n"}});
  // The assert lives in the anonymous run(), which is not private.
  CHECK(run_one(8, c).empty());
}

TEST_CASE("switches inside anonymous classes are still counted") {
  auto c = corpus_of({{"S.java",
                       "class S {\n"
                       "  Runnable build(int n) {\n"
                       "    return new Runnable() {\n"
                       "      public void run() {\n"
                       "        switch (n) {\n"
                       "          case 1:\n"
                       "            break;\n"
                       "          default:\n"
                       "            break;\n"
                       "        }\n"
                       "      }\n"
                       "    };\n"
                       "  }\n"
                       "}\n"}});
  CHECK(run_one(10, c).size() == 1);
}
