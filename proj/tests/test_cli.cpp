#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "support/subprocess.hpp"

using testsupport::cli_path;
using testsupport::run_command;

TEST_CASE("list-perfumes prints twenty tab-separated lines") {
  auto result = run_command(cli_path() + " list-perfumes 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  std::size_t lines = 0;
  for (char c : result.output)
    if (c == '\n') ++lines;
  CHECK(lines == 20);
  CHECK(result.output.rfind("1\tClone blueprint\tJava Standard Library", 0) == 0);
}

TEST_CASE("list-perfumes honors the locale flag") {
  auto result = run_command(cli_path() + " list-perfumes --locale de 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("Kopierkonstruktor") != std::string::npos);
}

TEST_CASE("analyze of a missing directory exits 1 and names the path") {
  auto result = run_command(cli_path() +
                            " analyze missing-dir-zzz 2>&1 >/dev/null");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("missing-dir-zzz") != std::string::npos);
}

TEST_CASE("unknown flags exit 1 with a usage hint") {
  auto result = run_command(cli_path() + " analyze . --bogus-flag 2>&1 >/dev/null");
  CHECK(result.exit_code == 1);
}

TEST_CASE("analyze over the fixture corpus reports twenty findings") {
  auto fixtures = (testsupport::fixtures_dir() / "positive").string();
  auto result = run_command(cli_path() + " analyze " + testsupport::sh_quote(fixtures) +
                            " --format json 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["summary"]["total_findings"] == 20);
  CHECK(doc["summary"]["files_analyzed"] == 20);
  CHECK(doc["summary"]["parse_failures"] == 0);
}

TEST_CASE("the report lands in the file given by --output") {
  testsupport::TempDir tmp("cli-output");
  auto fixtures = (testsupport::fixtures_dir() / "positive").string();
  auto out_file = (tmp.path() / "report.json").string();
  auto result = run_command(cli_path() + " analyze " + testsupport::sh_quote(fixtures) +
                            " --output " + testsupport::sh_quote(out_file) + " 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.empty());
  auto doc = nlohmann::json::parse(testsupport::slurp(out_file));
  CHECK(doc["summary"]["total_findings"] == 20);
}

TEST_CASE("csv format is accepted by the analyze subcommand") {
  auto fixtures = (testsupport::fixtures_dir() / "positive").string();
  auto result = run_command(cli_path() + " analyze " + testsupport::sh_quote(fixtures) +
                            " --format csv 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.rfind("perfume_id,", 0) == 0);
}

TEST_CASE("a locale override file changes reported names") {
  testsupport::TempDir tmp("cli-locale");
  auto bundle = (tmp.path() / "fr.properties").string();
  testsupport::spit(bundle,
                    "perfume.18.name=Constructeur de copie\n"
                    "perfume.18.description=Copie un objet de la meme classe.\n");
  auto result = run_command(cli_path() + " list-perfumes --locale fr"
                            " --locale-file " + testsupport::sh_quote(bundle) + " 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("Constructeur de copie") != std::string::npos);
  // untranslated entries fall back to en
  CHECK(result.output.find("Clone blueprint") != std::string::npos);
}

TEST_CASE("stats emits prevalence plus correlations from a metrics file") {
  testsupport::TempDir tmp("cli-stats");
  auto root = tmp.path() / "corpus";
  testsupport::spit(root / "s1" / "CommandLoop.java",
                    testsupport::slurp(testsupport::fixtures_dir() / "positive" /
                                       "CommandLoop.java"));
  testsupport::spit(root / "s2" / "Grid.java",
                    testsupport::slurp(testsupport::fixtures_dir() / "positive" /
                                       "Grid.java"));
  testsupport::spit(root / "s3" / "Plain.java", "class Plain { int x; }\n");
  auto csv = tmp.path() / "metrics.csv";
  testsupport::spit(csv,
                    "submission_id,functionality,readability,grade\n"
                    "s1,1.0,2.0,1.3\n"
                    "s2,2.0,3.0,2.0\n"
                    "s3,3.0,4.0,3.7\n");

  auto result = run_command(cli_path() + " stats " + testsupport::sh_quote(root.string()) +
                            " --metrics " + testsupport::sh_quote(csv.string()) +
                            " --correlate perfume_total:grade 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  auto doc = nlohmann::json::parse(result.output);
  REQUIRE(doc["prevalence"].size() == 20);
  CHECK(doc["corpus"]["submissions"] == 3);
  REQUIRE(doc["correlations"].size() == 1);
  CHECK(doc["correlations"][0]["x"] == "perfume_total");
  CHECK(doc["correlations"][0]["n"] == 3);

  SECTION("text format renders an aligned table") {
    auto text = run_command(cli_path() + " stats " + testsupport::sh_quote(root.string()) +
                            " --format text 2>/dev/null");
    REQUIRE(text.exit_code == 0);
    CHECK(text.output.find("Defensive default case") != std::string::npos);
  }
}

TEST_CASE("ignore globs are honored by the analyze subcommand") {
  auto fixtures = (testsupport::fixtures_dir() / "positive").string();
  auto result = run_command(cli_path() + " analyze " +
                            testsupport::sh_quote(fixtures) +
                            " --ignore Grid.java --format json 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["summary"]["files_analyzed"] == 19);
  CHECK(doc["summary"]["counts_by_perfume"]["13"] == 0);
}

TEST_CASE("stats rejects csv format with a configuration error") {
  testsupport::TempDir tmp("cli-stats-csv");
  testsupport::spit(tmp.path() / "sub" / "A.java", "class A { }");
  auto result = run_command(cli_path() + " stats " +
                            testsupport::sh_quote(tmp.path().string()) +
                            " --format csv 2>/dev/null; echo rc=$?");
  CHECK(result.output.find("rc=1") != std::string::npos);
}

TEST_CASE("a missing metrics file is a configuration error") {
  testsupport::TempDir tmp("cli-stats-missing");
  testsupport::spit(tmp.path() / "sub" / "A.java", "class A { }");
  auto result = run_command(cli_path() + " stats " +
                            testsupport::sh_quote(tmp.path().string()) +
                            " --metrics nope.csv 2>/dev/null; echo rc=$?");
  CHECK(result.output.find("rc=1") != std::string::npos);
}

TEST_CASE("an unknown locale warns and falls back to en") {
  auto result = run_command(cli_path() +
                            " list-perfumes --locale xx-ZZ 2>&1 >/dev/null");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("falling back") != std::string::npos);
  auto names = run_command(cli_path() + " list-perfumes --locale xx-ZZ 2>/dev/null");
  CHECK(names.output.find("Clone blueprint") != std::string::npos);
}

TEST_CASE("analyze accepts several input paths") {
  auto a = (testsupport::fixtures_dir() / "positive").string();
  auto b = (testsupport::fixtures_dir() / "nearmiss").string();
  auto result = run_command(cli_path() + " analyze " + testsupport::sh_quote(a) +
                            " " + testsupport::sh_quote(b) +
                            " --format json 2>/dev/null");
  REQUIRE(result.exit_code == 0);
  auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["summary"]["files_analyzed"] == 40);
}
