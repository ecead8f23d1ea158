// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "perfume/perfume.hpp"

#include "support/fixtures.hpp"
#include "support/subprocess.hpp"
#include "support/synthetic.hpp"

using namespace perfume;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f s", s);
  return buf;
}

// -- criterion 1: catalogue fidelity ------------------------------------------

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  auto result = testsupport::run_command(testsupport::cli_path() +
                                         " list-perfumes 2>/dev/null");
  double elapsed = seconds_since(start);
  std::string golden = testsupport::slurp(testsupport::fixtures_dir() /
                                          "goldens" / "list_perfumes_en.txt");
  bool pass = result.exit_code == 0 && result.output == golden && elapsed < 1.0;
  std::string detail = fmt_seconds(elapsed);
  if (result.output != golden) detail += ", output differs from golden";
  report(1, "catalogue fidelity", pass, detail);
}

// -- criteria 2 and 3: fixture suites -----------------------------------------

const std::map<std::string, std::pair<int, int>>& positive_anchors() {
  static const std::map<std::string, std::pair<int, int>> table = {
      {"DisplayData.java", {1, 4}},   {"Pawn.java", {2, 8}},
      {"Range.java", {3, 18}},        {"Command.java", {4, 1}},
      {"Child.java", {5, 11}},        {"SudokuBoard.java", {6, 4}},
      {"KalahBoard.java", {7, 15}},   {"Mover.java", {8, 9}},
      {"Charset.java", {9, 4}},       {"CommandLoop.java", {10, 3}},
      {"Game.java", {11, 5}},         {"LineReader.java", {12, 8}},
      {"Grid.java", {13, 1}},         {"PerfumeTest.java", {14, 3}},
      {"ExceptionContractTest.java", {15, 8}}, {"ToBuild.java", {16, 8}},
      {"Controller.java", {17, 1}},   {"Tape.java", {18, 11}},
      {"MachineConsole.java", {19, 8}}, {"Shell.java", {20, 1}},
  };
  return table;
}

void criterion_2() {
  auto start = std::chrono::steady_clock::now();
  std::vector<CompilationUnit> units;
  for (const auto& path : testsupport::fixture_files("positive"))
    units.push_back(parse_compilation_unit(testsupport::slurp(path),
                                           path.filename().string()));
  auto index = build_project_index(units);

  int passed = 0;
  std::string first_failure;
  for (const auto& unit : units) {
    auto [want_id, want_line] = positive_anchors().at(unit.path);
    int own = 0;
    bool anchored = false;
    for (const auto& f : run_all_detectors(unit, index)) {
      if (f.perfume_id != want_id) continue;
      ++own;
      if (f.span.begin.line == want_line) anchored = true;
    }
    if (own == 1 && anchored) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = unit.path + " own=" + std::to_string(own) +
                      (anchored ? "" : " wrong anchor");
    }
  }
  double elapsed = seconds_since(start);
  bool pass = passed == 20 && elapsed < 5.0;
  std::string detail = std::to_string(passed) + "/20, " + fmt_seconds(elapsed);
  if (!first_failure.empty()) detail += ", " + first_failure;
  report(2, "positive-fixture suite", pass, detail);
}

const std::map<std::string, int>& nearmiss_ids() {
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

void criterion_3() {
  std::vector<CompilationUnit> units;
  for (const auto& path : testsupport::fixture_files("nearmiss"))
    units.push_back(parse_compilation_unit(testsupport::slurp(path),
                                           path.filename().string()));
  auto index = build_project_index(units);
  int passed = 0;
  std::string first_failure;
  for (const auto& unit : units) {
    int banned = nearmiss_ids().at(unit.path);
    bool clean = unit.parsed();
    for (const auto& f : run_all_detectors(unit, index))
      if (f.perfume_id == banned) clean = false;
    if (clean) ++passed;
    else if (first_failure.empty()) first_failure = unit.path;
  }
  bool pass = passed == 20;
  std::string detail = std::to_string(passed) + "/20";
  if (!first_failure.empty()) detail += ", " + first_failure;
  report(3, "near-miss suite", pass, detail);
}

// -- criterion 4: injection-oracle equivalence ---------------------------------

void criterion_4() {
  auto start = std::chrono::steady_clock::now();
  testsupport::TempDir tmp("accept-inject");
  auto ledger = testsupport::write_synthetic_corpus(tmp.path(), 200, 1234);

  AnalysisOptions options;
  options.input_paths = {tmp.path().string()};
  auto analysis = analyze(options);

  bool equal = analysis.parse_failures.empty();
  std::string mismatch;
  for (int id = 1; id <= 20; ++id) {
    if (analysis.counts_by_perfume.at(id) != ledger.at(id)) {
      equal = false;
      if (mismatch.empty())
        mismatch = "id " + std::to_string(id) + ": engine " +
                   std::to_string(analysis.counts_by_perfume.at(id)) +
                   " vs ledger " + std::to_string(ledger.at(id));
    }
  }
  double elapsed = seconds_since(start);
  bool pass = equal && elapsed < 30.0;
  std::string detail = std::to_string(analysis.files_analyzed) + " files, " +
                       fmt_seconds(elapsed);
  if (!mismatch.empty()) detail += ", " + mismatch;
  if (!analysis.parse_failures.empty()) detail += ", unexpected parse failures";
  report(4, "injection-oracle equivalence", pass, detail);
}

// -- criterion 5: determinism ---------------------------------------------------

void criterion_5() {
  testsupport::TempDir tmp("accept-det");
  testsupport::write_synthetic_corpus(tmp.path(), 60, 777);

  struct Config {
    std::size_t batch;
    std::size_t workers;
  };
  const Config configs[5] = {{1, 1}, {7, 1}, {64, 1}, {7, 4}, {64, 4}};
  std::vector<std::string> payloads;
  for (const auto& cfg : configs) {
    AnalysisOptions options;
    options.input_paths = {tmp.path().string()};
    options.batch_size = cfg.batch;
    options.worker_count = cfg.workers;
    payloads.push_back(
        serialize_report(analyze(options), OutputFormat::Json, "en"));
  }
  bool pass = true;
  for (const auto& p : payloads)
    if (p != payloads.front()) pass = false;
  report(5, "determinism across batch sizes and workers", pass,
         "5-way byte comparison");
}

// -- criterion 6: statistics oracles -------------------------------------------

double pearson_oracle(const std::vector<double>& xs,
                      const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxy += xs[i] * ys[i];
    sxx += xs[i] * xs[i];
    syy += ys[i] * ys[i];
  }
  return (n * sxy - sx * sy) /
         std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

void criterion_6() {
  bool pass = true;
  std::string detail;

  // Closed-form cases, exact.
  if (pearson({1, 2, 3}, {1, 2, 3}) != 1.0) pass = false;
  if (pearson({1, 2, 3}, {3, 2, 1}) != -1.0) pass = false;

  // Random vectors against the one-pass textbook oracle.
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> uniform(-20.0, 20.0);
  std::normal_distribution<double> noise(0.0, 2.0);
  double worst = 0.0;
  for (int round = 0; round < 100 && pass; ++round) {
    std::size_t n = 5 + static_cast<std::size_t>(round % 60);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = uniform(rng);
      ys[i] = 0.5 * xs[i] + noise(rng);
    }
    double diff = std::abs(pearson(xs, ys) - pearson_oracle(xs, ys));
    worst = std::max(worst, diff);
    if (diff >= 1e-9) {
      pass = false;
      detail = "pearson diff " + std::to_string(diff);
    }
  }

  // Prevalence on a constructed ten-submission corpus vs brute force.
  std::vector<SubmissionRecord> records;
  std::mt19937 prng(99);
  std::uniform_int_distribution<int> count_dist(0, 3);
  for (int i = 0; i < 10; ++i) {
    SubmissionRecord r;
    r.submission_id = "sub" + std::to_string(i);
    for (int id = 1; id <= 20; ++id) {
      std::size_t c = static_cast<std::size_t>(count_dist(prng));
      r.counts_by_perfume[id] = c;
      r.total_findings += c;
    }
    r.loc.code = 100;
    records.push_back(std::move(r));
  }
  auto rows = prevalence_table(records);
  for (int id = 1; id <= 20 && pass; ++id) {
    std::size_t total = 0;
    std::size_t present = 0;
    for (const auto& r : records) {
      total += r.counts_by_perfume.at(id);
      if (r.counts_by_perfume.at(id) > 0) ++present;
    }
    char expected_percent[16];
    std::snprintf(expected_percent, sizeof(expected_percent), "%.1f",
                  100.0 * static_cast<double>(present) / 10.0);
    const auto& row = rows[static_cast<std::size_t>(id - 1)];
    if (row.total != total ||
        format_percent(row.submission_percent) != expected_percent) {
      pass = false;
      detail = "prevalence mismatch at id " + std::to_string(id);
    }
  }

  // LoC triples on every positive fixture, hand-counted.
  const std::map<std::string, LocBreakdown> loc_expected = {
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
    auto got = count_loc(testsupport::slurp(path));
    if (got != loc_expected.at(path.filename().string())) {
      pass = false;
      detail = "LoC mismatch for " + path.filename().string();
    }
  }

  if (detail.empty()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max pearson deviation %.2e", worst);
    detail = buf;
  }
  report(6, "statistics oracles", pass, detail);
}

// -- criterion 7: table-shaped prevalence smoke ---------------------------------

void criterion_7() {
  testsupport::TempDir tmp("accept-shape");
  auto root = tmp.path() / "corpus";
  auto ledgers = testsupport::write_submission_corpus(root, 6, 8, 4242);

  auto result = testsupport::run_command(
      testsupport::cli_path() + " stats " + testsupport::sh_quote(root.string()) +
      " --format json 2>/dev/null");
  bool pass = result.exit_code == 0;
  std::string detail;
  if (pass) {
    auto doc = nlohmann::json::parse(result.output, nullptr, false);
    if (doc.is_discarded() || doc["prevalence"].size() != 20) {
      pass = false;
      detail = "prevalence table is not 20 rows";
    } else {
      for (const auto& row : doc["prevalence"]) {
        if (!row.contains("id") || !row.contains("total") ||
            !row.contains("submission_percent")) {
          pass = false;
          detail = "row missing total/percent columns";
        }
      }
      // cross-check totals against the generator ledgers
      std::map<int, std::size_t> expected;
      for (const auto& [sub, ledger] : ledgers)
        for (const auto& [id, n] : ledger) expected[id] += n;
      for (const auto& row : doc["prevalence"]) {
        int id = row["id"].get<int>();
        if (row["total"].get<std::size_t>() != expected[id]) {
          pass = false;
          detail = "total mismatch at id " + std::to_string(id);
        }
      }
    }
  } else {
    detail = "stats exited " + std::to_string(result.exit_code);
  }
  report(7, "prevalence report shape on synthetic corpus", pass, detail);
}

// -- criterion 8: robustness ----------------------------------------------------

void criterion_8() {
  testsupport::TempDir tmp("accept-robust");
  for (const auto& path : testsupport::fixture_files("positive"))
    testsupport::spit(tmp.path() / path.filename(), testsupport::slurp(path));

  auto clean = testsupport::run_command(
      testsupport::cli_path() + " analyze " +
      testsupport::sh_quote(tmp.path().string()) + " --format json 2>/dev/null");

  testsupport::spit(tmp.path() / "Broken.java", "class {");
  auto dirty = testsupport::run_command(
      testsupport::cli_path() + " analyze " +
      testsupport::sh_quote(tmp.path().string()) + " --format json 2>/dev/null");

  bool pass = clean.exit_code == 0 && dirty.exit_code == 0;
  std::string detail;
  if (pass) {
    auto before = nlohmann::json::parse(clean.output);
    auto after = nlohmann::json::parse(dirty.output);
    if (after["summary"]["parse_failures"] != 1 ||
        after["errors"].size() != 1) {
      pass = false;
      detail = "expected exactly one parse failure";
    } else if (after["findings"] != before["findings"]) {
      pass = false;
      detail = "findings changed after adding the broken file";
    } else {
      detail = "exit 0, one parse failure, findings unchanged";
    }
  } else {
    detail = "exit codes " + std::to_string(clean.exit_code) + "/" +
             std::to_string(dirty.exit_code);
  }
  report(8, "robustness to invalid files", pass, detail);
}

// -- criterion 9: throughput ----------------------------------------------------

void criterion_9() {
  testsupport::TempDir tmp("accept-perf");
  testsupport::write_performance_corpus(tmp.path(), 1000);

  AnalysisOptions options;
  options.input_paths = {tmp.path().string()};
  options.worker_count = 1;
  options.batch_size = 64;

  auto start = std::chrono::steady_clock::now();
  auto analysis = analyze(options);
  double elapsed = seconds_since(start);

  bool pass = analysis.files_analyzed == 1000 && elapsed < 30.0 &&
              analysis.parse_failures.empty() &&
              analysis.peak_live_trees <= options.batch_size * options.worker_count;
  std::string detail = fmt_seconds(elapsed) + ", peak trees " +
                       std::to_string(analysis.peak_live_trees);
  report(9, "throughput and memory bound", pass, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
  } else {
    std::cout << g_failures << " acceptance criteria failed\n";
  }
  return g_failures == 0 ? 0 : 1;
}
