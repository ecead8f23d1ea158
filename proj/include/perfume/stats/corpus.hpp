#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "perfume/catalog/catalog.hpp"
#include "perfume/engine/analyze.hpp"
#include "perfume/stats/loc.hpp"
#include "perfume/stats/pearson.hpp"

namespace perfume {

// Per-submission aggregate produced by running the engine over one
// submission directory.
struct SubmissionRecord {
  std::string submission_id;  // directory name
  std::map<int, std::size_t> counts_by_perfume;
  std::size_t total_findings = 0;
  LocBreakdown loc;
  std::size_t files = 0;
  std::size_t parse_failures = 0;
};

struct MetricsRow {
  std::string submission_id;
  double functionality = 0.0;  // 1..6
  double readability = 0.0;    // 1..6
  double grade = 0.0;          // 1..5
  std::optional<double> smells;
};

struct CorrelationResult {
  std::string x_name;
  std::string y_name;
  std::optional<double> r;  // unset when the pair failed
  std::size_t n = 0;
  std::string error;  // which precondition failed, empty on success
};

struct PrevalenceRow {
  int id = 0;
  std::size_t total = 0;
  double submission_percent = 0.0;  // exact; render with one decimal
};

inline std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

// One record per immediate subdirectory of the corpus root, sorted by
// submission id. LoC is counted over every discovered .java file, parse
// failures included.
inline std::vector<SubmissionRecord> aggregate_corpus(
    const std::string& corpus_root, const AnalysisOptions& options,
    std::vector<std::string>* warnings = nullptr) {
  namespace fs = std::filesystem;
  fs::path root(corpus_root);
  std::error_code ec;
  if (!fs::exists(root, ec) || !fs::is_directory(root, ec))
    throw ConfigError("corpus root is not a directory: " + corpus_root);

  std::vector<fs::path> submissions;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) submissions.push_back(entry.path());
  }
  std::sort(submissions.begin(), submissions.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });

  std::vector<SubmissionRecord> records;
  for (const auto& sub : submissions) {
    SubmissionRecord rec;
    rec.submission_id = sub.filename().string();

    AnalysisOptions sub_options = options;
    sub_options.input_paths = {sub.string()};
    AnalysisReport report = analyze(sub_options);

    rec.counts_by_perfume = report.counts_by_perfume;
    rec.total_findings = report.total_findings();
    rec.files = report.files_analyzed;
    rec.parse_failures = report.parse_failures.size();

    AnalysisOptions loc_options = sub_options;
    for (const auto& f : discover_source_files(loc_options)) {
      std::string text;
      if (detail::read_file(f.absolute, text)) rec.loc += count_loc(text);
    }

    if (rec.files == 0 && warnings)
      warnings->push_back("submission '" + rec.submission_id +
                          "' contains no Java files");
    if (warnings)
      for (const auto& w : report.warnings) warnings->push_back(w);
    records.push_back(std::move(rec));
  }
  return records;
}

// Per-perfume totals and the share of submissions containing the perfume.
inline std::vector<PrevalenceRow> prevalence_table(
    const std::vector<SubmissionRecord>& records) {
  if (records.empty())
    throw StatsError("prevalence_table: no submission records");
  std::vector<PrevalenceRow> rows;
  for (int id = 1; id <= kPerfumeCount; ++id) {
    PrevalenceRow row;
    row.id = id;
    std::size_t present = 0;
    for (const auto& rec : records) {
      auto it = rec.counts_by_perfume.find(id);
      std::size_t count = it == rec.counts_by_perfume.end() ? 0 : it->second;
      row.total += count;
      if (count > 0) ++present;
    }
    row.submission_percent =
        100.0 * static_cast<double>(present) / static_cast<double>(records.size());
    rows.push_back(row);
  }
  return rows;
}

// Findings per code line; absent when the submission has no code lines.
inline std::optional<double> perfumes_per_loc(const SubmissionRecord& record) {
  if (record.loc.code == 0) return std::nullopt;
  return static_cast<double>(record.total_findings) /
         static_cast<double>(record.loc.code);
}

// -- metrics CSV ----------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

// Header `submission_id,functionality,readability,grade,smells`; the
// smells column is optional, unknown columns are ignored with a warning,
// and rows with grades outside their stated ranges are dropped.
inline std::vector<MetricsRow> parse_metrics_csv(
    const std::string& text, std::vector<std::string>* warnings = nullptr) {
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back("metrics: " + msg);
  };
  std::vector<MetricsRow> rows;
  std::size_t start = 0;
  int line_no = 0;
  std::map<std::string, std::size_t> columns;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (line_no == 1) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        std::string name = detail::trim(fields[i]);
        static const std::set<std::string> known = {
            "submission_id", "functionality", "readability", "grade", "smells"};
        if (!known.count(name)) {
          warn("unknown column '" + name + "' ignored");
          continue;
        }
        columns[name] = i;
      }
      for (const char* required :
           {"submission_id", "functionality", "readability", "grade"}) {
        if (!columns.count(required))
          throw ConfigError("metrics CSV is missing column '" +
                            std::string(required) + "'");
      }
      continue;
    }
    auto get = [&](const std::string& col) -> std::optional<std::string> {
      auto it = columns.find(col);
      if (it == columns.end() || it->second >= fields.size()) return std::nullopt;
      std::string v = detail::trim(fields[it->second]);
      if (v.empty()) return std::nullopt;
      return v;
    };
    MetricsRow row;
    auto id = get("submission_id");
    if (!id) {
      warn("line " + std::to_string(line_no) + ": missing submission_id, dropped");
      continue;
    }
    row.submission_id = *id;
    try {
      auto f = get("functionality");
      auto rd = get("readability");
      auto g = get("grade");
      if (!f || !rd || !g) {
        warn("line " + std::to_string(line_no) + ": incomplete row dropped");
        continue;
      }
      row.functionality = std::stod(*f);
      row.readability = std::stod(*rd);
      row.grade = std::stod(*g);
      if (auto s = get("smells")) row.smells = std::stod(*s);
    } catch (const std::exception&) {
      warn("line " + std::to_string(line_no) + ": unparsable number, row dropped");
      continue;
    }
    if (row.functionality < 1.0 || row.functionality > 6.0 ||
        row.readability < 1.0 || row.readability > 6.0 || row.grade < 1.0 ||
        row.grade > 5.0) {
      warn("line " + std::to_string(line_no) + ": value out of range, row dropped");
      continue;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// -- correlation over joined records ---------------------------------------------

inline const std::vector<std::string>& correlation_variables() {
  static const std::vector<std::string> names = {
      "perfume_total", "perfumes_per_loc", "loc",  "smells",
      "functionality", "readability",      "grade"};
  return names;
}

// Joins submission records with metrics rows on submission id and
// computes Pearson's r for each requested variable pair.
inline std::vector<CorrelationResult> correlate(
    const std::vector<SubmissionRecord>& records,
    const std::vector<MetricsRow>& metrics,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    std::vector<std::string>* warnings = nullptr) {
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };

  std::map<std::string, const MetricsRow*> by_id;
  for (const auto& m : metrics) by_id[m.submission_id] = &m;

  struct Joined {
    const SubmissionRecord* rec;
    const MetricsRow* row;
  };
  std::vector<Joined> joined;
  std::set<std::string> matched;
  for (const auto& rec : records) {
    auto it = by_id.find(rec.submission_id);
    if (it == by_id.end()) {
      warn("submission '" + rec.submission_id + "' has no metrics row, dropped");
      continue;
    }
    matched.insert(rec.submission_id);
    joined.push_back({&rec, it->second});
  }
  for (const auto& m : metrics)
    if (!matched.count(m.submission_id))
      warn("metrics row '" + m.submission_id + "' matches no submission, dropped");

  auto value_of = [](const std::string& name,
                     const Joined& j) -> std::optional<double> {
    if (name == "perfume_total")
      return static_cast<double>(j.rec->total_findings);
    if (name == "perfumes_per_loc") return perfumes_per_loc(*j.rec);
    if (name == "loc") return static_cast<double>(j.rec->loc.code);
    if (name == "smells") return j.row->smells;
    if (name == "functionality") return j.row->functionality;
    if (name == "readability") return j.row->readability;
    if (name == "grade") return j.row->grade;
    return std::nullopt;
  };

  std::vector<CorrelationResult> results;
  for (const auto& [x_name, y_name] : pairs) {
    CorrelationResult res;
    res.x_name = x_name;
    res.y_name = y_name;
    const auto& known = correlation_variables();
    if (std::find(known.begin(), known.end(), x_name) == known.end() ||
        std::find(known.begin(), known.end(), y_name) == known.end()) {
      res.error = "unknown variable";
      results.push_back(std::move(res));
      continue;
    }
    std::vector<double> xs, ys;
    for (const auto& j : joined) {
      auto x = value_of(x_name, j);
      auto y = value_of(y_name, j);
      if (x && y) {
        xs.push_back(*x);
        ys.push_back(*y);
      }
    }
    res.n = xs.size();
    if (xs.size() < 2) {
      res.error = "joined sample has fewer than 2 observations";
      results.push_back(std::move(res));
      continue;
    }
    try {
      res.r = pearson(xs, ys);
    } catch (const StatsError& e) {
      res.error = e.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace perfume
