#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "perfume/catalog/locale.hpp"
#include "perfume/engine/analyze.hpp"
#include "perfume/stats/corpus.hpp"

namespace perfume {

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw ConfigError("unknown output format: " + name);
}

namespace detail {

inline std::string csv_quote(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

// Report payload. Key names, key order, two-space indentation and LF line
// endings are all part of the format; timestamps never appear in it.
inline std::string serialize_report_json(const AnalysisReport& report,
                                         const LocaleRegistry& locales,
                                         const std::string& locale) {
  nlohmann::ordered_json doc;
  doc["tool"] = {{"name", report.tool_name}, {"version", report.tool_version}};
  nlohmann::ordered_json counts;
  for (int id = 1; id <= kPerfumeCount; ++id) {
    auto it = report.counts_by_perfume.find(id);
    counts[std::to_string(id)] =
        it == report.counts_by_perfume.end() ? 0 : it->second;
  }
  doc["summary"] = {{"files_analyzed", report.files_analyzed},
                    {"parse_failures", report.parse_failures.size()},
                    {"total_findings", report.total_findings()},
                    {"counts_by_perfume", counts}};
  doc["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : report.findings) {
    nlohmann::ordered_json jf;
    jf["perfume_id"] = f.perfume_id;
    jf["perfume_name"] = locales.localized(f.perfume_id, locale).name;
    jf["category"] = to_string(descriptor(f.perfume_id).category);
    jf["file"] = f.file;
    jf["begin_line"] = f.span.begin.line;
    jf["begin_column"] = f.span.begin.column;
    jf["end_line"] = f.span.end.line;
    jf["end_column"] = f.span.end.column;
    jf["element"] = f.element;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f.details) details[k] = v;
    jf["details"] = details;
    doc["findings"].push_back(std::move(jf));
  }
  doc["errors"] = nlohmann::ordered_json::array();
  for (const auto& e : report.parse_failures) {
    doc["errors"].push_back(nlohmann::ordered_json{
        {"file", e.file}, {"message", e.message}, {"line", e.position.line}});
  }
  return doc.dump(2) + "\n";
}

inline std::string serialize_report_csv(const AnalysisReport& report,
                                        const LocaleRegistry& locales,
                                        const std::string& locale) {
  std::ostringstream out;
  out << "perfume_id,perfume_name,category,file,begin_line,end_line,element\n";
  for (const auto& f : report.findings) {
    out << f.perfume_id << ","
        << detail::csv_quote(locales.localized(f.perfume_id, locale).name) << ","
        << detail::csv_quote(to_string(descriptor(f.perfume_id).category)) << ","
        << detail::csv_quote(f.file) << "," << f.span.begin.line << ","
        << f.span.end.line << "," << detail::csv_quote(f.element) << "\n";
  }
  return out.str();
}

inline std::string serialize_report_text(const AnalysisReport& report,
                                         const LocaleRegistry& locales,
                                         const std::string& locale) {
  std::ostringstream out;
  out << report.tool_name << " " << report.tool_version << "\n";
  out << "files analyzed: " << report.files_analyzed << "\n";
  out << "parse failures: " << report.parse_failures.size() << "\n";
  out << "total findings: " << report.total_findings() << "\n\n";
  for (int id = 1; id <= kPerfumeCount; ++id) {
    auto it = report.counts_by_perfume.find(id);
    std::size_t count = it == report.counts_by_perfume.end() ? 0 : it->second;
    out << (id < 10 ? " " : "") << id << "  "
        << locales.localized(id, locale).name << ": " << count << "\n";
  }
  if (!report.findings.empty()) out << "\n";
  std::string last_file;
  for (const auto& f : report.findings) {
    if (f.file != last_file) {
      out << f.file << ":\n";
      last_file = f.file;
    }
    out << "  " << f.span.begin.line << ":" << f.span.begin.column << " ["
        << f.perfume_id << "] " << locales.localized(f.perfume_id, locale).name
        << " - " << f.element << "\n";
  }
  for (const auto& e : report.parse_failures) {
    out << "error: " << e.file << ":" << e.position.line << " " << e.message
        << "\n";
  }
  return out.str();
}

inline std::string serialize_report(const AnalysisReport& report,
                                    OutputFormat format,
                                    const std::string& locale,
                                    const LocaleRegistry& locales = default_locales()) {
  switch (format) {
    case OutputFormat::Json:
      return serialize_report_json(report, locales, locale);
    case OutputFormat::Csv:
      return serialize_report_csv(report, locales, locale);
    case OutputFormat::Text:
      return serialize_report_text(report, locales, locale);
  }
  return "";
}

// -- statistics output ----------------------------------------------------------

inline double one_decimal(double value) {
  return std::stod(format_percent(value));
}

inline std::string serialize_stats_json(
    const std::vector<SubmissionRecord>& records,
    const std::vector<PrevalenceRow>& prevalence,
    const std::vector<CorrelationResult>& correlations,
    const LocaleRegistry& locales, const std::string& locale) {
  nlohmann::ordered_json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["corpus"] = {{"submissions", records.size()}};
  doc["prevalence"] = nlohmann::ordered_json::array();
  for (const auto& row : prevalence) {
    doc["prevalence"].push_back(nlohmann::ordered_json{
        {"id", row.id},
        {"name", locales.localized(row.id, locale).name},
        {"total", row.total},
        {"submission_percent", one_decimal(row.submission_percent)}});
  }
  doc["submissions"] = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json jr;
    jr["submission_id"] = rec.submission_id;
    jr["files"] = rec.files;
    jr["parse_failures"] = rec.parse_failures;
    jr["loc"] = {{"code", rec.loc.code},
                 {"comment", rec.loc.comment},
                 {"blank", rec.loc.blank}};
    jr["total_findings"] = rec.total_findings;
    nlohmann::ordered_json counts;
    for (int id = 1; id <= kPerfumeCount; ++id) {
      auto it = rec.counts_by_perfume.find(id);
      counts[std::to_string(id)] =
          it == rec.counts_by_perfume.end() ? 0 : it->second;
    }
    jr["counts_by_perfume"] = counts;
    if (auto ppl = perfumes_per_loc(rec)) jr["perfumes_per_loc"] = *ppl;
    else jr["perfumes_per_loc"] = nullptr;
    doc["submissions"].push_back(std::move(jr));
  }
  doc["correlations"] = nlohmann::ordered_json::array();
  for (const auto& c : correlations) {
    nlohmann::ordered_json jc;
    jc["x"] = c.x_name;
    jc["y"] = c.y_name;
    jc["n"] = c.n;
    if (c.r) jc["r"] = *c.r;
    else jc["error"] = c.error;
    doc["correlations"].push_back(std::move(jc));
  }
  return doc.dump(2) + "\n";
}

inline std::string serialize_stats_text(
    const std::vector<SubmissionRecord>& records,
    const std::vector<PrevalenceRow>& prevalence,
    const std::vector<CorrelationResult>& correlations,
    const LocaleRegistry& locales, const std::string& locale) {
  std::ostringstream out;
  out << "corpus statistics (" << records.size() << " submissions)\n\n";
  out << " ID     Total  Submissions  Name\n";
  for (const auto& row : prevalence) {
    std::string total = std::to_string(row.total);
    std::string percent =
        row.total == 0 ? "--" : format_percent(row.submission_percent) + "%";
    out << (row.id < 10 ? "  " : " ") << row.id;
    out << std::string(total.size() < 9 ? 9 - total.size() : 1, ' ') << total;
    out << std::string(percent.size() < 12 ? 12 - percent.size() : 1, ' ')
        << percent;
    out << "  " << locales.localized(row.id, locale).name << "\n";
  }
  if (!correlations.empty()) {
    out << "\ncorrelations:\n";
    for (const auto& c : correlations) {
      out << "  " << c.x_name << " vs " << c.y_name << ": ";
      if (c.r) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "r=%.6f n=%zu", *c.r, c.n);
        out << buf;
      } else {
        out << "error (" << c.error << ", n=" << c.n << ")";
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace perfume
