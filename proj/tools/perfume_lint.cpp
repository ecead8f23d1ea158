// perfume-lint: detects positive Java code patterns and reports them in
// JSON, CSV or plain text, plus a corpus statistics mode.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "perfume/perfume.hpp"

namespace {

struct CommonOutput {
  std::string format = "json";
  std::string output_file;
  std::string locale = "en";
  std::string locale_file;
};

perfume::LocaleRegistry load_locales(const CommonOutput& opts) {
  perfume::LocaleRegistry registry;
  if (!opts.locale_file.empty()) {
    std::ifstream in(opts.locale_file, std::ios::binary);
    if (!in) throw perfume::ConfigError("cannot read locale file: " + opts.locale_file);
    std::string text{std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>()};
    std::filesystem::path p(opts.locale_file);
    std::string tag = p.stem().string();
    std::vector<std::string> warnings;
    registry.add_bundle(perfume::parse_locale_bundle(text, tag, &warnings));
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  }
  if (!registry.has_locale(opts.locale)) {
    std::string language = opts.locale;
    auto dash = language.find('-');
    if (dash != std::string::npos) language = language.substr(0, dash);
    if (!registry.has_locale(language))
      std::cerr << "warning: no bundle for locale '" << opts.locale
                << "', falling back to en\n";
  }
  return registry;
}

int emit(const std::string& payload, const std::string& output_file) {
  if (output_file.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(output_file, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << output_file << "\n";
    return 1;
  }
  out << payload;
  return 0;
}

long elapsed_ms(std::chrono::system_clock::time_point a,
                std::chrono::system_clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
}

int run_analyze(const perfume::AnalysisOptions& options, const CommonOutput& out) {
  perfume::OutputFormat format = perfume::parse_output_format(out.format);
  perfume::LocaleRegistry locales = load_locales(out);
  perfume::AnalysisReport report = perfume::analyze(options);
  std::string payload =
      perfume::serialize_report(report, format, out.locale, locales);
  int rc = emit(payload, out.output_file);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "analyzed " << report.files_analyzed << " files, "
            << report.total_findings() << " findings in "
            << elapsed_ms(report.started, report.finished) << " ms\n";
  return rc;
}

int run_stats(const std::string& corpus_root,
              const perfume::AnalysisOptions& engine_options,
              const std::string& metrics_file,
              const std::vector<std::string>& correlate_specs,
              const CommonOutput& out) {
  if (out.format == "csv")
    throw perfume::ConfigError("stats supports json or text output");
  perfume::OutputFormat format = perfume::parse_output_format(out.format);
  perfume::LocaleRegistry locales = load_locales(out);

  auto started = std::chrono::system_clock::now();
  std::vector<std::string> warnings;
  auto records = perfume::aggregate_corpus(corpus_root, engine_options, &warnings);
  if (records.empty())
    throw perfume::ConfigError("corpus root has no submission directories: " +
                               corpus_root);
  auto prevalence = perfume::prevalence_table(records);

  std::vector<perfume::MetricsRow> metrics;
  bool have_metrics = !metrics_file.empty();
  if (have_metrics) {
    std::ifstream in(metrics_file, std::ios::binary);
    if (!in) throw perfume::ConfigError("cannot read metrics file: " + metrics_file);
    std::string text{std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>()};
    metrics = perfume::parse_metrics_csv(text, &warnings);
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& spec : correlate_specs) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw perfume::ConfigError("--correlate expects x:y, got '" + spec + "'");
    pairs.emplace_back(spec.substr(0, colon), spec.substr(colon + 1));
  }
  if (pairs.empty() && have_metrics) {
    bool any_smells = false;
    for (const auto& m : metrics)
      if (m.smells) any_smells = true;
    for (const char* x : {"perfume_total", "perfumes_per_loc", "loc"})
      for (const char* y : {"functionality", "readability", "grade"})
        pairs.emplace_back(x, y);
    if (any_smells) {
      pairs.emplace_back("smells", "functionality");
      pairs.emplace_back("smells", "readability");
      pairs.emplace_back("smells", "grade");
      pairs.emplace_back("loc", "smells");
    }
  }
  std::vector<perfume::CorrelationResult> correlations;
  if (!pairs.empty()) {
    if (!have_metrics)
      throw perfume::ConfigError("--correlate requires --metrics");
    correlations = perfume::correlate(records, metrics, pairs, &warnings);
  }

  std::string payload =
      format == perfume::OutputFormat::Json
          ? perfume::serialize_stats_json(records, prevalence, correlations,
                                          locales, out.locale)
          : perfume::serialize_stats_text(records, prevalence, correlations,
                                          locales, out.locale);
  int rc = emit(payload, out.output_file);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "aggregated " << records.size() << " submissions in "
            << elapsed_ms(started, std::chrono::system_clock::now()) << " ms\n";
  return rc;
}

int run_list(const CommonOutput& out) {
  perfume::LocaleRegistry locales = load_locales(out);
  for (const auto& d : perfume::catalog()) {
    std::cout << d.id << "\t" << locales.localized(d.id, out.locale).name << "\t"
              << perfume::to_string(d.category) << "\t" << d.kinds_display()
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfume-lint: positive-pattern linter for Java source"};
  app.require_subcommand(1);

  perfume::AnalysisOptions options;
  CommonOutput analyze_out;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Analyze Java files or directories");
  analyze_cmd->add_option("paths", options.input_paths, "Input files/directories")
      ->required();
  analyze_cmd->add_option("--format", analyze_out.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  analyze_cmd->add_option("--output", analyze_out.output_file,
                          "Write the report to a file instead of stdout");
  analyze_cmd->add_option("--batch-size", options.batch_size,
                          "Files parsed per batch")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--dependencies", options.dependency_paths,
                          "Additional source roots for type resolution");
  analyze_cmd->add_option("--ignore", options.ignore_globs,
                          "Glob of paths to skip (repeatable)");
  analyze_cmd->add_flag_callback(
      "--no-default-ignores",
      [&options] { options.default_ignores_enabled = false; },
      "Do not skip build/target/out/bin/.git/generated directories");
  analyze_cmd->add_option("--locale", analyze_out.locale, "Locale tag, e.g. en, de");
  analyze_cmd->add_option("--locale-file", analyze_out.locale_file,
                          "Extra locale bundle (key=value, named <tag>.properties)");
  analyze_cmd->add_option("--workers", options.worker_count, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string corpus_root;
  std::string metrics_file;
  std::vector<std::string> correlate_specs;
  perfume::AnalysisOptions stats_engine;
  CommonOutput stats_out;
  auto* stats_cmd = app.add_subcommand(
      "stats", "Aggregate per-submission statistics over a corpus");
  stats_cmd->add_option("corpus-root", corpus_root,
                        "Directory whose subdirectories are submissions")
      ->required();
  stats_cmd->add_option("--metrics", metrics_file,
                        "CSV with submission_id,functionality,readability,grade[,smells]");
  stats_cmd->add_option("--correlate", correlate_specs,
                        "Variable pair x:y to correlate (repeatable)");
  stats_cmd->add_option("--format", stats_out.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  stats_cmd->add_option("--output", stats_out.output_file,
                        "Write the report to a file instead of stdout");
  stats_cmd->add_option("--batch-size", stats_engine.batch_size,
                        "Files parsed per batch")
      ->check(CLI::PositiveNumber);
  stats_cmd->add_option("--ignore", stats_engine.ignore_globs,
                        "Glob of paths to skip (repeatable)");
  stats_cmd->add_flag_callback(
      "--no-default-ignores",
      [&stats_engine] { stats_engine.default_ignores_enabled = false; },
      "Do not skip build/target/out/bin/.git/generated directories");
  stats_cmd->add_option("--workers", stats_engine.worker_count, "Worker threads")
      ->check(CLI::PositiveNumber);
  stats_cmd->add_option("--locale", stats_out.locale, "Locale tag");
  stats_cmd->add_option("--locale-file", stats_out.locale_file,
                        "Extra locale bundle file");

  CommonOutput list_out;
  auto* list_cmd =
      app.add_subcommand("list-perfumes", "List the perfume catalog");
  list_cmd->add_option("--locale", list_out.locale, "Locale tag");
  list_cmd->add_option("--locale-file", list_out.locale_file,
                       "Extra locale bundle file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(options, analyze_out);
    if (stats_cmd->parsed())
      return run_stats(corpus_root, stats_engine, metrics_file, correlate_specs,
                       stats_out);
    if (list_cmd->parsed()) return run_list(list_out);
    return 1;
  } catch (const perfume::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
