#pragma once

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "perfume/catalog/catalog.hpp"
#include "perfume/detect/detectors.hpp"
#include "perfume/engine/discover.hpp"
#include "perfume/source/index.hpp"
#include "perfume/source/parser.hpp"
#include "perfume/version.hpp"

namespace perfume {

struct ParseFailure {
  std::string file;
  std::string message;
  SourcePosition position;
};

struct AnalysisReport {
  std::vector<Finding> findings;  // sorted by (file, begin, perfume id)
  std::map<int, std::size_t> counts_by_perfume;  // keys 1..20, always present
  std::size_t files_analyzed = 0;
  std::vector<ParseFailure> parse_failures;
  std::vector<std::string> warnings;
  std::string tool_name = kToolName;
  std::string tool_version = kToolVersion;
  std::chrono::system_clock::time_point started;
  std::chrono::system_clock::time_point finished;
  // Instrumentation for the batching memory bound; not serialized.
  std::size_t peak_live_trees = 0;

  std::size_t total_findings() const { return findings.size(); }
};

namespace detail {

inline bool read_file(const std::filesystem::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

// Tracks how many parsed trees are alive at once.
class TreeGauge {
 public:
  void add() {
    std::size_t now = ++live_;
    std::size_t prev = peak_.load();
    while (now > prev && !peak_.compare_exchange_weak(prev, now)) {
    }
  }
  void remove() { --live_; }
  std::size_t peak() const { return peak_.load(); }

 private:
  std::atomic<std::size_t> live_{0};
  std::atomic<std::size_t> peak_{0};
};

}  // namespace detail

// Runs the full pipeline: discovery, index construction over every input
// (plus dependency roots), then batched parse+detect. Two passes keep at
// most batch_size x worker_count trees alive: the index pass summarizes
// each tree and drops it before the next file is parsed.
inline AnalysisReport analyze(const AnalysisOptions& options) {
  if (options.batch_size < 1) throw ConfigError("batch size must be >= 1");
  if (options.worker_count < 1) throw ConfigError("worker count must be >= 1");

  AnalysisReport report;
  report.started = std::chrono::system_clock::now();
  for (int id = 1; id <= kPerfumeCount; ++id) report.counts_by_perfume[id] = 0;

  std::vector<DiscoveredFile> files =
      discover_source_files(options, &report.warnings);

  detail::TreeGauge gauge;

  // Pass 1: build the cross-file index, one tree at a time. Only the type
  // summaries and import contexts survive this loop.
  ProjectIndex index;
  std::vector<bool> usable(files.size(), false);
  {
    IndexBuilder builder;
    for (const auto& dep_root : options.dependency_paths) {
      AnalysisOptions dep_options;
      dep_options.input_paths = {dep_root};
      dep_options.ignore_globs = options.ignore_globs;
      dep_options.default_ignores_enabled = options.default_ignores_enabled;
      for (const auto& df : discover_source_files(dep_options, &report.warnings)) {
        std::string text;
        if (!detail::read_file(df.absolute, text)) {
          report.warnings.push_back("cannot read dependency file " + df.relative);
          continue;
        }
        CompilationUnit unit = parse_compilation_unit(text, df.relative);
        gauge.add();
        builder.add_unit(unit, TypeOrigin::Dependency);
        gauge.remove();
      }
    }

    for (std::size_t i = 0; i < files.size(); ++i) {
      std::string text;
      if (!detail::read_file(files[i].absolute, text)) {
        report.warnings.push_back("cannot read file " + files[i].relative +
                                  ", skipped");
        continue;
      }
      CompilationUnit unit = parse_compilation_unit(text, files[i].relative);
      gauge.add();
      for (const auto& w : unit.warnings) report.warnings.push_back(w);
      ++report.files_analyzed;
      if (unit.parsed()) {
        usable[i] = true;
        builder.add_unit(unit, TypeOrigin::Corpus);
      } else {
        report.parse_failures.push_back(
            {unit.path, unit.error_message, unit.error_position});
      }
      gauge.remove();
    }
    index = builder.finish();
  }

  // Pass 2: batched detection.
  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < files.size(); ++i)
    if (usable[i]) work.push_back(i);

  for (std::size_t batch_start = 0; batch_start < work.size();
       batch_start += options.batch_size) {
    std::size_t batch_end =
        std::min(batch_start + options.batch_size, work.size());
    std::size_t batch_count = batch_end - batch_start;
    std::vector<std::vector<Finding>> slots(batch_count);
    std::mutex warn_mutex;
    std::atomic<std::size_t> next{0};

    auto run_worker = [&]() {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= batch_count) break;
        const DiscoveredFile& file = files[work[batch_start + k]];
        std::string text;
        if (!detail::read_file(file.absolute, text)) {
          std::lock_guard<std::mutex> lock(warn_mutex);
          report.warnings.push_back("cannot read file " + file.relative +
                                    ", skipped");
          continue;
        }
        CompilationUnit unit = parse_compilation_unit(text, file.relative);
        gauge.add();
        slots[k] = run_all_detectors(unit, index);
        gauge.remove();
      }
    };

    std::size_t threads = std::min(options.worker_count, batch_count);
    if (threads <= 1) {
      run_worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run_worker);
      for (auto& th : pool) th.join();
    }
    for (auto& slot : slots)
      for (auto& f : slot) report.findings.push_back(std::move(f));
  }

  std::stable_sort(report.findings.begin(), report.findings.end(), finding_order);
  for (const auto& f : report.findings) report.counts_by_perfume[f.perfume_id]++;
  for (const auto& w : index.warnings) report.warnings.push_back(w);
  report.peak_live_trees = gauge.peak();
  report.finished = std::chrono::system_clock::now();
  return report;
}

}  // namespace perfume
