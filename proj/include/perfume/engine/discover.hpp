#pragma once

#include <algorithm>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfume {

// Raised for unusable configuration (missing input path, bad flag values).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalysisOptions {
  std::vector<std::string> input_paths;
  std::vector<std::string> ignore_globs;
  bool default_ignores_enabled = true;
  std::size_t batch_size = 64;
  std::vector<std::string> dependency_paths;
  std::string locale = "en";
  std::size_t worker_count = 1;
};

namespace detail {

inline const std::set<std::string>& default_ignored_dirs() {
  static const std::set<std::string> dirs = {"build", "target", "out",
                                             "bin", ".git", "generated"};
  return dirs;
}

// Glob matching: '*' and '?' stay within one path segment, "**" crosses
// segments. A pattern without '/' also matches any single path component.
inline bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0;
  std::size_t star_p = std::string::npos, star_t = 0;
  bool star_crosses = false;
  while (t < text.size()) {
    if (p < pattern.size() &&
        (pattern[p] == text[t] || (pattern[p] == '?' && text[t] != '/'))) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star_crosses = (p + 1 < pattern.size() && pattern[p + 1] == '*');
      star_p = p;
      p += star_crosses ? 2 : 1;
      star_t = t;
    } else if (star_p != std::string::npos &&
               (star_crosses || text[star_t] != '/')) {
      ++star_t;
      t = star_t;
      p = star_p + (star_crosses ? 2 : 1);
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

inline bool matches_ignore(const std::string& rel_path,
                           const std::vector<std::string>& globs) {
  for (const auto& g : globs) {
    if (glob_match(g, rel_path)) return true;
    if (g.find('/') == std::string::npos) {
      std::size_t start = 0;
      for (;;) {
        std::size_t slash = rel_path.find('/', start);
        std::string component = rel_path.substr(
            start, slash == std::string::npos ? std::string::npos : slash - start);
        if (glob_match(g, component)) return true;
        if (slash == std::string::npos) break;
        start = slash + 1;
      }
    }
  }
  return false;
}

inline std::string to_slash_path(const std::filesystem::path& p) {
  std::string s = p.generic_string();
  return s;
}

}  // namespace detail

// One discovered source file: absolute location plus the relative path it
// is reported under.
struct DiscoveredFile {
  std::filesystem::path absolute;
  std::string relative;
};

inline std::vector<DiscoveredFile> discover_source_files(
    const AnalysisOptions& options, std::vector<std::string>* warnings = nullptr) {
  namespace fs = std::filesystem;
  std::vector<DiscoveredFile> out;
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };

  for (const auto& input : options.input_paths) {
    fs::path root(input);
    std::error_code ec;
    if (!fs::exists(root, ec))
      throw ConfigError("input path does not exist: " + input);
    if (fs::is_regular_file(root, ec)) {
      std::string rel = detail::to_slash_path(root.filename());
      if (root.extension() == ".java" &&
          !detail::matches_ignore(rel, options.ignore_globs))
        out.push_back({fs::absolute(root), rel});
      continue;
    }

    std::vector<std::pair<fs::path, std::string>> stack = {{root, ""}};
    while (!stack.empty()) {
      auto [dir, rel_dir] = stack.back();
      stack.pop_back();
      std::error_code iter_ec;
      fs::directory_iterator it(dir, iter_ec), end;
      if (iter_ec) {
        warn("cannot read directory " + detail::to_slash_path(dir) + ": " +
             iter_ec.message());
        continue;
      }
      for (; it != end; it.increment(iter_ec)) {
        if (iter_ec) {
          warn("directory iteration failed under " + detail::to_slash_path(dir));
          break;
        }
        const fs::path& entry = it->path();
        std::string name = entry.filename().string();
        std::string rel = rel_dir.empty() ? name : rel_dir + "/" + name;
        std::error_code type_ec;
        if (fs::is_directory(entry, type_ec)) {
          if (options.default_ignores_enabled &&
              detail::default_ignored_dirs().count(name))
            continue;
          if (detail::matches_ignore(rel, options.ignore_globs)) continue;
          stack.emplace_back(entry, rel);
        } else if (fs::is_regular_file(entry, type_ec)) {
          if (entry.extension() != ".java") continue;
          if (detail::matches_ignore(rel, options.ignore_globs)) continue;
          out.push_back({entry, rel});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DiscoveredFile& a, const DiscoveredFile& b) {
              return a.relative < b.relative;
            });
  return out;
}

// Relative-path view, the order contract exposed to callers.
inline std::vector<std::string> discover_files(
    const AnalysisOptions& options, std::vector<std::string>* warnings = nullptr) {
  std::vector<std::string> out;
  for (auto& f : discover_source_files(options, warnings))
    out.push_back(f.relative);
  return out;
}

}  // namespace perfume
