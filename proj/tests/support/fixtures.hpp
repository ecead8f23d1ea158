#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "perfume/source/parser.hpp"

namespace testsupport {

inline std::filesystem::path fixtures_dir() {
  return std::filesystem::path(PERFUME_FIXTURES_DIR);
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void spit(const std::filesystem::path& p, const std::string& content) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline perfume::CompilationUnit parse_fixture(const std::string& group,
                                              const std::string& name) {
  auto path = fixtures_dir() / group / name;
  return perfume::parse_compilation_unit(slurp(path), name);
}

// All .java files in a fixture group, sorted by name.
inline std::vector<std::filesystem::path> fixture_files(const std::string& group) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(fixtures_dir() / group))
    if (e.path().extension() == ".java") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Temporary directory wiped on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    base_ = std::filesystem::temp_directory_path() /
            ("perfume-test-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(base_);
    std::filesystem::create_directories(base_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(base_, ec);
  }
  const std::filesystem::path& path() const { return base_; }

 private:
  std::filesystem::path base_;
};

}  // namespace testsupport
