#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testsupport {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only unless the command redirects
};

inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  int status = ::pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::string cli_path() { return PERFUME_CLI_PATH; }

inline std::string sh_quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace testsupport
