#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace corings::testing {

struct CliCase {
  std::string name;
  int expected_exit = 0;
  std::string workspace;
  std::string arguments;
};

struct CliRun {
  std::string output;
  int exit_code = -1;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

/// Lines of `name | exit | workspace | arguments`; '#' starts a comment.
inline std::vector<CliCase> load_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<CliCase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, '|')) parts.push_back(trim(part));
    if (parts.size() != 4) throw std::runtime_error("malformed case line: " + line);
    out.push_back({parts[0], std::stoi(parts[1]), parts[2], parts[3]});
  }
  return out;
}

/// Runs the binary from data_dir so reported paths are relative.
inline CliRun run_cli(const std::string& binary, const std::string& data_dir,
                      const std::string& arguments) {
  const std::string cmd = "cd '" + data_dir + "' && '" + binary + "' " + arguments;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for " + cmd);
  CliRun run;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) run.output.append(buf.data(), n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

inline CliRun run_case(const std::string& binary, const std::string& data_dir, const CliCase& c) {
  return run_cli(binary, data_dir, "--workspace " + c.workspace + " " + c.arguments);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace corings::testing
