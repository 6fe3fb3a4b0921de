#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringctl/workspace.hpp"

namespace coringctl {

/// Ordered key/value report; rendered as `key: value` lines or as JSON.
class Report {
 public:
  void add(std::string key, std::string value);
  void add_verdict(const corings::Verdict& v, const std::string& prefix = {});
  std::string text() const;
  std::string json() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::optional<std::string> find(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInputError = 2 };

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::optional<std::string> out;
  std::optional<std::string> save;
  std::uint64_t seed = 1;
  std::size_t trials = 25;
};

struct Outcome {
  Report report;
  int exit_code = kExitPass;
};

/// Runs one command against a loaded workspace. Library errors are turned
/// into reports: input problems exit 2, failed constructions exit 1.
Outcome run_command(const Workspace& ws, const Invocation& inv);

/// Report for a workspace that failed to load.
Outcome load_failure(const std::string& command, const corings::Error& e);

/// Whether an error kind describes bad input rather than a failed check.
bool is_input_error(corings::ErrorKind kind);

}  // namespace coringctl
