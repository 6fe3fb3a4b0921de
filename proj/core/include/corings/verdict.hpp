#pragma once

#include <string>
#include <vector>

#include "corings/matrix.hpp"

namespace corings {

/// Outcome of one named condition inside a check.
struct Condition {
  enum class Status { kPass, kFail, kSkipped };

  std::string name;
  Status status = Status::kPass;
  std::string witness;
  std::string detail;
};

std::string_view to_string(Condition::Status status);

/// Result of an axiom check. Conditions are evaluated in a fixed order and
/// evaluation stops at the first failure; later conditions are recorded as
/// skipped, so the verdict carries exactly one witness.
class Verdict {
 public:
  Verdict() = default;

  bool ok() const;
  explicit operator bool() const { return ok(); }

  const std::vector<Condition>& conditions() const noexcept { return conditions_; }
  const Condition* first_failure() const;
  /// Name of the first failing condition, empty when ok.
  std::string failed_condition() const;
  std::string witness() const;

  void pass(std::string name);
  void fail(std::string name, std::string witness, std::string detail = {});
  void skip(std::string name);
  /// Appends the conditions of a nested check, prefixing their names.
  void absorb(const Verdict& other, const std::string& prefix = {});

  std::string summary() const;

 private:
  std::vector<Condition> conditions_;
};

/// Runs named conditions in order, stopping at the first failure.
class CheckSequence {
 public:
  template <typename Fn>
  CheckSequence& then(const std::string& name, Fn&& fn) {
    if (failed_) {
      verdict_.skip(name);
      return *this;
    }
    Condition c{name, Condition::Status::kPass, {}, {}};
    fn(c);
    if (c.status == Condition::Status::kFail) {
      failed_ = true;
      verdict_.fail(c.name, c.witness, c.detail);
    } else {
      verdict_.pass(c.name);
    }
    return *this;
  }

  Verdict done() { return std::move(verdict_); }

 private:
  Verdict verdict_;
  bool failed_ = false;
};

/// Marks c failed with the first failure of a nested verdict; returns v.ok().
bool fail_from(Condition& c, const Verdict& v, const std::string& context = {});

/// Labels e_0..e_{n-1} unless given.
std::vector<std::string> default_labels(const std::string& stem, std::size_t n);

/// Marks c failed at the first row where lhs and rhs differ; returns true
/// when they agree.
bool compare_rows(Condition& c, const Mat& lhs, const Mat& rhs,
                  const std::vector<std::string>& row_labels, const std::string& context = {});

}  // namespace corings
