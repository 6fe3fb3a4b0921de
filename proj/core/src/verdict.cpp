#include "corings/verdict.hpp"

#include <algorithm>

#include "corings/error.hpp"

namespace corings {

std::string_view to_string(Condition::Status status) {
  switch (status) {
    case Condition::Status::kPass: return "pass";
    case Condition::Status::kFail: return "fail";
    case Condition::Status::kSkipped: return "skipped";
  }
  return "unknown";
}

bool Verdict::ok() const { return first_failure() == nullptr; }

const Condition* Verdict::first_failure() const {
  auto it = std::find_if(conditions_.begin(), conditions_.end(),
                         [](const Condition& c) { return c.status == Condition::Status::kFail; });
  return it == conditions_.end() ? nullptr : &*it;
}

std::string Verdict::failed_condition() const {
  const Condition* c = first_failure();
  return c ? c->name : std::string();
}

std::string Verdict::witness() const {
  const Condition* c = first_failure();
  return c ? c->witness : std::string();
}

void Verdict::pass(std::string name) {
  conditions_.push_back({std::move(name), Condition::Status::kPass, {}, {}});
}

void Verdict::fail(std::string name, std::string witness, std::string detail) {
  conditions_.push_back(
      {std::move(name), Condition::Status::kFail, std::move(witness), std::move(detail)});
}

void Verdict::skip(std::string name) {
  conditions_.push_back({std::move(name), Condition::Status::kSkipped, {}, {}});
}

void Verdict::absorb(const Verdict& other, const std::string& prefix) {
  for (Condition c : other.conditions_) {
    c.name = prefix + c.name;
    conditions_.push_back(std::move(c));
  }
}

std::string Verdict::summary() const {
  const Condition* c = first_failure();
  if (!c) return "pass";
  std::string s = c->name + " failed";
  if (!c->witness.empty()) s += " at " + c->witness;
  if (!c->detail.empty()) s += " (" + c->detail + ")";
  return s;
}

bool fail_from(Condition& c, const Verdict& v, const std::string& context) {
  const Condition* f = v.first_failure();
  if (!f) return true;
  c.status = Condition::Status::kFail;
  c.witness = f->witness;
  c.detail = (context.empty() ? std::string() : context + " ") + f->name +
             (f->detail.empty() ? std::string() : ": " + f->detail);
  return false;
}

std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

bool compare_rows(Condition& c, const Mat& lhs, const Mat& rhs,
                  const std::vector<std::string>& row_labels, const std::string& context) {
  require_dims(lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols(),
               "comparison of " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                   " with " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    const auto& a = lhs.row(i);
    const auto& b = rhs.row(i);
    bool same = a.size() == b.size();
    for (std::size_t k = 0; same && k < a.size(); ++k) {
      same = a[k].col == b[k].col && a[k].value == b[k].value;
    }
    if (!same) {
      c.status = Condition::Status::kFail;
      c.witness = i < row_labels.size() ? row_labels[i] : std::to_string(i);
      c.detail = (context.empty() ? std::string() : context + ": ") + "lhs=" + format_row(lhs, i) +
                 " rhs=" + format_row(rhs, i);
      return false;
    }
  }
  return true;
}

}  // namespace corings
