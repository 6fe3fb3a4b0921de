#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "corings/corings.hpp"

namespace coringctl {

using Json = nlohmann::ordered_json;

/// Named objects of one kind, kept in declaration order.
template <typename T>
class Registry {
 public:
  explicit Registry(std::string section) : section_(std::move(section)) {}

  bool contains(const std::string& name) const { return items_.count(name) != 0; }
  const T& get(const std::string& name) const {
    auto it = items_.find(name);
    if (it == items_.end()) {
      throw corings::Error(corings::ErrorKind::kUnknownReference,
                           "unknown " + section_ + " \"" + name + "\"");
    }
    return it->second;
  }
  void add(const std::string& name, T value) {
    if (!items_.emplace(name, std::move(value)).second) {
      throw corings::Error(corings::ErrorKind::kSyntax,
                           "duplicate " + section_ + " \"" + name + "\"");
    }
    order_.push_back(name);
  }
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::string section_;
  std::map<std::string, T> items_;
  std::vector<std::string> order_;
};

/// Parsed workspace. Loading checks structure, shapes and references; the
/// axioms are left to the `check` command.
struct Workspace {
  corings::Field field = corings::Field::rationals();
  Registry<corings::AlgebraPtr> algebras{"algebra"};
  Registry<corings::AlgebraMorphism> algebra_morphisms{"algebra morphism"};
  Registry<corings::Bimodule> modules{"module"};
  Registry<corings::Coring> corings{"coring"};
  Registry<corings::ExtMorphism> extensions{"extension"};
  Registry<corings::CoringsMorphism> corings_morphisms{"corings morphism"};
  Json source;
};

/// Throws corings::Error (kSyntax, kUnknownReference, kInvalidField, shape
/// errors) prefixed with the offending object's path.
Workspace parse_workspace(const std::string& text, const std::string& origin = "<input>");
Workspace load_workspace(const std::string& path);

Json dump_matrix(const corings::Mat& m);
Json dump_algebra(const corings::Algebra& a);
/// Algebras are referenced by name and must already be present in `out`.
Json dump_module(const corings::Bimodule& m, const std::string& left, const std::string& right);
Json dump_coring(const corings::Coring& c, const std::string& carrier);

/// Adds a coring and everything it needs (base algebra, carrier module)
/// to a workspace document under `name`, `name.base`, `name.carrier`.
void add_coring_to_document(Json& doc, const std::string& name, const corings::Coring& c);

}  // namespace coringctl
