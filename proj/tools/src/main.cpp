#include <iostream>

#include <CLI11.hpp>

#include "coringctl/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for finite-dimensional corings", "coringctl"};
  app.require_subcommand(1);

  std::string workspace_path;
  bool json_report = false;
  coringctl::Invocation inv;
  app.add_option("-w,--workspace", workspace_path, "Workspace JSON file")->required();
  app.add_flag("--json-report", json_report, "Print the report as JSON");
  app.add_option("--seed", inv.seed, "Seed for randomized checks");

  std::vector<std::string> args;
  std::string out, save;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  auto* check = sub("check", "Check the axioms of a named object");
  check->add_option("name", args)->required()->expected(1);

  auto* tensor = sub("tensor", "Tensor product of two corings");
  tensor->add_option("corings", args)->required()->expected(2);
  tensor->add_option("--out", out, "Name of the result");
  tensor->add_option("--save", save, "Write the workspace with the result added");

  auto* ext = sub("extend-tensor", "Tensor product of two right extensions");
  ext->add_option("extensions", args)->required()->expected(2);

  auto* comp = sub("compose", "Composite g after f");
  comp->add_option("morphisms", args)->required()->expected(2);

  auto* base = sub("base-extend", "Base ring extension along a corings morphism");
  base->add_option("morphism", args)->required()->expected(1);

  auto* mono = sub("verify-monoidal", "Monoidal category axioms over the workspace");
  mono->add_option("category", args)->required()->expected(1)->check(
      CLI::IsMember({"ext", "corings"}));

  auto* dims = sub("dims", "Dimensions of a named object and its tensor spaces");
  dims->add_option("name", args)->required()->expected(1);

  auto* eta = sub("eta-naturality", "Randomized naturality check of the interchange map");
  eta->add_option("corings", args)->required()->expected(2);
  eta->add_option("--trials", inv.trials, "Number of random pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : coringctl::kExitInputError;
  }

  inv.command = app.get_subcommands().front()->get_name();
  inv.args = args;
  if (!out.empty()) inv.out = out;
  if (!save.empty()) inv.save = save;

  coringctl::Outcome outcome;
  try {
    coringctl::Workspace ws = coringctl::load_workspace(workspace_path);
    outcome = coringctl::run_command(ws, inv);
  } catch (const corings::Error& e) {
    outcome = coringctl::load_failure(inv.command, e);
  }
  std::cout << (json_report ? outcome.report.json() : outcome.report.text());
  return outcome.exit_code;
}
