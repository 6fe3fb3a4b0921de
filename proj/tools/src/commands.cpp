#include "coringctl/commands.hpp"

#include <fstream>
#include <random>

namespace coringctl {

using namespace corings;

void Report::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void Report::add_verdict(const Verdict& v, const std::string& prefix) {
  for (const Condition& c : v.conditions()) add(prefix + c.name, std::string(to_string(c.status)));
  if (const Condition* f = v.first_failure()) {
    add(prefix + "failed", f->name);
    add(prefix + "witness", f->witness);
    if (!f->detail.empty()) add(prefix + "detail", f->detail);
  }
}

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

std::string Report::json() const {
  Json j = Json::object();
  for (const auto& [k, v] : entries_) j[k] = v;
  return j.dump(2) + "\n";
}

std::optional<std::string> Report::find(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidField:
    case ErrorKind::kFieldMismatch:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kAlgebraMismatch:
    case ErrorKind::kObjectMismatch:
    case ErrorKind::kPrecondition:
    case ErrorKind::kSyntax:
    case ErrorKind::kUnknownReference:
      return true;
    default:
      return false;
  }
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void finish(Outcome& o, bool ok) {
  o.report.add("result", ok ? "pass" : "fail");
  o.exit_code = ok ? kExitPass : kExitFail;
}

void require_args(const Invocation& inv, std::size_t n, const char* usage) {
  if (inv.args.size() != n) throw Error(ErrorKind::kSyntax, "usage: " + std::string(usage));
}

// Validates a composition operand before use; false means the report is final.
bool operand_ok(Outcome& o, const std::string& role, const Verdict& v) {
  if (v) return true;
  o.report.add(role, "fail");
  o.report.add_verdict(v, role + ".");
  finish(o, false);
  return false;
}

void check_object(const Workspace& ws, const std::string& name, Outcome& o) {
  Report& r = o.report;
  Verdict v;
  if (ws.corings.contains(name)) {
    const Coring& c = ws.corings.get(name);
    r.add("kind", "coring");
    r.add("field", c.field().name());
    r.add("base_dim", std::to_string(c.base()->dim()));
    r.add("dim", std::to_string(c.dim()));
    v = check_coring(c);
  } else if (ws.extensions.contains(name)) {
    const ExtMorphism& m = ws.extensions.get(name);
    r.add("kind", "extension");
    r.add("source", m.source.name());
    r.add("target", m.target.name());
    v = check_ext_morphism(m);
  } else if (ws.corings_morphisms.contains(name)) {
    const CoringsMorphism& m = ws.corings_morphisms.get(name);
    r.add("kind", "corings_morphism");
    r.add("source", m.source.name());
    r.add("target", m.target.name());
    v = check_corings_morphism(m);
  } else if (ws.algebra_morphisms.contains(name)) {
    r.add("kind", "algebra_morphism");
    v = check_algebra_morphism(ws.algebra_morphisms.get(name));
  } else if (ws.algebras.contains(name)) {
    r.add("kind", "algebra");
    r.add("dim", std::to_string(ws.algebras.get(name)->dim()));
    v = check_algebra(*ws.algebras.get(name));
  } else if (ws.modules.contains(name)) {
    r.add("kind", "module");
    r.add("dim", std::to_string(ws.modules.get(name).dim));
    v = check_bimodule(ws.modules.get(name));
  } else {
    throw Error(ErrorKind::kUnknownReference, "no object named \"" + name + "\"");
  }
  r.add_verdict(v);
  finish(o, v.ok());
}

void tensor(const Workspace& ws, const Invocation& inv, Outcome& o) {
  require_args(inv, 2, "tensor <coring> <coring> [--out name] [--save path]");
  const Coring& c = ws.corings.get(inv.args[0]);
  const Coring& c2 = ws.corings.get(inv.args[1]);
  const std::string name = inv.out.value_or(c.name() + "⊗" + c2.name());
  Coring t = tensor_coring(c, c2);
  t = Coring(t.carrier(), t.comul_lift(), t.counit(), name);
  Report& r = o.report;
  r.add("left", c.name());
  r.add("right", c2.name());
  r.add("name", name);
  r.add("base_dim", std::to_string(t.base()->dim()));
  r.add("dim", std::to_string(t.dim()));
  r.add("square_dim", std::to_string(t.square().dim()));
  const bool counit_ok = t.counit() == kron(c.counit(), c2.counit());
  r.add("counit_is_tensor", yes_no(counit_ok));
  Verdict v = check_coring(t);
  r.add_verdict(v);
  if (inv.save) {
    Json doc = ws.source;
    add_coring_to_document(doc, name, t);
    std::ofstream out(*inv.save, std::ios::binary);
    if (!out) throw Error(ErrorKind::kSyntax, "cannot write " + *inv.save);
    out << doc.dump(2) << "\n";
    r.add("saved", *inv.save);
  }
  finish(o, v.ok() && counit_ok);
}

void extend_tensor(const Workspace& ws, const Invocation& inv, Outcome& o) {
  require_args(inv, 2, "extend-tensor <extension> <extension>");
  const ExtMorphism& e = ws.extensions.get(inv.args[0]);
  const ExtMorphism& e2 = ws.extensions.get(inv.args[1]);
  if (!operand_ok(o, "left", check_ext_morphism(e))) return;
  if (!operand_ok(o, "right", check_ext_morphism(e2))) return;
  ExtMorphism t = ext_tensor_morphisms(e, e2);
  Report& r = o.report;
  r.add("source", t.source.name());
  r.add("target", t.target.name());
  r.add("source_dim", std::to_string(t.source.dim()));
  r.add("target_dim", std::to_string(t.target.dim()));
  r.add("coaction_tensor_dim",
        std::to_string(tensor_over_alg(t.carrier(), t.target.carrier()).dim()));
  Verdict v = check_ext_morphism(t);
  r.add_verdict(v);
  finish(o, v.ok());
}

void compose(const Workspace& ws, const Invocation& inv, Outcome& o) {
  require_args(inv, 2, "compose <g> <f>");
  const std::string& gn = inv.args[0];
  const std::string& fn = inv.args[1];
  Report& r = o.report;
  if (ws.extensions.contains(gn) && ws.extensions.contains(fn)) {
    const ExtMorphism& g = ws.extensions.get(gn);
    const ExtMorphism& f = ws.extensions.get(fn);
    r.add("kind", "extension");
    if (!operand_ok(o, "g", check_ext_morphism(g))) return;
    if (!operand_ok(o, "f", check_ext_morphism(f))) return;
    ExtMorphism gf = ext_compose(g, f);
    ExtMorphism via = ext_compose_via_cotensor(g, f);
    r.add("source", gf.source.name());
    r.add("target", gf.target.name());
    r.add("dim", std::to_string(gf.source.dim()));
    const bool agrees = gf.coact_lift == via.coact_lift && ext_equal(gf, via);
    r.add("cotensor_agrees", yes_no(agrees));
    Verdict v = check_ext_morphism(gf);
    r.add_verdict(v);
    finish(o, v.ok() && agrees);
  } else if (ws.corings_morphisms.contains(gn) && ws.corings_morphisms.contains(fn)) {
    const CoringsMorphism& g = ws.corings_morphisms.get(gn);
    const CoringsMorphism& f = ws.corings_morphisms.get(fn);
    r.add("kind", "corings_morphism");
    if (!operand_ok(o, "g", check_corings_morphism(g))) return;
    if (!operand_ok(o, "f", check_corings_morphism(f))) return;
    CoringsMorphism gf = corings_compose(g, f);
    r.add("source", gf.source.name());
    r.add("target", gf.target.name());
    r.add("phi", format_matrix(gf.phi));
    Verdict v = check_corings_morphism(gf);
    r.add_verdict(v);
    finish(o, v.ok());
  } else {
    throw Error(ErrorKind::kUnknownReference,
                "compose needs two extensions or two corings morphisms, got \"" + gn +
                    "\" and \"" + fn + "\"");
  }
}

void base_extend(const Workspace& ws, const Invocation& inv, Outcome& o) {
  require_args(inv, 1, "base-extend <corings morphism>");
  const CoringsMorphism& m = ws.corings_morphisms.get(inv.args[0]);
  Report& r = o.report;
  r.add("source", m.source.name());
  r.add("target", m.target.name());
  if (!operand_ok(o, "morphism", check_corings_morphism(m))) return;
  BaseRingExtension bre = base_ring_extension(m);
  r.add("inner_dim", std::to_string(bre.inner.dim()));
  r.add("dim", std::to_string(bre.coring.dim()));
  r.add("base_dim", std::to_string(bre.coring.base()->dim()));
  Verdict cv = check_coring(bre.coring);
  r.add_verdict(cv, "coring.");
  ExtMorphism e = corings_to_ext(m);
  Verdict ev = check_ext_morphism(e);
  r.add_verdict(ev, "extension.");
  finish(o, cv.ok() && ev.ok());
}

template <typename M>
Family<M> workspace_family(const Workspace& ws, const Registry<M>& morphisms) {
  Family<M> fam;
  for (const auto& n : ws.corings.names()) fam.objects.push_back(ws.corings.get(n));
  for (const auto& n : morphisms.names()) fam.morphisms.push_back(morphisms.get(n));
  fam.composable = composable_pairs(fam.morphisms);
  for (std::size_t i = 0; i + 2 < fam.objects.size(); ++i) fam.triples.push_back({i, i + 1, i + 2});
  return fam;
}

template <typename M>
void report_family(Report& r, const Family<M>& fam) {
  r.add("objects", std::to_string(fam.objects.size()));
  r.add("morphisms", std::to_string(fam.morphisms.size()));
  r.add("composable_pairs", std::to_string(fam.composable.size()));
  r.add("squares", std::to_string(fam.composable.size() * fam.composable.size()));
  r.add("triples", std::to_string(fam.triples.size()));
}

void verify_monoidal(const Workspace& ws, const Invocation& inv, Outcome& o) {
  require_args(inv, 1, "verify-monoidal <ext|corings>");
  Report& r = o.report;
  r.add("category", inv.args[0]);
  Verdict v;
  if (inv.args[0] == "ext") {
    ExtFamily fam = workspace_family(ws, ws.extensions);
    report_family(r, fam);
    v = verify_ext_monoidal(fam);
  } else if (inv.args[0] == "corings") {
    CoringsFamily fam = workspace_family(ws, ws.corings_morphisms);
    report_family(r, fam);
    v = verify_corings_monoidal(fam);
  } else {
    throw Error(ErrorKind::kSyntax, "verify-monoidal expects \"ext\" or \"corings\"");
  }
  r.add_verdict(v);
  finish(o, v.ok());
}

void dims(const Workspace& ws, const Invocation& inv, Outcome& o) {
  require_args(inv, 1, "dims <name>");
  const std::string& name = inv.args[0];
  Report& r = o.report;
  if (ws.corings.contains(name)) {
    const Coring& c = ws.corings.get(name);
    r.add("kind", "coring");
    r.add("base_dim", std::to_string(c.base()->dim()));
    r.add("dim", std::to_string(c.dim()));
    r.add("square_ambient_dim", std::to_string(c.square().ambient_dim()));
    r.add("square_dim", std::to_string(c.square().dim()));
    r.add("cube_dim", std::to_string(c.cube().left.dim()));
  } else if (ws.extensions.contains(name)) {
    const ExtMorphism& m = ws.extensions.get(name);
    PresentedTensor t = tensor_over_alg(m.carrier(), m.target.carrier());
    r.add("kind", "extension");
    r.add("source_dim", std::to_string(m.source.dim()));
    r.add("target_dim", std::to_string(m.target.dim()));
    r.add("coaction_ambient_dim", std::to_string(t.ambient_dim()));
    r.add("coaction_tensor_dim", std::to_string(t.dim()));
  } else if (ws.corings_morphisms.contains(name)) {
    const CoringsMorphism& m = ws.corings_morphisms.get(name);
    r.add("kind", "corings_morphism");
    r.add("source_dim", std::to_string(m.source.dim()));
    r.add("target_dim", std::to_string(m.target.dim()));
  } else if (ws.modules.contains(name)) {
    const Bimodule& m = ws.modules.get(name);
    r.add("kind", "module");
    r.add("dim", std::to_string(m.dim));
    r.add("left_dim", std::to_string(m.left->dim()));
    r.add("right_dim", std::to_string(m.right->dim()));
  } else if (ws.algebras.contains(name)) {
    r.add("kind", "algebra");
    r.add("dim", std::to_string(ws.algebras.get(name)->dim()));
  } else {
    throw Error(ErrorKind::kUnknownReference, "no object named \"" + name + "\"");
  }
  r.add("result", "pass");
}

void eta_naturality(const Workspace& ws, const Invocation& inv, Outcome& o) {
  require_args(inv, 2, "eta-naturality <coring> <coring> [--trials n]");
  const Coring& c = ws.corings.get(inv.args[0]);
  const Coring& c2 = ws.corings.get(inv.args[1]);
  const Bimodule& m = c.carrier();
  const Bimodule& n = c2.carrier();
  Report& r = o.report;
  PresentedTensor mc = tensor_over_alg(m, m);
  PresentedTensor nc = tensor_over_alg(n, n);
  EtaMap eta = eta_map(mc, nc);
  r.add("source_dim", std::to_string(eta.source.dim));
  r.add("target_dim", std::to_string(eta.target.dim()));
  r.add("invertible", yes_no(is_invertible(eta.map)));
  std::mt19937_64 rng(inv.seed);
  Subspace hm = hom_space(m, m, false, true);
  Subspace hn = hom_space(n, n, false, true);
  r.add("seed", std::to_string(inv.seed));
  r.add("trials", std::to_string(inv.trials));
  std::size_t passed = 0;
  std::string first_failure;
  for (std::size_t t = 0; t < inv.trials; ++t) {
    Mat f = random_hom(hm, m.dim, m.dim, rng);
    Mat g = random_hom(hn, n.dim, n.dim, rng);
    Verdict v = check_eta_naturality(f, m, m, g, n, n, m, n);
    if (v) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = "trial " + std::to_string(t) + ": " + v.summary();
    }
  }
  r.add("passed", std::to_string(passed));
  if (!first_failure.empty()) r.add("witness", first_failure);
  finish(o, passed == inv.trials);
}

}  // namespace

Outcome load_failure(const std::string& command, const Error& e) {
  Outcome o;
  o.report.add("command", command);
  o.report.add("error", std::string(to_string(e.kind())));
  o.report.add("detail", e.detail());
  o.report.add("result", "error");
  o.exit_code = kExitInputError;
  return o;
}

Outcome run_command(const Workspace& ws, const Invocation& inv) {
  Outcome o;
  o.report.add("command", inv.command);
  try {
    if (inv.command == "check") {
      require_args(inv, 1, "check <name>");
      o.report.add("object", inv.args[0]);
      check_object(ws, inv.args[0], o);
    } else if (inv.command == "tensor") {
      tensor(ws, inv, o);
    } else if (inv.command == "extend-tensor") {
      extend_tensor(ws, inv, o);
    } else if (inv.command == "compose") {
      compose(ws, inv, o);
    } else if (inv.command == "base-extend") {
      base_extend(ws, inv, o);
    } else if (inv.command == "verify-monoidal") {
      verify_monoidal(ws, inv, o);
    } else if (inv.command == "dims") {
      dims(ws, inv, o);
    } else if (inv.command == "eta-naturality") {
      eta_naturality(ws, inv, o);
    } else {
      throw Error(ErrorKind::kSyntax, "unknown command \"" + inv.command + "\"");
    }
  } catch (const Error& e) {
    o.report.add("error", std::string(to_string(e.kind())));
    o.report.add("detail", e.detail());
    o.report.add("result", is_input_error(e.kind()) ? "error" : "fail");
    o.exit_code = is_input_error(e.kind()) ? kExitInputError : kExitFail;
  }
  return o;
}

}  // namespace coringctl
