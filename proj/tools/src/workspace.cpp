#include "coringctl/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace coringctl {

using namespace corings;

namespace {

[[noreturn]] void syntax(const std::string& what) { throw Error(ErrorKind::kSyntax, what); }

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) syntax(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string get_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) syntax(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::size_t get_size(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_unsigned()) syntax(where + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

Field parse_field(const Json& j) {
  if (!j.is_string()) syntax("field: expected \"Q\" or \"F_p\"");
  const std::string s = j.get<std::string>();
  if (s == "Q") return Field::rationals();
  if (s.size() > 2 && s.rfind("F_", 0) == 0 &&
      s.find_first_not_of("0123456789", 2) == std::string::npos && s.size() <= 12) {
    return Field::prime(std::stoull(s.substr(2)));
  }
  syntax("field: expected \"Q\" or \"F_p\", got \"" + s + "\"");
}

Scalar parse_scalar(const Json& j, const Field& field, const std::string& where) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.reduce(Scalar(j.get<long>()));
  syntax(where + ": scalars are strings such as \"3/4\" or integers");
}

Mat parse_row(const Json& j, const Field& field, std::size_t cols, const std::string& where) {
  if (!j.is_array()) syntax(where + ": expected an array of scalars");
  require_dims(j.size() == cols, where + ": expected " + std::to_string(cols) + " entries, got " +
                                     std::to_string(j.size()));
  Mat row(field, 1, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    row.set(0, c, parse_scalar(j[c], field, where + "[" + std::to_string(c) + "]"));
  }
  return row;
}

Mat parse_matrix(const Json& j, const Field& field, std::size_t rows, std::size_t cols,
                 const std::string& where) {
  if (!j.is_array()) syntax(where + ": expected an array of rows");
  require_dims(j.size() == rows, where + ": expected " + std::to_string(rows) + " rows, got " +
                                     std::to_string(j.size()));
  Mat m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    m.set_row(r, parse_row(j[r], field, cols, where + "[" + std::to_string(r) + "]").row(0));
  }
  return m;
}

std::vector<Mat> parse_matrices(const Json& j, const Field& field, std::size_t count,
                                std::size_t n, const std::string& where) {
  if (!j.is_array()) syntax(where + ": expected an array of matrices");
  require_dims(j.size() == count, where + ": expected " + std::to_string(count) +
                                      " matrices, got " + std::to_string(j.size()));
  std::vector<Mat> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(parse_matrix(j[i], field, n, n, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> parse_labels(const Json& j, std::size_t n, const std::string& where) {
  if (!j.contains("labels")) return {};
  const Json& l = j.at("labels");
  if (!l.is_array() || l.size() != n) {
    syntax(where + ".labels: expected " + std::to_string(n) + " strings");
  }
  std::vector<std::string> out;
  for (const auto& s : l) {
    if (!s.is_string()) syntax(where + ".labels: expected strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

AlgebraPtr renamed(const AlgebraPtr& a, const std::string& name) {
  std::vector<std::vector<Mat>> products(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    for (std::size_t j = 0; j < a->dim(); ++j) products[i].push_back(a->product(i, j));
  }
  return std::make_shared<const Algebra>(a->field(), std::move(products), a->unit(), a->labels(),
                                         name);
}

Coring renamed(const Coring& c, const std::string& name) {
  return Coring(c.carrier(), c.comul_lift(), c.counit(), name);
}

// Algebra names resolve in the workspace, with "k" for the ground field.
AlgebraPtr algebra_ref(const Workspace& ws, const std::string& name) {
  if (name == "k" && !ws.algebras.contains("k")) return ground_algebra(ws.field);
  return ws.algebras.get(name);
}

Coring coring_ref(const Workspace& ws, const std::string& name) {
  if (name == "k" && !ws.corings.contains("k")) return unit_coring(ws.field);
  return ws.corings.get(name);
}

const Json* fixture_of(const Json& j) {
  return j.is_object() && j.contains("fixture") ? &j.at("fixture") : nullptr;
}

AlgebraPtr parse_algebra(const Workspace& ws, const Json& j, const std::string& where,
                         const std::string& name) {
  const Field& field = ws.field;
  if (const Json* fx = fixture_of(j)) {
    const std::string kind = get_string(*fx, "kind", where + ".fixture");
    AlgebraPtr a;
    if (kind == "ground") {
      a = ground_algebra(field);
    } else if (kind == "dual_numbers") {
      a = dual_numbers(field);
    } else if (kind == "matrix_algebra") {
      a = matrix_algebra(get_size(*fx, "n", where + ".fixture"), field);
    } else if (kind == "group_algebra") {
      const Json& t = require(*fx, "table", where + ".fixture");
      std::vector<std::vector<std::size_t>> table;
      try {
        table = t.get<std::vector<std::vector<std::size_t>>>();
      } catch (const nlohmann::json::exception&) {
        syntax(where + ".fixture.table: expected a square table of indices");
      }
      a = group_algebra(table, field, name);
    } else if (kind == "tensor") {
      a = tensor_algebra(algebra_ref(ws, get_string(*fx, "left", where + ".fixture")),
                         algebra_ref(ws, get_string(*fx, "right", where + ".fixture")));
    } else {
      syntax(where + ".fixture.kind: unknown algebra fixture \"" + kind + "\"");
    }
    return renamed(a, name);
  }
  const std::size_t n = get_size(j, "dim", where);
  const Json& prods = require(j, "products", where);
  if (!prods.is_array() || prods.size() != n) {
    syntax(where + ".products: expected " + std::to_string(n) + " rows of products");
  }
  std::vector<std::vector<Mat>> products(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!prods[i].is_array() || prods[i].size() != n) {
      syntax(where + ".products[" + std::to_string(i) + "]: expected " + std::to_string(n) +
             " products");
    }
    for (std::size_t k = 0; k < n; ++k) {
      products[i].push_back(parse_row(prods[i][k], field, n,
                                      where + ".products[" + std::to_string(i) + "][" +
                                          std::to_string(k) + "]"));
    }
  }
  Mat unit = parse_row(require(j, "unit", where), field, n, where + ".unit");
  return std::make_shared<const Algebra>(field, std::move(products), std::move(unit),
                                         parse_labels(j, n, where), name);
}

AlgebraMorphism parse_algebra_morphism(const Workspace& ws, const Json& j,
                                       const std::string& where) {
  if (const Json* fx = fixture_of(j)) {
    const std::string kind = get_string(*fx, "kind", where + ".fixture");
    AlgebraPtr a = algebra_ref(ws, get_string(*fx, "algebra", where + ".fixture"));
    if (kind == "identity") return identity_morphism(a);
    if (kind == "unit") return unit_morphism(a);
    syntax(where + ".fixture.kind: unknown algebra morphism fixture \"" + kind + "\"");
  }
  AlgebraPtr src = algebra_ref(ws, get_string(j, "source", where));
  AlgebraPtr tgt = algebra_ref(ws, get_string(j, "target", where));
  return AlgebraMorphism{src, tgt,
                         parse_matrix(require(j, "map", where), ws.field, src->dim(), tgt->dim(),
                                      where + ".map")};
}

AlgebraMorphism varphi_ref(const Workspace& ws, const Json& j, const Coring& src,
                           const Coring& tgt, const std::string& where) {
  const Json& v = require(j, "varphi", where);
  if (v.is_string()) return ws.algebra_morphisms.get(v.get<std::string>());
  return AlgebraMorphism{src.base(), tgt.base(),
                         parse_matrix(v, ws.field, src.base()->dim(), tgt.base()->dim(),
                                      where + ".varphi")};
}

Bimodule parse_module(const Workspace& ws, const Json& j, const std::string& where) {
  if (const Json* fx = fixture_of(j)) {
    const std::string kind = get_string(*fx, "kind", where + ".fixture");
    if (kind == "regular") {
      return regular_bimodule(algebra_ref(ws, get_string(*fx, "algebra", where + ".fixture")));
    }
    syntax(where + ".fixture.kind: unknown module fixture \"" + kind + "\"");
  }
  AlgebraPtr left = algebra_ref(ws, get_string(j, "left", where));
  AlgebraPtr right = algebra_ref(ws, get_string(j, "right", where));
  const std::size_t n = get_size(j, "dim", where);
  auto actions = [&](const char* key, const AlgebraPtr& alg) {
    if (!j.contains(key) && alg->dim() == 1) return std::vector<Mat>{Mat::identity(ws.field, n)};
    return parse_matrices(require(j, key, where), ws.field, alg->dim(), n,
                          where + "." + key);
  };
  return make_bimodule(left, right, actions("left_action", left), actions("right_action", right),
                       parse_labels(j, n, where));
}

Coring parse_coring(const Workspace& ws, const Json& j, const std::string& where,
                    const std::string& name) {
  const Field& field = ws.field;
  std::optional<Coring> base;
  if (const Json* fx = fixture_of(j)) {
    const std::string w = where + ".fixture";
    const std::string kind = get_string(*fx, "kind", w);
    if (kind == "unit") {
      base = unit_coring(field);
    } else if (kind == "trivial") {
      base = trivial_coring(algebra_ref(ws, get_string(*fx, "algebra", w)));
    } else if (kind == "matrix_coalgebra") {
      base = matrix_coalgebra(get_size(*fx, "n", w), field);
    } else if (kind == "grouplike") {
      base = grouplike_coalgebra(get_size(*fx, "n", w), field);
    } else if (kind == "sweedler") {
      base = sweedler_coring(ws.algebra_morphisms.get(get_string(*fx, "inclusion", w)));
    } else if (kind == "tensor") {
      base = tensor_coring(coring_ref(ws, get_string(*fx, "left", w)),
                           coring_ref(ws, get_string(*fx, "right", w)));
    } else {
      syntax(w + ".kind: unknown coring fixture \"" + kind + "\"");
    }
    if (!j.contains("comultiplication") && !j.contains("counit")) return renamed(*base, name);
  }
  Bimodule carrier = base ? base->carrier() : ws.modules.get(get_string(j, "carrier", where));
  const std::size_t n = carrier.dim;
  Mat comul = j.contains("comultiplication") || !base
                  ? parse_matrix(require(j, "comultiplication", where), field, n, n * n,
                                 where + ".comultiplication")
                  : base->comul_lift();
  Mat counit = j.contains("counit") || !base
                   ? parse_matrix(require(j, "counit", where), field, n, carrier.left->dim(),
                                  where + ".counit")
                   : base->counit();
  return Coring(std::move(carrier), std::move(comul), std::move(counit), name);
}

CoringsMorphism parse_corings_morphism(const Workspace& ws, const Json& j,
                                       const std::string& where, const std::string& name) {
  CoringsMorphism out = [&] {
    if (const Json* fx = fixture_of(j)) {
      const std::string w = where + ".fixture";
      const std::string kind = get_string(*fx, "kind", w);
      if (kind == "identity") return corings_identity(coring_ref(ws, get_string(*fx, "coring", w)));
      if (kind == "counit") {
        Coring c = coring_ref(ws, get_string(*fx, "coring", w));
        Coring target = fx->contains("target") ? coring_ref(ws, get_string(*fx, "target", w))
                                               : trivial_coring(c.base());
        return CoringsMorphism{c, target, c.counit(), identity_morphism(c.base()), {}};
      }
      if (kind == "tensor") {
        return corings_tensor_morphisms(
            ws.corings_morphisms.get(get_string(*fx, "left", w)),
            ws.corings_morphisms.get(get_string(*fx, "right", w)));
      }
      if (kind == "compose") {
        return corings_compose(ws.corings_morphisms.get(get_string(*fx, "g", w)),
                               ws.corings_morphisms.get(get_string(*fx, "f", w)));
      }
      syntax(w + ".kind: unknown corings morphism fixture \"" + kind + "\"");
    }
    Coring src = coring_ref(ws, get_string(j, "source", where));
    Coring tgt = coring_ref(ws, get_string(j, "target", where));
    Mat phi = parse_matrix(require(j, "phi", where), ws.field, src.dim(), tgt.dim(),
                           where + ".phi");
    AlgebraMorphism varphi = varphi_ref(ws, j, src, tgt, where);
    return CoringsMorphism{src, tgt, std::move(phi), std::move(varphi), {}};
  }();
  out.name = name;
  return out;
}

ExtMorphism parse_extension(const Workspace& ws, const Json& j, const std::string& where,
                            const std::string& name) {
  std::optional<ExtMorphism> base;
  if (const Json* fx = fixture_of(j)) {
    const std::string w = where + ".fixture";
    const std::string kind = get_string(*fx, "kind", w);
    auto coring = [&] { return coring_ref(ws, get_string(*fx, "coring", w)); };
    auto ext = [&](const char* key) { return ws.extensions.get(get_string(*fx, key, w)); };
    if (kind == "identity") {
      base = ext_identity(coring());
    } else if (kind == "to_unit") {
      base = ext_to_unit(coring());
    } else if (kind == "to_trivial") {
      base = ext_to_trivial(coring());
    } else if (kind == "from_corings") {
      base = corings_to_ext(ws.corings_morphisms.get(get_string(*fx, "morphism", w)));
    } else if (kind == "from_iso") {
      base = ext_from_coring_iso(ws.corings_morphisms.get(get_string(*fx, "morphism", w)));
    } else if (kind == "tensor") {
      base = ext_tensor_morphisms(ext("left"), ext("right"));
    } else if (kind == "compose") {
      base = ext_compose(ext("g"), ext("f"));
    } else {
      syntax(w + ".kind: unknown extension fixture \"" + kind + "\"");
    }
  }
  ExtMorphism out = base ? *base
                         : ExtMorphism{coring_ref(ws, get_string(j, "source", where)),
                                       coring_ref(ws, get_string(j, "target", where)),
                                       {},
                                       Mat(ws.field, 0, 0),
                                       {}};
  const std::size_t dc = out.source.dim(), db = out.target.base()->dim();
  if (j.contains("action_matrix")) {
    out = ext_from_action_matrix(out.source, out.target,
                                 parse_matrix(j.at("action_matrix"), ws.field, dc * db, dc,
                                              where + ".action_matrix"),
                                 out.coact_lift);
  } else if (j.contains("right_action")) {
    out.right_action = parse_matrices(j.at("right_action"), ws.field, db, dc,
                                      where + ".right_action");
  } else if (!base) {
    if (db != 1) syntax(where + ": missing \"right_action\" or \"action_matrix\"");
    out.right_action = {Mat::identity(ws.field, dc)};
  }
  if (j.contains("coaction") || !base) {
    out.coact_lift = parse_matrix(require(j, "coaction", where), ws.field, dc,
                                  dc * out.target.dim(), where + ".coaction");
  }
  // Shapes of the action against the carrier.
  (void)out.carrier();
  out.name = name;
  return out;
}

template <typename Fn>
void each_entry(const Json& doc, const char* section, Fn&& fn) {
  if (!doc.contains(section)) return;
  const Json& s = doc.at(section);
  if (!s.is_object()) syntax(std::string(section) + ": expected an object of named entries");
  for (const auto& [name, entry] : s.items()) {
    const std::string where = std::string(section) + "." + name;
    try {
      fn(name, entry, where);
    } catch (const Error& e) {
      if (e.detail().rfind(where, 0) == 0) throw;
      throw Error(e.kind(), where + ": " + e.detail());
    }
  }
}

std::string morphism_kind(const Json& entry, const std::string& where) {
  if (!entry.is_object()) syntax(where + ": expected an object");
  return entry.contains("kind") ? get_string(entry, "kind", where) : std::string("corings");
}

}  // namespace

Workspace parse_workspace(const std::string& text, const std::string& origin) {
  Workspace ws;
  try {
    ws.source = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    syntax(origin + ": " + e.what());
  }
  try {
    const Json& doc = ws.source;
    if (!doc.is_object()) syntax("top level: expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
      static const char* known[] = {"field",  "algebras",   "modules",  "corings",
                                    "extensions", "morphisms", "description"};
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
        syntax("top level: unknown key \"" + key + "\"");
      }
    }
    ws.field = parse_field(require(doc, "field", "top level"));
    each_entry(doc, "algebras", [&](const std::string& name, const Json& e, const std::string& w) {
      ws.algebras.add(name, parse_algebra(ws, e, w, name));
    });
    each_entry(doc, "morphisms", [&](const std::string& name, const Json& e, const std::string& w) {
      if (morphism_kind(e, w) == "algebra") {
        ws.algebra_morphisms.add(name, parse_algebra_morphism(ws, e, w));
      }
    });
    each_entry(doc, "modules", [&](const std::string& name, const Json& e, const std::string& w) {
      ws.modules.add(name, parse_module(ws, e, w));
    });
    each_entry(doc, "corings", [&](const std::string& name, const Json& e, const std::string& w) {
      ws.corings.add(name, parse_coring(ws, e, w, name));
    });
    each_entry(doc, "morphisms", [&](const std::string& name, const Json& e, const std::string& w) {
      const std::string kind = morphism_kind(e, w);
      if (kind == "corings") {
        ws.corings_morphisms.add(name, parse_corings_morphism(ws, e, w, name));
      } else if (kind != "algebra" && kind != "ext") {
        syntax(w + ".kind: expected \"algebra\", \"corings\" or \"ext\"");
      }
    });
    each_entry(doc, "extensions", [&](const std::string& name, const Json& e, const std::string& w) {
      ws.extensions.add(name, parse_extension(ws, e, w, name));
    });
    each_entry(doc, "morphisms", [&](const std::string& name, const Json& e, const std::string& w) {
      if (morphism_kind(e, w) == "ext") ws.extensions.add(name, parse_extension(ws, e, w, name));
    });
  } catch (const Error& e) {
    throw Error(e.kind(), origin + ": " + e.detail());
  }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kSyntax, path + ": cannot open workspace");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_workspace(text.str(), path);
}

Json dump_matrix(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().format(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json dump_algebra(const Algebra& a) {
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(dump_matrix(a.product(i, j))[0]);
    products.push_back(std::move(row));
  }
  Json out;
  out["dim"] = a.dim();
  out["labels"] = a.labels();
  out["products"] = std::move(products);
  out["unit"] = dump_matrix(a.unit())[0];
  return out;
}

Json dump_module(const Bimodule& m, const std::string& left, const std::string& right) {
  Json out;
  out["left"] = left;
  out["right"] = right;
  out["dim"] = m.dim;
  out["labels"] = m.labels;
  Json la = Json::array(), ra = Json::array();
  for (const Mat& a : m.left_action) la.push_back(dump_matrix(a));
  for (const Mat& a : m.right_action) ra.push_back(dump_matrix(a));
  out["left_action"] = std::move(la);
  out["right_action"] = std::move(ra);
  return out;
}

Json dump_coring(const Coring& c, const std::string& carrier) {
  Json out;
  out["carrier"] = carrier;
  out["comultiplication"] = dump_matrix(c.comul_lift());
  out["counit"] = dump_matrix(c.counit());
  return out;
}

void add_coring_to_document(Json& doc, const std::string& name, const Coring& c) {
  const std::string base = name + ".base";
  const std::string carrier = name + ".carrier";
  doc["algebras"][base] = dump_algebra(*c.base());
  doc["modules"][carrier] = dump_module(c.carrier(), base, base);
  doc["corings"][name] = dump_coring(c, carrier);
}

}  // namespace coringctl
