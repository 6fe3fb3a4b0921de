// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli_suite.hpp"
#include "fixtures.hpp"

using namespace corings;
using namespace corings::testing;

namespace {

const std::string kData = CORINGS_TEST_DATA_DIR;
const std::string kCli = CORINGS_TEST_CLI_DIR;
const std::string kBinary = CORINGCTL_BINARY;

struct Outcome {
  bool ok = true;
  std::string note;
  std::ostringstream failures;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) failures << what;
    ok = ok && cond;
  }
};

std::vector<ExtMorphism> fixture_extensions(const Field& f) {
  std::vector<ExtMorphism> out;
  for (const auto& [name, c] : fixture_family(f)) {
    out.push_back(ext_identity(c));
    out.push_back(ext_to_unit(c));
    out.push_back(ext_to_trivial(c));
  }
  return out;
}

std::string field_tag(const Field& f) { return f.name(); }

void eta_naturality(Outcome& o) {
  std::size_t pairs = 0, trials = 0;
  for (const Field& f : fields()) {
    std::mt19937_64 rng(20240501);
    auto family = fixture_family(f);
    for (const auto& [n1, c1] : family) {
      for (const auto& [n2, c2] : family) {
        const Bimodule& m = c1.carrier();
        const Bimodule& n = c2.carrier();
        EtaMap eta = eta_map(tensor_over_alg(m, m), tensor_over_alg(n, n));
        const std::string tag = field_tag(f) + " " + n1 + "," + n2;
        o.require(is_invertible(eta.map), "eta not invertible for " + tag);
        Subspace hm = hom_space(m, m, false, true);
        Subspace hn = hom_space(n, n, false, true);
        for (int t = 0; t < 25; ++t) {
          Mat a = random_hom(hm, m.dim, m.dim, rng);
          Mat b = random_hom(hn, n.dim, n.dim, rng);
          o.require(check_eta_naturality(a, m, m, b, n, n, m, n).ok(),
                    "naturality failed for " + tag);
          ++trials;
        }
        ++pairs;
      }
    }
  }
  o.note = std::to_string(pairs) + " fixture pairs, " + std::to_string(trials) + " random squares";
}

void tensor_corings(Outcome& o) {
  std::size_t n = 0;
  for (const Field& f : fields()) {
    for (const auto& [n1, c1] : fixture_family(f)) {
      for (const auto& [n2, c2] : fixture_family(f)) {
        Coring t = tensor_coring(c1, c2);
        const std::string tag = field_tag(f) + " " + n1 + "⊗" + n2;
        o.require(check_coring(t).ok(), "check_coring failed for " + tag);
        o.require(t.counit() == kron(c1.counit(), c2.counit()), "counit differs for " + tag);
        ++n;
      }
    }
  }
  o.note = std::to_string(n) + " tensor corings";
}

void tensor_extensions(Outcome& o) {
  std::size_t n = 0;
  for (const Field& f : fields()) {
    std::vector<ExtMorphism> exts = fixture_extensions(f);
    for (const auto& a : exts) {
      for (const auto& b : exts) {
        RightExtension t = tensor_extension(to_extension(a), to_extension(b));
        Verdict v = validate_right_extension(t.c, t.d, t.carrier.right_action,
                                             t.coaction.coaction * t.coaction.tens.lift());
        o.require(v.ok(), "tensor extension rejected: " + v.summary());
        ++n;
      }
    }
  }
  o.note = std::to_string(n) + " tensor extensions";
}

void category_laws(Outcome& o) {
  std::size_t chains = 0, units = 0;
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const ExtMorphism& m : c.ext) {
      ExtMorphism right = ext_compose(m, ext_identity(m.source));
      ExtMorphism left = ext_compose(ext_identity(m.target), m);
      o.require(right.coaction() == m.coaction() && right.action_matrix() == m.action_matrix(),
                "right unit law");
      o.require(left.coaction() == m.coaction() && left.action_matrix() == m.action_matrix(),
                "left unit law");
      ++units;
    }
    for (const auto& h : c.ext)
      for (const auto& g : c.ext)
        for (const auto& m : c.ext) {
          if (!same_coring(m.target, g.source) || !same_coring(g.target, h.source)) continue;
          ExtMorphism a = ext_compose(h, ext_compose(g, m));
          ExtMorphism b = ext_compose(ext_compose(h, g), m);
          o.require(a.coact_lift == b.coact_lift && a.action_matrix() == b.action_matrix(),
                    "associativity");
          ++chains;
        }
  }
  o.require(chains >= 3, "fewer than three composable chains");
  o.note = std::to_string(units) + " morphisms, " + std::to_string(chains) + " chains";
}

void cotensor_oracle(Outcome& o) {
  std::size_t n = 0;
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const auto& [g, m] : composable_pairs(c.ext)) {
      ExtMorphism a = ext_compose(g, m);
      ExtMorphism b = ext_compose_via_cotensor(g, m);
      o.require(a.coact_lift == b.coact_lift, "coaction matrices differ");
      ++n;
    }
  }
  o.note = std::to_string(n) + " composable pairs";
}

std::vector<std::array<std::size_t, 3>> windows(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i + 2 < n; ++i) out.push_back({i, i + 1, i + 2});
  return out;
}

void ext_monoidal(Outcome& o) {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    ExtFamily fam{c.objects, c.ext, composable_pairs(c.ext), windows(c.objects.size())};
    Verdict v = verify_ext_monoidal(fam);
    o.require(v.ok(), field_tag(f) + ": " + v.summary());
  }
  o.note = "Q and F_5 corpora";
}

void corings_monoidal(Outcome& o) {
  std::size_t n = 0;
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const auto& a : c.cor)
      for (const auto& b : c.cor) {
        Verdict v = check_corings_morphism(corings_tensor_morphisms(a, b));
        o.require(v.ok(), a.name + "⊗" + b.name + ": " + v.summary());
        ++n;
      }
    CoringsFamily fam{c.objects, c.cor, composable_pairs(c.cor), windows(c.objects.size())};
    Verdict v = verify_corings_monoidal(fam);
    o.require(v.ok(), field_tag(f) + ": " + v.summary());
  }
  o.note = std::to_string(n) + " tensor morphisms";
}

void corings_to_ext_laws(Outcome& o) {
  std::size_t n = 0;
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const auto& m : c.cor) {
      Verdict v = check_ext_morphism(corings_to_ext(m));
      o.require(v.ok(), m.name + ": " + v.summary());
      ++n;
    }
    for (const Coring& obj : c.objects) {
      CoringsMorphism id = corings_identity(obj);
      ExtMorphism e = corings_to_ext(id);
      Mat p = base_extension_collapse(base_ring_extension(id), obj);
      Mat pinv = inverse(p);
      ExtMorphism target = ext_identity(obj);
      for (std::size_t j = 0; j < e.right_action.size(); ++j) {
        o.require(pinv * e.right_action[j] * p == target.right_action[j], "action not carried");
      }
      PresentedTensor ed = tensor_over_alg(e.carrier(), e.target.carrier());
      Mat moved = pinv * e.coaction() * induced_map(p, Mat::identity(f, obj.dim()), ed, obj.square());
      o.require(moved == target.coaction(), "coaction not carried for " + obj.name());
    }
  }
  o.note = std::to_string(n) + " morphisms";
}

struct NegativeCase {
  std::string workspace;
  std::string object;
  std::string expect_key;
  std::string expect_value;
  int exit_code;
};

void negative_controls(Outcome& o) {
  const std::vector<NegativeCase> cases = {
      {"corrupt/broken_counit.json", "C2bad", "failed", "counit_right", 1},
      {"corrupt/noncoassociative.json", "G2bad", "failed", "coassociativity", 1},
      {"corrupt/noncolinear.json", "mix", "failed", "colinear", 1},
      {"corrupt/nonmultiplicative.json", "squash", "failed", "algebra_map", 1},
      {"corrupt/nonlinear_delta.json", "shift", "failed", "delta_right_linear", 1},
      {"corrupt/nonprime_field.json", "C2matrix", "error", "InvalidField", 2},
  };
  for (const auto& c : cases) {
    CliRun run = run_cli(kBinary, kData, "--workspace " + c.workspace + " check " + c.object);
    const std::string line = c.expect_key + ": " + c.expect_value + "\n";
    o.require(run.exit_code == c.exit_code && run.output.find(line) != std::string::npos,
              c.workspace + " gave exit " + std::to_string(run.exit_code));
  }
  o.note = std::to_string(cases.size()) + " corrupted workspaces";
}

std::string full_suite_output() {
  std::string all;
  for (const CliCase& c : load_cases(kCli + "/cases.txt")) {
    CliRun run = run_case(kBinary, kData, c);
    all += "## " + c.name + " exit " + std::to_string(run.exit_code) + "\n" + run.output;
  }
  return all;
}

void determinism(Outcome& o) {
  const std::string first = full_suite_output();
  const std::string second = full_suite_output();
  o.require(!first.empty(), "empty suite output");
  o.require(first == second, "reports differ between runs");
  o.note = std::to_string(first.size()) + " bytes compared";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"interchange map invertible and natural", eta_naturality},
      {"tensor corings pass the axioms", tensor_corings},
      {"tensor extensions validate", tensor_extensions},
      {"extension morphisms form a category", category_laws},
      {"bullet formula agrees with the cotensor route", cotensor_oracle},
      {"extension category is monoidal", ext_monoidal},
      {"tensor of corings morphisms and monoidal corings category", corings_monoidal},
      {"corings morphisms embed as extension morphisms", corings_to_ext_laws},
      {"negative controls are rejected", negative_controls},
      {"CLI reports are deterministic", determinism},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures << "exception: " << e.what();
    }
    all_ok = all_ok && o.ok;
    std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << " - "
              << criteria[i].first;
    if (o.ok && !o.note.empty()) std::cout << " (" << o.note << ")";
    if (!o.ok) std::cout << " [" << o.failures.str() << "]";
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
