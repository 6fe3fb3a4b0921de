#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "corings/ext_category.hpp"

namespace corings {

/// (phi (x) phi', varphi (x) varphi') between tensor corings.
CoringsMorphism corings_tensor_morphisms(const CoringsMorphism& m, const CoringsMorphism& m2);

/// k (x) C -> C and C (x) k -> C, identity matrices after index collapse.
CoringsMorphism left_unit_iso(const Coring& c);
CoringsMorphism right_unit_iso(const Coring& c);
/// (C (x) C') (x) C'' -> C (x) (C' (x) C''); the identity matrix under
/// row-major indexing.
CoringsMorphism associator_iso(const Coring& c, const Coring& c2, const Coring& c3);
/// Swaps source and target and inverts both maps; throws kIsoFailure.
CoringsMorphism inverse_iso(const CoringsMorphism& m);

/// Objects, morphisms and composable pairs (g, f) the verifiers range over.
/// Interchange is checked on every pair of composable pairs; the associator
/// on every listed triple of object indices.
template <typename Morphism>
struct Family {
  std::vector<Coring> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::pair<Morphism, Morphism>> composable;
  std::vector<std::array<std::size_t, 3>> triples;
};
using ExtFamily = Family<ExtMorphism>;
using CoringsFamily = Family<CoringsMorphism>;

/// All pairs (g, f) of the given morphisms with f.target == g.source.
template <typename Morphism>
std::vector<std::pair<Morphism, Morphism>> composable_pairs(const std::vector<Morphism>& ms) {
  std::vector<std::pair<Morphism, Morphism>> out;
  for (const auto& f : ms) {
    for (const auto& g : ms) {
      if (same_coring(f.target, g.source)) out.emplace_back(g, f);
    }
  }
  return out;
}

/// Conditions: identity_preservation, interchange, unitors, associator.
/// Interchange also validates (g . f) (x) (g2 . f2), which the other side must
/// equal, so a broken morphism in a composable pair is reported there.
Verdict verify_ext_monoidal(const ExtFamily& family);
Verdict verify_corings_monoidal(const CoringsFamily& family);

}  // namespace corings
