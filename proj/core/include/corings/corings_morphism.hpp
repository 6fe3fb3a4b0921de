#pragma once

#include "corings/coring.hpp"

namespace corings {

/// (phi, varphi) : (C:A) -> (D:B) with phi : C -> D and varphi : A -> B.
struct CoringsMorphism {
  Coring source;
  Coring target;
  Mat phi;
  AlgebraMorphism varphi;
  std::string name;
};

/// D with both actions pulled back along varphi.
Bimodule restrict_to_source(const CoringsMorphism& m);

/// omega : D (x)_A D -> D (x)_B D, induced by the identity of D (x)_k D.
Mat omega_map(const PresentedTensor& over_a, const PresentedTensor& over_b);

/// Conditions: algebra_map, bilinearity, counit, comultiplication.
Verdict check_corings_morphism(const CoringsMorphism& m);

CoringsMorphism corings_identity(const Coring& c);
/// g o f; throws kObjectMismatch unless f.target is g.source.
CoringsMorphism corings_compose(const CoringsMorphism& g, const CoringsMorphism& f);
/// Componentwise equality of the two maps and of the end objects.
bool corings_equal(const CoringsMorphism& a, const CoringsMorphism& b);

}  // namespace corings
