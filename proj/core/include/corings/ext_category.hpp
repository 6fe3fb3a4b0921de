#pragma once

#include <string>
#include <vector>

#include "corings/construct.hpp"

namespace corings {

/// A morphism (C:A) -> (D:B): a right B-action on C and a lift of the
/// coaction C -> C (x)_B D into C (x)_k D. Not validated on construction.
struct ExtMorphism {
  Coring source;
  Coring target;
  std::vector<Mat> right_action;  // one matrix per basis element of B
  Mat coact_lift;
  std::string name;

  /// rho_C : C (x)_k B -> C as a (dim C * dim B) x dim C matrix.
  Mat action_matrix() const;
  /// C as an (A,B)-bimodule through right_action.
  Bimodule carrier() const;
  /// The coaction in the coordinates of carrier() (x)_B D.
  Mat coaction() const;
  /// coaction() lifted back through the representative columns.
  Mat canonical_lift() const;
};

/// Wraps ExtMorphism data from a right action given as C (x)_k B -> C.
ExtMorphism ext_from_action_matrix(Coring source, Coring target, const Mat& action,
                                   Mat coact_lift);

/// Conditions of validate_right_extension.
Verdict check_ext_morphism(const ExtMorphism& m);
RightExtension to_extension(const ExtMorphism& m);

ExtMorphism ext_identity(const Coring& c);
/// (C:A) -> unit coring: scalar action, coaction the identity of C = C (x)_k k.
ExtMorphism ext_to_unit(const Coring& c);
/// (C:A) -> trivial coring (A:A): the coring's own right action, c -> c (x) 1.
ExtMorphism ext_to_trivial(const Coring& c);

/// Equal end objects, equal actions and equal projected coactions.
bool ext_equal(const ExtMorphism& a, const ExtMorphism& b);

/// g . f by the explicit formulas, evaluated on reduced lifts of both
/// coactions. Throws kObjectMismatch unless f.target is g.source.
ExtMorphism ext_compose(const ExtMorphism& g, const ExtMorphism& f);
/// g . f through E = E box_C C -> E box_C (C (x)_B D) = E (x)_B D.
/// Throws kIsoFailure when one of the identifications fails.
ExtMorphism ext_compose_via_cotensor(const ExtMorphism& g, const ExtMorphism& f);

ExtMorphism ext_tensor_morphisms(const ExtMorphism& m, const ExtMorphism& m2);

/// A corings morphism with invertible phi and varphi as an Ext morphism:
/// c . b = c varphi^-1(b), c -> c_(1) (x) phi(c_(2)).
ExtMorphism ext_from_coring_iso(const CoringsMorphism& m);

/// Base ring extension of m wrapped as (B (x)_A C (x)_A B : B) -> (D:B).
ExtMorphism corings_to_ext(const CoringsMorphism& m);

}  // namespace corings
