#pragma once

#include <string>
#include <vector>

#include "corings/coring.hpp"
#include "corings/corings_morphism.hpp"

namespace corings {

/// C (x)_k C' over A (x)_k A': Delta = eta o (Delta (x) Delta'), eps = eps (x) eps'.
Coring tensor_coring(const Coring& c, const Coring& c2);

/// D (over B) extends C (over A) on the right: C is an (A,B)-bimodule,
/// Delta_C is right B-linear and rho : C -> C (x)_B D is a left C-colinear
/// right D-coaction.
struct RightExtension {
  Coring c;
  Coring d;
  Bimodule carrier;    // C as an (A,B)-bimodule
  RightComodule coaction;
  LeftComodule regular;  // Delta_C as a left coaction on carrier
};

/// Conditions: bimodule, delta_right_linear, coaction, colinear.
Verdict validate_right_extension(const Coring& c, const Coring& d,
                                 const std::vector<Mat>& right_action, const Mat& coact_lift);

/// Validates; throws kNotABimodule, kDeltaNotRightLinear, kNotACoaction or
/// kNotColinear naming the witness.
RightExtension make_right_extension(const Coring& c, const Coring& d,
                                    std::vector<Mat> right_action, const Mat& coact_lift);

/// Unvalidated data of the tensor of two extensions: factorwise right action
/// and the lift of eta o (rho (x) rho').
struct ExtensionData {
  Coring c;
  Coring d;
  std::vector<Mat> right_action;
  Mat coact_lift;
};

ExtensionData tensor_extension_data(const Coring& c, const Coring& d,
                                    const std::vector<Mat>& right_action, const Mat& coact_lift,
                                    const Coring& c2, const Coring& d2,
                                    const std::vector<Mat>& right_action2,
                                    const Mat& coact_lift2);

RightExtension tensor_extension(const RightExtension& e, const RightExtension& e2);

/// The B-coring B (x)_A C (x)_A B and its right extension by D.
struct BaseRingExtension {
  PresentedTensor inner;  // B (x)_A C
  PresentedTensor outer;  // (B (x)_A C) (x)_A B
  Coring coring;
  RightExtension extension;
};

/// Throws kInvalidMorphism unless m passes check_corings_morphism.
BaseRingExtension base_ring_extension(const CoringsMorphism& m);

/// b (x) c (x) b' -> b c b' from the carrier of base_ring_extension of an
/// identity morphism; verified bijective.
Mat base_extension_collapse(const BaseRingExtension& ext, const Coring& c);

// Fixtures.
Coring unit_coring(Field field);
/// A over A with Delta(a) = a (x) 1 and eps = id.
Coring trivial_coring(const AlgebraPtr& a);
/// Basis e_ij (index i*n+j), Delta(e_ij) = sum_t e_it (x) e_tj, eps(e_ij) = delta_ij.
Coring matrix_coalgebra(std::size_t n, Field field);
/// Basis g_0..g_{n-1}, all grouplike.
Coring grouplike_coalgebra(std::size_t n, Field field);
/// A (x)_B A for an injective B -> A; throws kNotInjective otherwise.
Coring sweedler_coring(const AlgebraMorphism& inclusion);

}  // namespace corings
