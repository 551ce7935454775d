// constructions.hpp
//
// Reducible schemes assembled from smooth pieces through long exact
// sequences, split weightwise into a cokernel part and a kernel part:
//
//   nc_union           two copies of Y glued along a smooth divisor D
//   union_two_smooth   closed-cover Mayer–Vietoris for X = A ∪ B, A ∩ B = I
//   nonequidim_x2      blow-up example with pieces at j = d2 and d2 + 1
//   equidim_x2         P¹-bundle example Z1 ∪ Z2 over P² × P^{d2−2}
//   perverse_product   Künneth on pieces, Segre action on classes

#pragma once

#include <string>
#include <vector>

#include "lyu/presentation.hpp"

namespace lyu {

/// i_*(x) = (x ↦ (gysin x, −gysin x)); pieces Gr^W_{k−d} = coker ⊕ Gr^W_{k−d+1} = ker.
PerversePresentation nc_union(const SubvarietyData& d);

struct UnionInput {
  std::string name;
  /// Carries the ample classes; they act on every piece through restriction.
  SmoothAtom ambient;
  CohomologyRing piece_a, piece_b, intersection;
  std::string name_a = "A", name_b = "B";
  QMat restrict_a, restrict_b;  ///< ambient → A, ambient → B
  QMat restrict_ai;             ///< A → I
  QMat push_a, push_b;          ///< I → A, I → B (degree +2)
};

PerversePresentation union_two_smooth(const UnionInput& u);

/// `restriction_degrees` scale the hyperplane action on the two copies of P^{d2+1}.
PerversePresentation nonequidim_x2(int d2, std::pair<long, long> restriction_degrees = {1, 1});

/// Coker part of ℓ: f^{n−1} → f^{n−1+2r} at C'-degree n (weight lowered by 2r); ker part of f^n → f^{n+2r}.
struct GysinSplitPieces {
  WGVS coker_part;
  WGVS ker_part;
  WGVS assembled;
};

GysinSplitPieces gysin_split(const WGVS& f, const GradedOp& op, int r = 1);
/// The long exact sequence behind gysin_split, with ranks computed from matrices.
LesWindow gysin_window(const std::string& name, const WGVS& f, const GradedOp& op, const GysinSplitPieces& split);

struct EquidimX2Parts {
  PerversePresentation x2;
  /// H^{k+d2}(Z2)(d2): two copies of P² × P^{d2−2}.
  WGVS z2;
  /// H^BM_{d2−k}(Z'1) from the Gysin sequence of c' on B0 = E × P^{d2−2}.
  GysinSplitPieces z1_prime;
  /// Weight-by-weight windows of Z2 → X2 → Z'1 → Z2[1].
  std::vector<LesWindow> weight_windows;
};

EquidimX2Parts equidim_x2_parts(int d2, int d_E);
PerversePresentation equidim_x2(int d2, int d_E);

/// At least one factor must have a single piece.
PerversePresentation perverse_product(const PerversePresentation& a, const PerversePresentation& b);

}  // namespace lyu
