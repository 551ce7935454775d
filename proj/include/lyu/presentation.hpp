// presentation.hpp
//
// The family j ↦ H_(j)^•(X) of hypercohomologies of the perverse pieces of
// the dualizing complex, together with the action of each ample class.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lyu/atoms.hpp"
#include "lyu/graded.hpp"

namespace lyu {

/// Ample class ↦ its operator on every piece.
using ClassModel = std::function<std::map<int, GradedOp>(const AmpleSelection&)>;

/// A finite window V_0 → V_1 → … → V_n of a long exact sequence, with 0 beyond both ends.
struct LesWindow {
  std::string name;
  std::vector<long> dims;
  std::vector<long> ranks;  ///< ranks[i] is the rank of V_i → V_{i+1}
};

struct PresentationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PerversePresentation {
  std::string name;
  int dim = 0;
  std::map<int, WGVS> pieces;
  /// ᵖH^j ℚ_X = 0 for j ≠ dim, which for these objects means a single piece at j = dim.
  bool pure = false;
  ClassModel class_model;

  std::vector<std::string> provenance;
  /// Conventions used (sign, weight normalization, restriction degrees).
  std::map<std::string, std::string> metadata;
  /// Numeric parameters such as d_E, g_E, d2, delta2.
  std::map<std::string, long> parameters;

  std::vector<LesWindow> windows;
  /// Euler characteristic of each piece predicted from the constituents.
  std::map<int, long> predicted_euler;
  std::vector<PresentationCheck> checks;

  bool has_piece(int j) const { return pieces.count(j) > 0; }
  /// Empty space when absent.
  const WGVS& piece(int j) const;
  /// Operators of a selection on every piece; throws InvalidClassError for a bad selection.
  std::map<int, GradedOp> ops(const AmpleSelection& sel) const;
  /// Pure iff exactly one piece, at j = dim. Throws InternalInconsistency when a piece sits above dim.
  void finalize();
};

/// H_(d)^k = H^{k+d}(X)(d): degrees k ∈ [−d, d], weight k − d.
PerversePresentation presentation_of_smooth(const SmoothAtom& a);

}  // namespace lyu
