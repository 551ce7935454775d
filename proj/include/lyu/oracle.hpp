// oracle.hpp
//
// Brute-force cross-checks that share no code path with the constructions:
// rational homology of tiny chain complexes, and audits of assembled data.

#pragma once

#include <string>
#include <vector>

#include "lyu/presentation.hpp"

namespace lyu {

/// C_0 ← C_1 ← … ← C_n; boundaries[i] is ∂_{i+1}: C_{i+1} → C_i.
struct ChainComplex {
  std::string name;
  std::vector<std::size_t> dims;
  std::vector<QMat> boundaries;
};

/// Validates shapes. ShapeError on mismatch.
ChainComplex make_complex(std::string name, std::vector<std::size_t> dims, std::vector<QMat> boundaries);
/// dim H_i = dim Ker ∂_i − rank ∂_{i+1}. PreconditionError when ∂∘∂ ≠ 0.
std::vector<std::size_t> homology_dims(const ChainComplex& c);

/// Oriented simplicial chain complex generated by the given facets (vertex lists).
ChainComplex simplicial_complex(std::string name, const std::vector<std::vector<int>>& facets);

ChainComplex cw_point();
/// One cell in dimensions 0 and n.
ChainComplex cw_sphere(int n);
/// ∂Δ^{n+1}, a simplicial n-sphere.
ChainComplex simplex_boundary(int n);
/// 3×3 grid triangulation of the torus.
ChainComplex simplicial_torus();
/// One 0-cell, 2g 1-cells, one 2-cell attached along Π[a_i, b_i].
ChainComplex cw_surface(int genus);
/// Cells in dimensions 0, 2, …, 2n.
ChainComplex cw_complex_projective(int n);
/// Cells in dimensions 0, 1, 2 with ∂_2 = 2.
ChainComplex cw_real_projective_plane();

/// True iff dim V_i = rank(in) + rank(out) everywhere, with 0 beyond both ends.
/// Negative entries give false; ShapeError when the rank list does not fit the dims.
bool exactness_audit(const LesWindow& w);
/// Every piece's Euler characteristic against the prediction from its constituents.
bool euler_check(const PerversePresentation& p);
/// rank + nullity = source dimension on every block.
bool rank_nullity_holds(const GradedOp& op);

struct AuditLine {
  std::string name;
  bool passed = false;
};

/// All windows, the Euler check and the construction's own checks.
std::vector<AuditLine> audit_presentation(const PerversePresentation& p);

}  // namespace lyu
