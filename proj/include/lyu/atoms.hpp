// atoms.hpp
//
// Built-in smooth projective atoms: their rings, named divisor classes,
// positive cones, and embedded-subvariety data (restriction and Gysin maps).

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lyu/ring.hpp"

namespace lyu {

/// A named class with integer coefficients, e.g. 2·e1 + e2.
struct LinearClass {
  std::vector<std::pair<std::string, long>> terms;
};

/**
 * Ample selection: either a linear combination of named classes, or a Segre
 * combination `left * right` for a product (left acts on the first factor).
 */
struct AmpleSelection {
  enum class Kind { Linear, Segre };
  Kind kind = Kind::Linear;
  LinearClass linear;
  std::shared_ptr<const AmpleSelection> left, right;

  static AmpleSelection of(LinearClass c);
  static AmpleSelection of(std::vector<std::pair<std::string, long>> terms);
  static AmpleSelection segre(AmpleSelection l, AmpleSelection r);
  std::string to_string() const;
};

/// Σ coefficient(name)·form(name) > 0.
struct ConeInequality {
  std::vector<std::pair<std::string, long>> form;
  std::string text;
};

class SmoothAtom {
 public:
  SmoothAtom() = default;
  SmoothAtom(std::string name, CohomologyRing ring, std::vector<std::pair<std::string, Vec>> generators,
             std::vector<ConeInequality> cone);

  const std::string& name() const { return name_; }
  int dim() const { return ring_.dim(); }
  const CohomologyRing& ring() const { return ring_; }
  WGVS cohomology() const { return ring_.cohomology(); }
  const std::vector<std::pair<std::string, Vec>>& generators() const { return generators_; }
  const Vec& generator(const std::string& name) const;
  const std::vector<ConeInequality>& cone() const { return cone_; }
  const std::vector<std::shared_ptr<const SmoothAtom>>& factors() const { return factors_; }

  /// Flattens a selection into generator coefficients, resolving Segre
  /// selections through the factors. Throws InvalidClassError.
  std::vector<std::pair<std::string, long>> resolve(const AmpleSelection& sel) const;
  /// Validates against the cone and returns the class in H².
  Vec class_element(const AmpleSelection& sel) const;
  GradedOp class_op(const AmpleSelection& sel) const;

  friend SmoothAtom atom_product(const SmoothAtom& a, const SmoothAtom& b);

 private:
  std::string name_;
  CohomologyRing ring_;
  std::vector<std::pair<std::string, Vec>> generators_;
  std::vector<ConeInequality> cone_;
  std::vector<std::shared_ptr<const SmoothAtom>> factors_;
  std::vector<std::vector<std::pair<std::string, std::string>>> factor_names_;
};

SmoothAtom projective_space(int n);
SmoothAtom p1xp1();
/// Ample classes a·h − b·e with a > b > 0.
SmoothAtom blowup_p2();
int plane_curve_genus(int d_E);
/// Smooth plane curve of degree d_E; its class "h" is the hyperplane restriction d_E·pt.
SmoothAtom plane_curve(int d_E);
/// Künneth product; clashing generator names get the suffixes 1 and 2.
SmoothAtom atom_product(const SmoothAtom& a, const SmoothAtom& b);

/// Poincaré symmetry and connectedness of the ring.
bool poincare_symmetric(const SmoothAtom& a);
/// ℓ^{d−k}: H^k → H^{2d−k} is an isomorphism for every k ≤ d.
bool hard_lefschetz_holds(const SmoothAtom& a, const AmpleSelection& sel);

/// A smooth subvariety D ⊂ Y with its restriction and declared Gysin map.
struct SubvarietyData {
  std::string name;
  SmoothAtom ambient;
  SmoothAtom sub;
  int codim = 1;
  QMat restrict;  ///< H(Y) → H(D), whole ring
  QMat gysin;     ///< H(D) → H(Y), raises degree by 2·codim
};

bool gysin_matches_adjoint(const SubvarietyData& s);
bool projection_formula_check(const SubvarietyData& s);
/// ∫_D i^* i_* 1 (the self-intersection number for a divisor on a surface).
Rat self_intersection(const SubvarietyData& s);

SubvarietyData diagonal_in_p1xp1();
/// Strict transform of a conic through the blown-up point, class 2h − e.
SubvarietyData conic_in_blowup();
SubvarietyData hyperplane_in(int n);
SubvarietyData plane_curve_in_p2(int d_E);

}  // namespace lyu
