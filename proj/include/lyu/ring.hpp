// ring.hpp
//
// Hard-coded rational cohomology rings of the smooth projective pieces used
// by the constructions: multiplication tables, fundamental-class integrals,
// ring maps (restrictions) and the Gysin maps dual to them.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lyu/graded.hpp"
#include "lyu/linalg.hpp"

namespace lyu {

/// Coordinate vector in a ring's basis.
using Vec = std::vector<Rat>;

class CohomologyRing {
 public:
  CohomologyRing() = default;
  /// `dim` is the complex dimension; the integral lives in degree 2·dim.
  CohomologyRing(std::string name, int dim, Basis labels, std::vector<int> degrees);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  std::size_t size() const { return labels_.size(); }
  const Basis& labels() const { return labels_; }
  const BasisLabel& label(std::size_t i) const { return labels_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::size_t index_of(const BasisLabel& label) const;
  std::vector<std::size_t> indices_in_degree(int k) const;
  std::size_t betti(int k) const { return indices_in_degree(k).size(); }

  /// e_i · e_j = v. Unset products are zero.
  void set_product(std::size_t i, std::size_t j, Vec v);
  void set_integral(std::size_t i, Rat value);
  /// Defaults to the basis vector labeled "1".
  void set_unit(Vec u) { unit_ = std::move(u); }

  Vec zero() const { return Vec(size()); }
  Vec unit() const;
  Vec basis_vector(std::size_t i) const;
  Vec element(const std::vector<std::pair<BasisLabel, Rat>>& terms) const;

  Vec multiply(const Vec& a, const Vec& b) const;
  Rat integrate(const Vec& a) const;
  /// Degree of a nonzero homogeneous element; throws ShapeError when mixed.
  int degree_of(const Vec& a) const;

  /// Left multiplication by x on the whole ring.
  QMat mult_matrix(const Vec& x) const;
  /// (i, j) ↦ ∫ e_i e_j.
  QMat pairing() const;

  /// H^•, pure: weight = degree.
  WGVS cohomology() const;
  /// Cup product with x (homogeneous) as a graded operator on cohomology().
  GradedOp cup_op(std::string name, const Vec& x) const;

 private:
  std::string name_;
  int dim_ = 0;
  Basis labels_;
  std::vector<int> degrees_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> products_;
  std::vector<Rat> integral_;
  Vec unit_;
};

/// Rows in degree `to`, columns in degree `from`, of a whole-ring map.
QMat degree_block(const QMat& full, const CohomologyRing& source, int from, const CohomologyRing& target, int to);
Vec apply_map(const QMat& m, const Vec& v);

CohomologyRing ring_projective(int n, const std::string& gen = "h");
/// e1, e2 pulled back from the two factors.
CohomologyRing ring_p1xp1();
/// h (line), e (exceptional curve), p (point): h² = p, e² = −p, he = 0.
CohomologyRing ring_blowup_p2();
/// Basis 1, a1..ag, b1..bg, pt with a_i b_i = pt = −b_i a_i.
CohomologyRing ring_curve(int genus);
/// Künneth ring with Koszul signs; labels "x⊗y".
CohomologyRing ring_tensor(const CohomologyRing& a, const CohomologyRing& b);
/// Projective bundle P(O ⊕ L) over `base`: basis {b, b·ξ} with ξ² = c'·ξ, ∫ bξ = ∫_base b.
CohomologyRing ring_leray_hirsch(const CohomologyRing& base, const Vec& c_prime, const std::string& xi = "ξ");
/// Disjoint union; labels get "pa:" and "pb:" prefixes.
CohomologyRing ring_disjoint_union(const CohomologyRing& a, const CohomologyRing& b, const std::string& pa,
                                   const std::string& pb);

/// Restriction map of a disjoint union onto one component (0 or 1).
QMat union_component_restriction(const CohomologyRing& u, const CohomologyRing& component, const std::string& prefix);
/// The map into a disjoint union assembled from maps into each component.
QMat map_into_union(const CohomologyRing& u, const QMat& into_a, const std::string& pa, const QMat& into_b,
                    const std::string& pb);
/// Map into a Leray–Hirsch ring that sends b to b (pullback from the base).
QMat leray_hirsch_pullback(const CohomologyRing& bundle, const CohomologyRing& base);
/// Base change of Leray–Hirsch rings along f: base → base', applied to both b and bξ.
QMat leray_hirsch_base_change(const CohomologyRing& bundle_src, const CohomologyRing& bundle_tgt, const QMat& f);
/// Section restriction b + b'ξ ↦ b + b'·s where s is the image of ξ (c' for the zero section, 0 at infinity).
QMat leray_hirsch_section(const CohomologyRing& bundle, const CohomologyRing& base, const Vec& xi_image);

/// True iff f(1) = 1 and f(xy) = f(x)f(y) on all basis pairs, with f degree-preserving.
bool is_ring_map(const CohomologyRing& source, const CohomologyRing& target, const QMat& f);

/// Gysin map of f: D → Y from the restriction f^*: ∫_Y G(a)·y = ∫_D a·f^*(y).
QMat gysin_adjoint(const CohomologyRing& y, const CohomologyRing& d, const QMat& restrict);
/// G(f^*(x)·a) = x·G(a) for all basis x, a.
bool projection_formula_holds(const CohomologyRing& y, const CohomologyRing& d, const QMat& restrict,
                              const QMat& gysin);

}  // namespace lyu
