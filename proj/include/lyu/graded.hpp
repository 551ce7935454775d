// graded.hpp
//
// Degree- and weight-graded rational vector spaces (only the associated
// weight-graded is modeled) and graded operators between them.
//
// Conventions: H^k of a smooth proper variety is pure of weight k, homology
// H_k is pure of weight -k, and the Tate twist (m) subtracts 2m from weights.

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lyu/linalg.hpp"

namespace lyu {

struct Grade {
  int degree = 0;
  int weight = 0;
  auto operator<=>(const Grade&) const = default;
};

std::string to_string(const Grade& g);

/// Finite weight-graded, degree-graded vector space with labeled bases.
class WGVS {
 public:
  WGVS() = default;
  /// Zero-dimensional pieces are dropped; labels must be disjoint across pieces.
  WGVS(std::string name, std::map<Grade, Basis> pieces);

  const std::string& name() const { return name_; }
  WGVS renamed(std::string name) const;

  const std::map<Grade, Basis>& pieces() const { return pieces_; }
  /// Empty basis when the piece is absent.
  const Basis& basis(const Grade& g) const;
  std::size_t dim(const Grade& g) const { return basis(g).size(); }
  /// Total dimension in degree k (sum over weights).
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  bool is_zero() const { return pieces_.empty(); }

  std::vector<int> degrees() const;
  std::vector<int> weights_in(int degree) const;
  /// Σ_k (-1)^k dim(k).
  long euler_characteristic() const;

  /// Grade of a basis label; throws ShapeError if the label is unknown.
  Grade grade_of(const BasisLabel& label) const;
  bool contains(const BasisLabel& label) const;

  friend bool operator==(const WGVS& a, const WGVS& b) { return a.pieces_ == b.pieces_; }

 private:
  std::string name_;
  std::map<Grade, Basis> pieces_;
};

/// Piecewise dims only, "k:w=dim" list; handy for diagnostics and tests.
std::string dims_string(const WGVS& v);

/// Tate twist (m) and complex shift [s].
struct TwistShift {
  int tate = 0;   ///< weight w ↦ w − 2·tate
  int shift = 0;  ///< degree k ↦ k − shift
};

WGVS direct_sum(const WGVS& a, const WGVS& b);
WGVS kunneth(const WGVS& a, const WGVS& b);
WGVS twist(const WGVS& a, const TwistShift& t);

/**
 * Graded map raising degree by `degree_step` and weight by `weight_step`.
 *
 * Blocks are keyed by source grade; an absent block is the zero map. Every
 * block's row and column labels match the declared bases exactly.
 */
class GradedOp {
 public:
  GradedOp() = default;
  GradedOp(std::string name, WGVS source, WGVS target, std::map<Grade, QMat> blocks,
           int degree_step = 2, int weight_step = 2);

  static GradedOp zero(std::string name, const WGVS& source, const WGVS& target, int degree_step = 2,
                       int weight_step = 2);
  static GradedOp identity(const WGVS& space);

  /// Builds the blocks from the image of each source label.
  using Action = std::function<std::vector<std::pair<BasisLabel, Rat>>(const BasisLabel&)>;
  static GradedOp from_action(std::string name, const WGVS& source, const WGVS& target, const Action& act,
                              int degree_step = 2, int weight_step = 2);

  const std::string& name() const { return name_; }
  const WGVS& source() const { return source_; }
  const WGVS& target() const { return target_; }
  int degree_step() const { return degree_step_; }
  int weight_step() const { return weight_step_; }
  Grade image_grade(const Grade& g) const { return {g.degree + degree_step_, g.weight + weight_step_}; }

  /// Block at a source grade; a zero matrix of the right shape when absent.
  QMat block(const Grade& g) const;
  const std::map<Grade, QMat>& blocks() const { return blocks_; }

  /// Whole-degree matrix H^k → H^{k+step}, weights concatenated in order.
  QMat degree_matrix(int degree) const;

  GradedOp renamed(std::string name) const;
  GradedOp scaled(const Rat& s) const;
  friend GradedOp operator+(const GradedOp& a, const GradedOp& b);

 private:
  std::string name_;
  WGVS source_, target_;
  int degree_step_ = 2;
  int weight_step_ = 2;
  std::map<Grade, QMat> blocks_;
};

/// a ∘ b.
GradedOp compose(const GradedOp& a, const GradedOp& b);
/// Re-grades an endomorphism along with its space.
GradedOp twist(const GradedOp& op, const TwistShift& t);
/// a ⊗ id_B and id_A ⊗ b on kunneth(A, B); no signs (operators of even degree).
GradedOp tensor_left(const GradedOp& a, const WGVS& b);
GradedOp tensor_right(const WGVS& a, const GradedOp& b);
/// a ⊗ id + id ⊗ b.
GradedOp segre_sum(const GradedOp& a, const GradedOp& b);

/// dim Ker(ℓ: degree k → k+step), computed weight by weight.
std::size_t op_kernel_dim_at(const GradedOp& op, int degree);
/// dim Coker(ℓ: degree k−step → k), computed weight by weight.
std::size_t op_cokernel_dim_at(const GradedOp& op, int degree);
/// Weight-resolved versions: kernel inside the source piece g, cokernel of the map into the target piece g.
std::size_t op_kernel_dim_at(const GradedOp& op, const Grade& g);
std::size_t op_cokernel_dim_at(const GradedOp& op, const Grade& g);

/// True iff a∘b = b∘a on every block. ShapeError unless both act on one space.
bool check_commute(const GradedOp& a, const GradedOp& b);

/**
 * For c' on A (A supported in degrees [p, p+2]) and c'' on B surjective
 * B_i → B_{i+1} for i in [q, q+2], checks that c = c'⊗id + id⊗c'' maps
 * C_{p+q+2} onto C_{p+q+3} for C = A⊗B. Operators must have degree step 1.
 * Throws PreconditionError when the hypotheses fail.
 */
bool surjectivity_propagation(const GradedOp& c_a, const GradedOp& c_b, int p, int q);

}  // namespace lyu
