// linalg.hpp
//
// Exact linear algebra over the rationals. Every matrix carries a label for
// each row and column so that a failing check can name the classes involved.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lyu {

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rat = mpq_class;

using BasisLabel = std::string;
using Basis = std::vector<BasisLabel>;

/// Throws ShapeError if a label is empty or repeated.
void validate_basis(const Basis& basis, const std::string& context);

/**
 * Dense rational matrix of a linear map between labeled bases.
 *
 * Column c is the image of the c-th source basis vector expressed in the
 * target basis (rows). Entries are stored row-major.
 */
class QMat {
 public:
  QMat() = default;
  /// Zero map from `col_labels` to `row_labels`.
  QMat(Basis row_labels, Basis col_labels);

  static QMat identity(const Basis& basis);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool empty() const { return rows() == 0 || cols() == 0; }

  const Basis& row_labels() const { return row_labels_; }
  const Basis& col_labels() const { return col_labels_; }

  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }

  bool is_zero() const;

  QMat transpose() const;
  QMat scaled(const Rat& s) const;
  /// Same entries under new labels (sizes must agree).
  QMat relabeled(Basis row_labels, Basis col_labels) const;
  /// Sub-matrix on the given row and column index lists.
  QMat select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend QMat operator+(const QMat& a, const QMat& b);
  friend QMat operator-(const QMat& a, const QMat& b);
  /// Equal entries and labels.
  friend bool operator==(const QMat& a, const QMat& b);

  std::string to_string() const;

 private:
  Basis row_labels_;
  Basis col_labels_;
  std::vector<Rat> data_;
};

std::size_t rank(const QMat& m);
std::size_t kernel_dim(const QMat& m);
std::size_t cokernel_dim(const QMat& m);

/// a ∘ b; requires col_labels(a) == row_labels(b).
QMat compose(const QMat& a, const QMat& b);
/// Product ignoring labels (sizes must agree); used for coordinate algebra.
QMat multiply(const QMat& a, const QMat& b);

/// [a | b] with shared row labels.
QMat hstack(const QMat& a, const QMat& b);
/// [a ; b] with shared column labels.
QMat vstack(const QMat& a, const QMat& b);
/// a ⊕ b.
QMat block_diag(const QMat& a, const QMat& b);
/// Kronecker product, labels joined as "r⊗s".
QMat kron(const QMat& a, const QMat& b);

/// Reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref_in_place(QMat& m);

/// Inverse of a square invertible matrix (labels swapped). Throws ShapeError otherwise.
QMat inverse(const QMat& m);

/// Unique x with a·x = b, where a has full column rank and b lies in its image.
QMat solve(const QMat& a, const QMat& b);

/// Basis of Ker(m) as the columns of a (cols(m) × nullity) matrix.
/// Column labels are "ker<free column label>".
QMat kernel_basis(const QMat& m);

/// Column-space complement data for Coker(m: V → W).
struct Quotient {
  QMat section;     ///< W × c; chosen standard vectors spanning a complement of im(m)
  QMat projection;  ///< c × W; coordinates in W / im(m), vanishing on im(m)
  std::size_t dim() const { return section.cols(); }
};
Quotient cokernel_basis(const QMat& m);

}  // namespace lyu
