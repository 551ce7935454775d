#include "lyu/linalg.hpp"

#include <set>
#include <sstream>

#include "lyu/error.hpp"

namespace lyu {

namespace {

Basis anon_labels(std::size_t n, const std::string& prefix) {
  Basis out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

void validate_basis(const Basis& basis, const std::string& context) {
  std::set<std::string> seen;
  for (const auto& label : basis) {
    if (label.empty()) throw ShapeError(context + ": empty basis label");
    if (!seen.insert(label).second) throw ShapeError(context + ": duplicate basis label '" + label + "'");
  }
}

QMat::QMat(Basis row_labels, Basis col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  validate_basis(row_labels_, "matrix rows");
  validate_basis(col_labels_, "matrix columns");
  data_.assign(row_labels_.size() * col_labels_.size(), Rat(0));
}

QMat QMat::identity(const Basis& basis) {
  QMat m(basis, basis);
  for (std::size_t i = 0; i < basis.size(); ++i) m(i, i) = 1;
  return m;
}

bool QMat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

QMat QMat::transpose() const {
  QMat t(col_labels_, row_labels_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMat QMat::scaled(const Rat& s) const {
  QMat out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

QMat QMat::relabeled(Basis row_labels, Basis col_labels) const {
  if (row_labels.size() != rows() || col_labels.size() != cols())
    throw ShapeError("relabel: size mismatch");
  QMat out(std::move(row_labels), std::move(col_labels));
  out.data_ = data_;
  return out;
}

QMat QMat::select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Basis rl, cl;
  for (auto r : rs) rl.push_back(row_labels_.at(r));
  for (auto c : cs) cl.push_back(col_labels_.at(c));
  QMat out(rl, cl);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
  return out;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum: size mismatch");
  QMat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

QMat operator-(const QMat& a, const QMat& b) { return a + b.scaled(-1); }

bool operator==(const QMat& a, const QMat& b) {
  return a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ && a.data_ == b.data_;
}

std::string QMat::to_string() const {
  std::ostringstream os;
  os << rows() << "x" << cols() << "\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    os << "  " << row_labels_[r] << ":";
    for (std::size_t c = 0; c < cols(); ++c) os << " " << (*this)(r, c);
    os << "\n";
  }
  return os.str();
}

std::vector<std::size_t> rref_in_place(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rat inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const QMat& m) {
  if (m.empty()) return 0;
  QMat work = m;
  return rref_in_place(work).size();
}

std::size_t kernel_dim(const QMat& m) { return m.cols() - rank(m); }
std::size_t cokernel_dim(const QMat& m) { return m.rows() - rank(m); }

QMat multiply(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw ShapeError("compose: dimension mismatch");
  QMat out(a.row_labels(), b.col_labels());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

QMat compose(const QMat& a, const QMat& b) {
  if (a.col_labels() != b.row_labels()) {
    std::string msg = "compose: source of left factor does not match target of right factor";
    if (a.cols() == b.rows())
      for (std::size_t i = 0; i < a.cols(); ++i)
        if (a.col_labels()[i] != b.row_labels()[i]) {
          msg += " ('" + a.col_labels()[i] + "' vs '" + b.row_labels()[i] + "')";
          break;
        }
    throw ShapeError(msg);
  }
  return multiply(a, b);
}

QMat hstack(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row count mismatch");
  Basis cl = a.col_labels();
  cl.insert(cl.end(), b.col_labels().begin(), b.col_labels().end());
  QMat out(a.row_labels(), cl);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

QMat vstack(const QMat& a, const QMat& b) { return hstack(a.transpose(), b.transpose()).transpose(); }

QMat block_diag(const QMat& a, const QMat& b) {
  Basis rl = a.row_labels(), cl = a.col_labels();
  rl.insert(rl.end(), b.row_labels().begin(), b.row_labels().end());
  cl.insert(cl.end(), b.col_labels().begin(), b.col_labels().end());
  QMat out(rl, cl);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

QMat kron(const QMat& a, const QMat& b) {
  Basis rl, cl;
  for (const auto& x : a.row_labels())
    for (const auto& y : b.row_labels()) rl.push_back(x + "⊗" + y);
  for (const auto& x : a.col_labels())
    for (const auto& y : b.col_labels()) cl.push_back(x + "⊗" + y);
  QMat out(rl, cl);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
  QMat aug = hstack(m.relabeled(m.row_labels(), anon_labels(m.cols(), "#c")),
                    QMat::identity(m.row_labels()).relabeled(m.row_labels(), anon_labels(m.rows(), "#i")));
  auto piv = rref_in_place(aug);
  if (piv.size() != m.rows() || (!piv.empty() && piv.back() >= m.cols()))
    throw ShapeError("inverse: matrix is singular");
  QMat inv(m.col_labels(), m.row_labels());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) inv(r, c) = aug(r, m.cols() + c);
  return inv;
}

QMat solve(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row count mismatch");
  QMat aug = hstack(a.relabeled(a.row_labels(), anon_labels(a.cols(), "#x")),
                    b.relabeled(a.row_labels(), anon_labels(b.cols(), "#b")));
  auto piv = rref_in_place(aug);
  if (piv.size() < a.cols()) throw ShapeError("solve: coefficient matrix lacks full column rank");
  for (std::size_t i = 0; i < a.cols(); ++i)
    if (piv[i] != i) throw ShapeError("solve: coefficient matrix lacks full column rank");
  for (std::size_t r = a.cols(); r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (sgn(aug(r, a.cols() + c)) != 0) throw ShapeError("solve: right-hand side is not in the image");
  QMat x(a.col_labels(), b.col_labels());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, a.cols() + c);
  return x;
}

QMat kernel_basis(const QMat& m) {
  QMat work = m;
  auto piv = rref_in_place(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  Basis labels;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) {
      free_cols.push_back(c);
      labels.push_back("ker<" + m.col_labels()[c] + ">");
    }
  QMat k(m.col_labels(), labels);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t f = free_cols[i];
    k(f, i) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], i) = -work(r, f);
  }
  return k;
}

Quotient cokernel_basis(const QMat& m) {
  // Independent image columns, then a complement of their span from the
  // standard basis: non-pivot positions of rref(image^T).
  QMat work = m;
  auto piv = rref_in_place(work);
  QMat image = m.select([&] {
    std::vector<std::size_t> all(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) all[i] = i;
    return all;
  }(), piv);
  QMat t = image.transpose();
  auto row_piv = image.cols() == 0 ? std::vector<std::size_t>{} : rref_in_place(t);
  std::vector<bool> used(m.rows(), false);
  for (auto p : row_piv) used[p] = true;
  Basis labels;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!used[r]) {
      chosen.push_back(r);
      labels.push_back("[" + m.row_labels()[r] + "]");
    }
  Quotient q;
  q.section = QMat(m.row_labels(), labels);
  for (std::size_t i = 0; i < chosen.size(); ++i) q.section(chosen[i], i) = 1;
  QMat full = hstack(image.relabeled(m.row_labels(), anon_labels(image.cols(), "#im")), q.section);
  QMat inv = inverse(full);
  std::vector<std::size_t> tail, cols;
  for (std::size_t i = image.cols(); i < full.cols(); ++i) tail.push_back(i);
  for (std::size_t c = 0; c < m.rows(); ++c) cols.push_back(c);
  q.projection = inv.select(tail, cols).relabeled(labels, m.row_labels());
  return q;
}

}  // namespace lyu
