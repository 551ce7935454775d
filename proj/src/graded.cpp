#include "lyu/graded.hpp"

#include <set>
#include <sstream>

#include "lyu/error.hpp"

namespace lyu {

std::string to_string(const Grade& g) {
  return "(k=" + std::to_string(g.degree) + ",w=" + std::to_string(g.weight) + ")";
}

WGVS::WGVS(std::string name, std::map<Grade, Basis> pieces) : name_(std::move(name)) {
  std::set<std::string> seen;
  for (auto& [g, basis] : pieces) {
    if (basis.empty()) continue;
    for (const auto& label : basis) {
      if (label.empty()) throw ShapeError(name_ + ": empty basis label");
      if (!seen.insert(label).second)
        throw ShapeError(name_ + ": basis label '" + label + "' appears twice");
    }
    pieces_.emplace(g, std::move(basis));
  }
}

WGVS WGVS::renamed(std::string name) const {
  WGVS out = *this;
  out.name_ = std::move(name);
  return out;
}

const Basis& WGVS::basis(const Grade& g) const {
  static const Basis kEmpty;
  auto it = pieces_.find(g);
  return it == pieces_.end() ? kEmpty : it->second;
}

std::size_t WGVS::dim(int degree) const {
  std::size_t n = 0;
  for (const auto& [g, b] : pieces_)
    if (g.degree == degree) n += b.size();
  return n;
}

std::size_t WGVS::total_dim() const {
  std::size_t n = 0;
  for (const auto& [g, b] : pieces_) n += b.size();
  return n;
}

std::vector<int> WGVS::degrees() const {
  std::set<int> ks;
  for (const auto& [g, b] : pieces_) ks.insert(g.degree);
  return {ks.begin(), ks.end()};
}

std::vector<int> WGVS::weights_in(int degree) const {
  std::vector<int> ws;
  for (const auto& [g, b] : pieces_)
    if (g.degree == degree) ws.push_back(g.weight);
  return ws;
}

long WGVS::euler_characteristic() const {
  long chi = 0;
  for (const auto& [g, b] : pieces_) chi += (g.degree % 2 == 0 ? 1 : -1) * static_cast<long>(b.size());
  return chi;
}

Grade WGVS::grade_of(const BasisLabel& label) const {
  for (const auto& [g, b] : pieces_)
    for (const auto& l : b)
      if (l == label) return g;
  throw ShapeError(name_ + ": unknown basis label '" + label + "'");
}

bool WGVS::contains(const BasisLabel& label) const {
  for (const auto& [g, b] : pieces_)
    for (const auto& l : b)
      if (l == label) return true;
  return false;
}

std::string dims_string(const WGVS& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, b] : v.pieces()) {
    if (!first) os << " ";
    first = false;
    os << g.degree << ":" << g.weight << "=" << b.size();
  }
  return os.str();
}

WGVS direct_sum(const WGVS& a, const WGVS& b) {
  bool collision = false;
  for (const auto& [g, basis] : b.pieces())
    for (const auto& l : basis)
      if (a.contains(l)) collision = true;
  std::string pa, pb;
  if (collision) {
    pa = a.name().empty() || a.name() == b.name() ? "0" : a.name();
    pb = b.name().empty() || a.name() == b.name() ? "1" : b.name();
    pa += "/";
    pb += "/";
  }
  std::map<Grade, Basis> pieces;
  for (const auto& [g, basis] : a.pieces())
    for (const auto& l : basis) pieces[g].push_back(pa + l);
  for (const auto& [g, basis] : b.pieces())
    for (const auto& l : basis) pieces[g].push_back(pb + l);
  std::string name = a.name().empty() ? b.name() : (b.name().empty() ? a.name() : a.name() + "⊕" + b.name());
  return WGVS(name, std::move(pieces));
}

WGVS kunneth(const WGVS& a, const WGVS& b) {
  std::map<Grade, Basis> pieces;
  for (const auto& [ga, ba] : a.pieces())
    for (const auto& [gb, bb] : b.pieces()) {
      Grade g{ga.degree + gb.degree, ga.weight + gb.weight};
      for (const auto& x : ba)
        for (const auto& y : bb) pieces[g].push_back(x + "⊗" + y);
    }
  return WGVS(a.name() + "⊗" + b.name(), std::move(pieces));
}

WGVS twist(const WGVS& a, const TwistShift& t) {
  std::map<Grade, Basis> pieces;
  for (const auto& [g, basis] : a.pieces()) pieces[{g.degree - t.shift, g.weight - 2 * t.tate}] = basis;
  return WGVS(a.name(), std::move(pieces));
}

GradedOp::GradedOp(std::string name, WGVS source, WGVS target, std::map<Grade, QMat> blocks, int degree_step,
                   int weight_step)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      degree_step_(degree_step),
      weight_step_(weight_step) {
  for (auto& [g, m] : blocks) {
    const Basis& src = source_.basis(g);
    const Basis& tgt = target_.basis(image_grade(g));
    if (src.empty()) throw ShapeError(name_ + ": block at empty source grade " + to_string(g));
    if (m.col_labels() != src || m.row_labels() != tgt)
      throw ShapeError(name_ + ": block at " + to_string(g) + " does not match the declared bases");
    if (tgt.empty()) continue;
    blocks_.emplace(g, std::move(m));
  }
}

GradedOp GradedOp::zero(std::string name, const WGVS& source, const WGVS& target, int degree_step,
                        int weight_step) {
  return GradedOp(std::move(name), source, target, {}, degree_step, weight_step);
}

GradedOp GradedOp::identity(const WGVS& space) {
  std::map<Grade, QMat> blocks;
  for (const auto& [g, b] : space.pieces()) blocks.emplace(g, QMat::identity(b));
  return GradedOp("id", space, space, std::move(blocks), 0, 0);
}

GradedOp GradedOp::from_action(std::string name, const WGVS& source, const WGVS& target, const Action& act,
                               int degree_step, int weight_step) {
  std::map<Grade, QMat> blocks;
  for (const auto& [g, basis] : source.pieces()) {
    Grade img{g.degree + degree_step, g.weight + weight_step};
    const Basis& tgt = target.basis(img);
    QMat m(tgt, basis);
    std::map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < tgt.size(); ++i) row_of[tgt[i]] = i;
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (const auto& [label, coeff] : act(basis[c])) {
        if (sgn(coeff) == 0) continue;
        auto it = row_of.find(label);
        if (it == row_of.end())
          throw ShapeError(name + ": image of '" + basis[c] + "' has component '" + label +
                           "' outside target grade " + to_string(img));
        m(it->second, c) += coeff;
      }
    if (!tgt.empty()) blocks.emplace(g, std::move(m));
  }
  return GradedOp(std::move(name), source, target, std::move(blocks), degree_step, weight_step);
}

QMat GradedOp::block(const Grade& g) const {
  auto it = blocks_.find(g);
  if (it != blocks_.end()) return it->second;
  return QMat(target_.basis(image_grade(g)), source_.basis(g));
}

QMat GradedOp::degree_matrix(int degree) const {
  Basis rows, cols;
  for (const auto& [g, b] : target_.pieces())
    if (g.degree == degree + degree_step_) rows.insert(rows.end(), b.begin(), b.end());
  for (const auto& [g, b] : source_.pieces())
    if (g.degree == degree) cols.insert(cols.end(), b.begin(), b.end());
  QMat m(rows, cols);
  std::map<std::string, std::size_t> row_of, col_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
  for (const auto& [g, blk] : blocks_) {
    if (g.degree != degree) continue;
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c)
        m(row_of.at(blk.row_labels()[r]), col_of.at(blk.col_labels()[c])) = blk(r, c);
  }
  return m;
}

GradedOp GradedOp::renamed(std::string name) const {
  GradedOp out = *this;
  out.name_ = std::move(name);
  return out;
}

GradedOp GradedOp::scaled(const Rat& s) const {
  GradedOp out = *this;
  for (auto& [g, m] : out.blocks_) m = m.scaled(s);
  return out;
}

GradedOp operator+(const GradedOp& a, const GradedOp& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_) || a.degree_step_ != b.degree_step_ ||
      a.weight_step_ != b.weight_step_)
    throw ShapeError("operator sum: '" + a.name_ + "' and '" + b.name_ + "' act between different spaces");
  GradedOp out = a;
  out.name_ = a.name_ + "+" + b.name_;
  for (const auto& [g, m] : b.blocks_) {
    auto it = out.blocks_.find(g);
    if (it == out.blocks_.end())
      out.blocks_.emplace(g, m);
    else
      it->second = it->second + m;
  }
  return out;
}

GradedOp compose(const GradedOp& a, const GradedOp& b) {
  if (!(a.source() == b.target())) throw ShapeError("compose: '" + a.name() + "' cannot follow '" + b.name() + "'");
  std::map<Grade, QMat> blocks;
  for (const auto& [g, mb] : b.blocks()) {
    Grade mid = b.image_grade(g);
    if (a.source().basis(mid).empty()) continue;
    QMat prod = compose(a.block(mid), mb);
    if (prod.rows() > 0) blocks.emplace(g, std::move(prod));
  }
  return GradedOp(a.name() + "∘" + b.name(), b.source(), a.target(), std::move(blocks),
                  a.degree_step() + b.degree_step(), a.weight_step() + b.weight_step());
}

GradedOp twist(const GradedOp& op, const TwistShift& t) {
  std::map<Grade, QMat> blocks;
  for (const auto& [g, m] : op.blocks()) blocks.emplace(Grade{g.degree - t.shift, g.weight - 2 * t.tate}, m);
  return GradedOp(op.name(), twist(op.source(), t), twist(op.target(), t), std::move(blocks), op.degree_step(),
                  op.weight_step());
}

namespace {

using ImageMap = std::map<std::string, std::vector<std::pair<BasisLabel, Rat>>>;

GradedOp from_images(std::string name, const WGVS& src, const WGVS& tgt, const ImageMap& images, int ds, int ws) {
  return GradedOp::from_action(
      std::move(name), src, tgt,
      [&](const BasisLabel& l) {
        auto it = images.find(l);
        return it == images.end() ? std::vector<std::pair<BasisLabel, Rat>>{} : it->second;
      },
      ds, ws);
}

}  // namespace

GradedOp tensor_left(const GradedOp& a, const WGVS& b) {
  ImageMap images;
  for (const auto& [ga, blk] : a.blocks())
    for (const auto& [gb, bb] : b.pieces())
      for (std::size_t c = 0; c < blk.cols(); ++c)
        for (const auto& y : bb) {
          auto& img = images[blk.col_labels()[c] + "⊗" + y];
          for (std::size_t r = 0; r < blk.rows(); ++r)
            if (sgn(blk(r, c)) != 0) img.emplace_back(blk.row_labels()[r] + "⊗" + y, blk(r, c));
        }
  return from_images(a.name() + "⊗id", kunneth(a.source(), b), kunneth(a.target(), b), images, a.degree_step(),
                     a.weight_step());
}

GradedOp tensor_right(const WGVS& a, const GradedOp& b) {
  ImageMap images;
  for (const auto& [gb, blk] : b.blocks())
    for (const auto& [ga, ba] : a.pieces())
      for (std::size_t c = 0; c < blk.cols(); ++c)
        for (const auto& x : ba) {
          auto& img = images[x + "⊗" + blk.col_labels()[c]];
          for (std::size_t r = 0; r < blk.rows(); ++r)
            if (sgn(blk(r, c)) != 0) img.emplace_back(x + "⊗" + blk.row_labels()[r], blk(r, c));
        }
  return from_images("id⊗" + b.name(), kunneth(a, b.source()), kunneth(a, b.target()), images, b.degree_step(),
                     b.weight_step());
}

GradedOp segre_sum(const GradedOp& a, const GradedOp& b) {
  if (!(a.source() == a.target()) || !(b.source() == b.target()))
    throw ShapeError("segre_sum: operators must be endomorphisms");
  return (tensor_left(a, b.source()) + tensor_right(a.source(), b)).renamed(a.name() + "⊠" + b.name());
}

std::size_t op_kernel_dim_at(const GradedOp& op, const Grade& g) {
  std::size_t d = op.source().dim(g);
  if (d == 0) return 0;
  return kernel_dim(op.block(g));
}

std::size_t op_cokernel_dim_at(const GradedOp& op, const Grade& g) {
  std::size_t d = op.target().dim(g);
  if (d == 0) return 0;
  Grade src{g.degree - op.degree_step(), g.weight - op.weight_step()};
  if (op.source().dim(src) == 0) return d;
  return cokernel_dim(op.block(src));
}

std::size_t op_kernel_dim_at(const GradedOp& op, int degree) {
  std::size_t n = 0;
  for (const auto& [g, b] : op.source().pieces())
    if (g.degree == degree) n += op_kernel_dim_at(op, g);
  return n;
}

std::size_t op_cokernel_dim_at(const GradedOp& op, int degree) {
  std::size_t n = 0;
  for (const auto& [g, b] : op.target().pieces())
    if (g.degree == degree) n += op_cokernel_dim_at(op, g);
  return n;
}

bool check_commute(const GradedOp& a, const GradedOp& b) {
  if (!(a.source() == a.target()) || !(b.source() == b.target()) || !(a.source() == b.source()))
    throw ShapeError("check_commute: '" + a.name() + "' and '" + b.name() + "' do not act on one space");
  GradedOp ab = compose(a, b), ba = compose(b, a);
  for (const auto& [g, basis] : a.source().pieces()) {
    QMat x = ab.block(g), y = ba.block(g);
    if (x.rows() != y.rows() || !(x - y).is_zero()) return false;
  }
  return true;
}

bool surjectivity_propagation(const GradedOp& c_a, const GradedOp& c_b, int p, int q) {
  if (c_a.degree_step() != 1 || c_b.degree_step() != 1 || c_a.weight_step() != c_b.weight_step())
    throw PreconditionError("surjectivity_propagation: both operators must raise degree by 1");
  if (!(c_a.source() == c_a.target()) || !(c_b.source() == c_b.target()))
    throw PreconditionError("surjectivity_propagation: operators must be endomorphisms");
  for (int k : c_a.source().degrees())
    if (k < p || k > p + 2)
      throw PreconditionError("surjectivity_propagation: A has a nonzero piece in degree " + std::to_string(k) +
                              " outside [p, p+2]");
  for (int i = q; i <= q + 2; ++i)
    if (op_cokernel_dim_at(c_b, i + 1) != 0)
      throw PreconditionError("surjectivity_propagation: c'' is not surjective onto B_" + std::to_string(i + 1));
  GradedOp c = segre_sum(c_a, c_b);
  return op_cokernel_dim_at(c, p + q + 3) == 0;
}

}  // namespace lyu
