#include "lyu/presentation.hpp"

#include "lyu/error.hpp"

namespace lyu {

const WGVS& PerversePresentation::piece(int j) const {
  static const WGVS kEmpty;
  auto it = pieces.find(j);
  return it == pieces.end() ? kEmpty : it->second;
}

std::map<int, GradedOp> PerversePresentation::ops(const AmpleSelection& sel) const {
  if (!class_model) throw UnsupportedError(name + ": no ample classes are available on this object");
  auto out = class_model(sel);
  for (const auto& [j, op] : out) {
    if (!has_piece(j)) throw InternalInconsistency(name + ": operator on the absent piece j=" + std::to_string(j));
    if (!(op.source() == piece(j)) || !(op.target() == piece(j)))
      throw InternalInconsistency(name + ": operator does not act on piece j=" + std::to_string(j));
  }
  return out;
}

void PerversePresentation::finalize() {
  for (auto it = pieces.begin(); it != pieces.end();) {
    if (it->second.is_zero())
      it = pieces.erase(it);
    else
      ++it;
  }
  for (const auto& [j, v] : pieces)
    if (j > dim || j < 0)
      throw InternalInconsistency(name + ": piece j=" + std::to_string(j) + " outside [0, " + std::to_string(dim) + "]");
  pure = pieces.size() == 1 && pieces.begin()->first == dim;
}

PerversePresentation presentation_of_smooth(const SmoothAtom& a) {
  const int d = a.dim();
  const TwistShift t{d, d};
  PerversePresentation p;
  p.name = a.name();
  p.dim = d;
  p.pieces[d] = twist(a.cohomology(), t);
  p.class_model = [a, t, d](const AmpleSelection& sel) {
    std::map<int, GradedOp> out;
    out.emplace(d, twist(a.class_op(sel), t));
    return out;
  };
  long chi = 0;
  for (int k = 0; k <= 2 * d; ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(a.ring().betti(k));
  p.predicted_euler[d] = (d % 2 == 0 ? 1 : -1) * chi;
  p.provenance.push_back("smooth atom " + a.name());
  p.finalize();
  return p;
}

}  // namespace lyu
