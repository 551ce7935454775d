#include "lyu/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lyu/error.hpp"

namespace lyu {

namespace {

Basis cell_labels(const std::string& prefix, std::size_t n) {
  Basis b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(prefix + std::to_string(i));
  return b;
}

QMat zero_boundary(std::size_t from_dim, std::size_t from_n, std::size_t to_n) {
  return QMat(cell_labels("c" + std::to_string(from_dim - 1) + "_", to_n),
              cell_labels("c" + std::to_string(from_dim) + "_", from_n));
}

}  // namespace

ChainComplex make_complex(std::string name, std::vector<std::size_t> dims, std::vector<QMat> boundaries) {
  if (dims.empty()) throw ShapeError(name + ": a chain complex needs at least one degree");
  if (boundaries.size() != dims.size() - 1)
    throw ShapeError(name + ": " + std::to_string(dims.size()) + " degrees need " + std::to_string(dims.size() - 1) +
                     " boundary maps");
  for (std::size_t i = 0; i < boundaries.size(); ++i)
    if (boundaries[i].rows() != dims[i] || boundaries[i].cols() != dims[i + 1])
      throw ShapeError(name + ": ∂_" + std::to_string(i + 1) + " has the wrong shape");
  return {std::move(name), std::move(dims), std::move(boundaries)};
}

std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  for (std::size_t i = 0; i + 1 < c.boundaries.size(); ++i)
    if (!multiply(c.boundaries[i], c.boundaries[i + 1]).is_zero())
      throw PreconditionError(c.name + ": ∂∘∂ ≠ 0 in degree " + std::to_string(i + 2));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    std::size_t ker = i == 0 ? c.dims[0] : kernel_dim(c.boundaries[i - 1]);
    std::size_t im = i < c.boundaries.size() ? rank(c.boundaries[i]) : 0;
    out.push_back(ker - im);
  }
  return out;
}

ChainComplex simplicial_complex(std::string name, const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> faces;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t n = f.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      if (faces.size() < s.size()) faces.resize(s.size());
      faces[s.size() - 1].insert(s);
    }
  }
  std::vector<std::vector<std::vector<int>>> cells;
  std::vector<std::size_t> dims;
  for (const auto& fs : faces) {
    cells.emplace_back(fs.begin(), fs.end());
    dims.push_back(fs.size());
  }
  std::vector<QMat> bd;
  for (std::size_t p = 1; p < cells.size(); ++p) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < cells[p - 1].size(); ++i) index[cells[p - 1][i]] = i;
    QMat m = zero_boundary(p, cells[p].size(), cells[p - 1].size());
    for (std::size_t c = 0; c < cells[p].size(); ++c)
      for (std::size_t drop = 0; drop < cells[p][c].size(); ++drop) {
        std::vector<int> face = cells[p][c];
        face.erase(face.begin() + static_cast<long>(drop));
        m(index.at(face), c) = drop % 2 == 0 ? 1 : -1;
      }
    bd.push_back(std::move(m));
  }
  return make_complex(std::move(name), std::move(dims), std::move(bd));
}

ChainComplex cw_point() { return make_complex("point", {1}, {}); }

ChainComplex cw_sphere(int n) {
  if (n < 0) throw PreconditionError("cw_sphere: negative dimension");
  if (n == 0) return make_complex("S^0", {2}, {});
  std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, 0);
  dims.front() = 1;
  dims.back() = 1;
  std::vector<QMat> bd;
  for (int i = 1; i <= n; ++i) bd.push_back(zero_boundary(i, dims[i], dims[i - 1]));
  return make_complex("S^" + std::to_string(n), dims, bd);
}

ChainComplex simplex_boundary(int n) {
  if (n < 0) throw PreconditionError("simplex_boundary: negative dimension");
  std::vector<std::vector<int>> facets;
  for (int drop = 0; drop <= n + 1; ++drop) {
    std::vector<int> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != drop) f.push_back(v);
    facets.push_back(f);
  }
  return simplicial_complex("∂Δ^" + std::to_string(n + 1), facets);
}

ChainComplex simplicial_torus() {
  std::vector<std::vector<int>> facets;
  auto v = [](int i, int j) { return 3 * (i % 3) + (j % 3); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      facets.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      facets.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return simplicial_complex("T^2", facets);
}

ChainComplex cw_surface(int genus) {
  if (genus < 0) throw PreconditionError("cw_surface: negative genus");
  const std::size_t e = 2 * static_cast<std::size_t>(genus);
  if (genus == 0) return cw_sphere(2);
  // Each edge appears twice with opposite signs in Π[a_i, b_i].
  return make_complex("Σ_" + std::to_string(genus), {1, e, 1}, {zero_boundary(1, e, 1), zero_boundary(2, 1, e)});
}

ChainComplex cw_complex_projective(int n) {
  if (n < 0) throw PreconditionError("cw_complex_projective: negative dimension");
  std::vector<std::size_t> dims(2 * static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) dims[2 * i] = 1;
  std::vector<QMat> bd;
  for (std::size_t i = 1; i < dims.size(); ++i) bd.push_back(zero_boundary(i, dims[i], dims[i - 1]));
  return make_complex("CP^" + std::to_string(n), dims, bd);
}

ChainComplex cw_real_projective_plane() {
  QMat d1 = zero_boundary(1, 1, 1);
  QMat d2 = zero_boundary(2, 1, 1);
  d2(0, 0) = 2;
  return make_complex("RP^2", {1, 1, 1}, {d1, d2});
}

bool exactness_audit(const LesWindow& w) {
  if (w.dims.empty()) {
    if (!w.ranks.empty()) throw ShapeError(w.name + ": ranks given for an empty window");
    return true;
  }
  if (w.ranks.size() + 1 != w.dims.size())
    throw ShapeError(w.name + ": " + std::to_string(w.dims.size()) + " terms need " +
                     std::to_string(w.dims.size() - 1) + " ranks, got " + std::to_string(w.ranks.size()));
  for (long d : w.dims)
    if (d < 0) return false;
  for (long r : w.ranks)
    if (r < 0) return false;
  for (std::size_t i = 0; i < w.dims.size(); ++i) {
    long in = i == 0 ? 0 : w.ranks[i - 1];
    long out = i < w.ranks.size() ? w.ranks[i] : 0;
    if (w.dims[i] != in + out) return false;
  }
  return true;
}

bool euler_check(const PerversePresentation& p) {
  for (const auto& [j, chi] : p.predicted_euler)
    if (p.piece(j).euler_characteristic() != chi) return false;
  return true;
}

bool rank_nullity_holds(const GradedOp& op) {
  for (const auto& [g, basis] : op.source().pieces()) {
    QMat b = op.block(g);
    if (b.cols() != basis.size() || rank(b) + kernel_dim(b) != b.cols()) return false;
  }
  return true;
}

std::vector<AuditLine> audit_presentation(const PerversePresentation& p) {
  std::vector<AuditLine> out;
  for (const auto& w : p.windows) out.push_back({"exact: " + w.name, exactness_audit(w)});
  out.push_back({"euler: " + p.name, euler_check(p)});
  for (const auto& c : p.checks) out.push_back({"check: " + c.name, c.passed});
  return out;
}

}  // namespace lyu
