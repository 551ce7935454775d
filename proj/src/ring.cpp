#include "lyu/ring.hpp"

#include "lyu/error.hpp"

namespace lyu {

CohomologyRing::CohomologyRing(std::string name, int dim, Basis labels, std::vector<int> degrees)
    : name_(std::move(name)), dim_(dim), labels_(std::move(labels)), degrees_(std::move(degrees)) {
  validate_basis(labels_, name_);
  if (labels_.size() != degrees_.size()) throw ShapeError(name_ + ": one degree per basis element required");
  integral_.assign(labels_.size(), Rat(0));
}

std::size_t CohomologyRing::index_of(const BasisLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw ShapeError(name_ + ": no basis element '" + label + "'");
}

std::vector<std::size_t> CohomologyRing::indices_in_degree(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == k) out.push_back(i);
  return out;
}

void CohomologyRing::set_product(std::size_t i, std::size_t j, Vec v) {
  if (v.size() != size()) throw ShapeError(name_ + ": product vector has the wrong length");
  bool nonzero = false;
  for (const auto& x : v)
    if (sgn(x) != 0) nonzero = true;
  if (nonzero)
    products_[{i, j}] = std::move(v);
  else
    products_.erase({i, j});
}

void CohomologyRing::set_integral(std::size_t i, Rat value) {
  if (degrees_[i] != 2 * dim_ && sgn(value) != 0)
    throw ShapeError(name_ + ": integral of '" + labels_[i] + "' must vanish below the top degree");
  integral_[i] = std::move(value);
}

Vec CohomologyRing::unit() const {
  if (!unit_.empty()) return unit_;
  return basis_vector(index_of("1"));
}

Vec CohomologyRing::basis_vector(std::size_t i) const {
  Vec v(size());
  v[i] = 1;
  return v;
}

Vec CohomologyRing::element(const std::vector<std::pair<BasisLabel, Rat>>& terms) const {
  Vec v(size());
  for (const auto& [label, c] : terms) v[index_of(label)] += c;
  return v;
}

Vec CohomologyRing::multiply(const Vec& a, const Vec& b) const {
  Vec out(size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      auto it = products_.find({i, j});
      if (it == products_.end()) continue;
      Rat c = a[i] * b[j];
      for (std::size_t k = 0; k < out.size(); ++k)
        if (sgn(it->second[k]) != 0) out[k] += c * it->second[k];
    }
  }
  return out;
}

Rat CohomologyRing::integrate(const Vec& a) const {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) s += a[i] * integral_[i];
  return s;
}

int CohomologyRing::degree_of(const Vec& a) const {
  int deg = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    if (deg >= 0 && degrees_[i] != deg) throw ShapeError(name_ + ": element is not homogeneous");
    deg = degrees_[i];
  }
  return deg;
}

QMat CohomologyRing::mult_matrix(const Vec& x) const {
  QMat m(labels_, labels_);
  for (std::size_t c = 0; c < size(); ++c) {
    Vec col = multiply(x, basis_vector(c));
    for (std::size_t r = 0; r < size(); ++r) m(r, c) = col[r];
  }
  return m;
}

QMat CohomologyRing::pairing() const {
  QMat m(labels_, labels_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = integrate(multiply(basis_vector(i), basis_vector(j)));
  return m;
}

WGVS CohomologyRing::cohomology() const {
  std::map<Grade, Basis> pieces;
  for (std::size_t i = 0; i < size(); ++i) pieces[{degrees_[i], degrees_[i]}].push_back(labels_[i]);
  return WGVS(name_, std::move(pieces));
}

GradedOp CohomologyRing::cup_op(std::string name, const Vec& x) const {
  int s = degree_of(x);
  if (s < 0) s = 2;
  QMat full = mult_matrix(x);
  WGVS h = cohomology();
  std::map<Grade, QMat> blocks;
  for (const auto& [g, basis] : h.pieces()) {
    if (h.basis({g.degree + s, g.weight + s}).empty()) continue;
    blocks.emplace(g, degree_block(full, *this, g.degree, *this, g.degree + s));
  }
  return GradedOp(std::move(name), h, h, std::move(blocks), s, s);
}

QMat degree_block(const QMat& full, const CohomologyRing& source, int from, const CohomologyRing& target, int to) {
  return full.select(target.indices_in_degree(to), source.indices_in_degree(from));
}

Vec apply_map(const QMat& m, const Vec& v) {
  if (v.size() != m.cols()) throw ShapeError("apply: vector length does not match the matrix");
  Vec out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
  }
  return out;
}

namespace {

void set_unit_products(CohomologyRing& r) {
  std::size_t one = r.index_of("1");
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.set_product(one, i, r.basis_vector(i));
    r.set_product(i, one, r.basis_vector(i));
  }
}

}  // namespace

CohomologyRing ring_projective(int n, const std::string& gen) {
  if (n < 0) throw PreconditionError("projective space of negative dimension");
  Basis labels{"1"};
  std::vector<int> degrees{0};
  for (int i = 1; i <= n; ++i) {
    labels.push_back(i == 1 ? gen : gen + "^" + std::to_string(i));
    degrees.push_back(2 * i);
  }
  CohomologyRing r("P" + std::to_string(n), n, labels, degrees);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.set_product(i, j, r.basis_vector(i + j));
  r.set_integral(n, 1);
  return r;
}

CohomologyRing ring_p1xp1() {
  CohomologyRing r("P1xP1", 2, {"1", "e1", "e2", "e1e2"}, {0, 2, 2, 4});
  set_unit_products(r);
  r.set_product(1, 2, r.basis_vector(3));
  r.set_product(2, 1, r.basis_vector(3));
  r.set_integral(3, 1);
  return r;
}

CohomologyRing ring_blowup_p2() {
  CohomologyRing r("BlowupP2", 2, {"1", "h", "e", "p"}, {0, 2, 2, 4});
  set_unit_products(r);
  Vec minus_p = r.zero();
  minus_p[3] = -1;
  r.set_product(1, 1, r.basis_vector(3));
  r.set_product(2, 2, minus_p);
  r.set_integral(3, 1);
  return r;
}

CohomologyRing ring_curve(int genus) {
  if (genus < 0) throw PreconditionError("negative genus");
  Basis labels{"1"};
  std::vector<int> degrees{0};
  for (int i = 1; i <= genus; ++i) labels.push_back("a" + std::to_string(i)), degrees.push_back(1);
  for (int i = 1; i <= genus; ++i) labels.push_back("b" + std::to_string(i)), degrees.push_back(1);
  labels.push_back("pt");
  degrees.push_back(2);
  CohomologyRing r("Curve[g=" + std::to_string(genus) + "]", 1, labels, degrees);
  set_unit_products(r);
  std::size_t pt = labels.size() - 1;
  Vec minus_pt = r.zero();
  minus_pt[pt] = -1;
  for (int i = 1; i <= genus; ++i) {
    r.set_product(i, genus + i, r.basis_vector(pt));
    r.set_product(genus + i, i, minus_pt);
  }
  r.set_integral(pt, 1);
  return r;
}

CohomologyRing ring_tensor(const CohomologyRing& a, const CohomologyRing& b) {
  Basis labels;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      labels.push_back(a.label(i) + "⊗" + b.label(j));
      degrees.push_back(a.degree(i) + b.degree(j));
    }
  CohomologyRing r(a.name() + "×" + b.name(), a.dim() + b.dim(), labels, degrees);
  const std::size_t nb = b.size();
  for (std::size_t i1 = 0; i1 < a.size(); ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < a.size(); ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          Vec pa = a.multiply(a.basis_vector(i1), a.basis_vector(i2));
          Vec pb = b.multiply(b.basis_vector(j1), b.basis_vector(j2));
          int sign = (b.degree(j1) * a.degree(i2)) % 2 == 0 ? 1 : -1;
          Vec v = r.zero();
          bool any = false;
          for (std::size_t x = 0; x < pa.size(); ++x) {
            if (sgn(pa[x]) == 0) continue;
            for (std::size_t y = 0; y < nb; ++y)
              if (sgn(pb[y]) != 0) v[x * nb + y] = sign * pa[x] * pb[y], any = true;
          }
          if (any) r.set_product(i1 * nb + j1, i2 * nb + j2, std::move(v));
        }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Rat v = a.integrate(a.basis_vector(i)) * b.integrate(b.basis_vector(j));
      if (sgn(v) != 0) r.set_integral(i * nb + j, v);
    }
  Vec ua = a.unit(), ub = b.unit(), u = r.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) u[i * nb + j] = ua[i] * ub[j];
  r.set_unit(u);
  return r;
}

CohomologyRing ring_leray_hirsch(const CohomologyRing& base, const Vec& c_prime, const std::string& xi) {
  if (c_prime.size() != base.size()) throw ShapeError("Leray-Hirsch: c' does not live in the base ring");
  const std::size_t n = base.size();
  Basis labels = base.labels();
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(base.degree(i));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(base.label(i) + "·" + xi);
    degrees.push_back(base.degree(i) + 2);
  }
  CohomologyRing r(base.name() + "[" + xi + "]", base.dim() + 1, labels, degrees);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec p = base.multiply(base.basis_vector(i), base.basis_vector(j));
      Vec pc = base.multiply(p, c_prime);
      Vec plain = r.zero(), with_xi = r.zero(), xi_xi = r.zero();
      for (std::size_t k = 0; k < n; ++k) {
        plain[k] = p[k];
        with_xi[n + k] = p[k];
        xi_xi[n + k] = pc[k];
      }
      r.set_product(i, j, plain);
      r.set_product(i, n + j, with_xi);
      r.set_product(n + i, j, with_xi);
      r.set_product(n + i, n + j, xi_xi);
    }
  for (std::size_t i = 0; i < n; ++i) {
    Rat v = base.integrate(base.basis_vector(i));
    if (sgn(v) != 0) r.set_integral(n + i, v);
  }
  Vec u = r.zero(), ub = base.unit();
  for (std::size_t i = 0; i < n; ++i) u[i] = ub[i];
  r.set_unit(u);
  return r;
}

CohomologyRing ring_disjoint_union(const CohomologyRing& a, const CohomologyRing& b, const std::string& pa,
                                   const std::string& pb) {
  if (a.dim() != b.dim()) throw ShapeError("disjoint union of components of different dimensions");
  Basis labels;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < a.size(); ++i) labels.push_back(pa + ":" + a.label(i)), degrees.push_back(a.degree(i));
  for (std::size_t i = 0; i < b.size(); ++i) labels.push_back(pb + ":" + b.label(i)), degrees.push_back(b.degree(i));
  CohomologyRing r(a.name() + "⊔" + b.name(), a.dim(), labels, degrees);
  const std::size_t na = a.size();
  auto embed = [&](const Vec& v, std::size_t offset) {
    Vec out = r.zero();
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
    return out;
  };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) r.set_product(i, j, embed(a.multiply(a.basis_vector(i), a.basis_vector(j)), 0));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r.set_product(na + i, na + j, embed(b.multiply(b.basis_vector(i), b.basis_vector(j)), na));
  for (std::size_t i = 0; i < na; ++i) r.set_integral(i, a.integrate(a.basis_vector(i)));
  for (std::size_t i = 0; i < b.size(); ++i) r.set_integral(na + i, b.integrate(b.basis_vector(i)));
  Vec u = embed(a.unit(), 0), ub = embed(b.unit(), na);
  for (std::size_t k = 0; k < u.size(); ++k) u[k] += ub[k];
  r.set_unit(u);
  return r;
}

QMat union_component_restriction(const CohomologyRing& u, const CohomologyRing& component, const std::string& prefix) {
  QMat m(component.labels(), u.labels());
  for (std::size_t i = 0; i < component.size(); ++i) m(i, u.index_of(prefix + ":" + component.label(i))) = 1;
  return m;
}

QMat map_into_union(const CohomologyRing& u, const QMat& into_a, const std::string& pa, const QMat& into_b,
                    const std::string& pb) {
  if (into_a.col_labels() != into_b.col_labels()) throw ShapeError("map_into_union: different sources");
  QMat m(u.labels(), into_a.col_labels());
  for (std::size_t r = 0; r < into_a.rows(); ++r)
    for (std::size_t c = 0; c < into_a.cols(); ++c) m(u.index_of(pa + ":" + into_a.row_labels()[r]), c) = into_a(r, c);
  for (std::size_t r = 0; r < into_b.rows(); ++r)
    for (std::size_t c = 0; c < into_b.cols(); ++c) m(u.index_of(pb + ":" + into_b.row_labels()[r]), c) = into_b(r, c);
  return m;
}

QMat leray_hirsch_pullback(const CohomologyRing& bundle, const CohomologyRing& base) {
  if (bundle.size() != 2 * base.size()) throw ShapeError("leray_hirsch_pullback: not a bundle over this base");
  QMat m(bundle.labels(), base.labels());
  for (std::size_t i = 0; i < base.size(); ++i) m(i, i) = 1;
  return m;
}

QMat leray_hirsch_base_change(const CohomologyRing& bundle_src, const CohomologyRing& bundle_tgt, const QMat& f) {
  const std::size_t ns = f.cols(), nt = f.rows();
  if (bundle_src.size() != 2 * ns || bundle_tgt.size() != 2 * nt)
    throw ShapeError("leray_hirsch_base_change: base map does not match the bundles");
  QMat m(bundle_tgt.labels(), bundle_src.labels());
  for (std::size_t r = 0; r < nt; ++r)
    for (std::size_t c = 0; c < ns; ++c) {
      m(r, c) = f(r, c);
      m(nt + r, ns + c) = f(r, c);
    }
  return m;
}

QMat leray_hirsch_section(const CohomologyRing& bundle, const CohomologyRing& base, const Vec& xi_image) {
  const std::size_t n = base.size();
  if (bundle.size() != 2 * n) throw ShapeError("leray_hirsch_section: not a bundle over this base");
  QMat m(base.labels(), bundle.labels());
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
    Vec v = base.multiply(base.basis_vector(i), xi_image);
    for (std::size_t r = 0; r < n; ++r) m(r, n + i) = v[r];
  }
  return m;
}

bool is_ring_map(const CohomologyRing& source, const CohomologyRing& target, const QMat& f) {
  if (f.rows() != target.size() || f.cols() != source.size()) return false;
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r)
      if (sgn(f(r, c)) != 0 && target.degree(r) != source.degree(c)) return false;
  if (apply_map(f, source.unit()) != target.unit()) return false;
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j) {
      Vec lhs = apply_map(f, source.multiply(source.basis_vector(i), source.basis_vector(j)));
      Vec rhs = target.multiply(apply_map(f, source.basis_vector(i)), apply_map(f, source.basis_vector(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

QMat gysin_adjoint(const CohomologyRing& y, const CohomologyRing& d, const QMat& restrict) {
  if (restrict.rows() != d.size() || restrict.cols() != y.size())
    throw ShapeError("gysin_adjoint: restriction " + y.name() + " → " + d.name() + " has the wrong shape");
  QMat pt = y.pairing().transpose();
  QMat rhs(y.labels(), d.labels());
  for (std::size_t j = 0; j < y.size(); ++j) {
    Vec rj = apply_map(restrict, y.basis_vector(j));
    for (std::size_t a = 0; a < d.size(); ++a) rhs(j, a) = d.integrate(d.multiply(d.basis_vector(a), rj));
  }
  try {
    return solve(pt.relabeled(y.labels(), y.labels()), rhs);
  } catch (const ShapeError&) {
    throw PreconditionError("gysin_adjoint: the pairing on " + y.name() + " is degenerate");
  }
}

bool projection_formula_holds(const CohomologyRing& y, const CohomologyRing& d, const QMat& restrict,
                              const QMat& gysin) {
  for (std::size_t x = 0; x < y.size(); ++x) {
    Vec rx = apply_map(restrict, y.basis_vector(x));
    for (std::size_t a = 0; a < d.size(); ++a) {
      Vec lhs = apply_map(gysin, d.multiply(rx, d.basis_vector(a)));
      Vec rhs = y.multiply(y.basis_vector(x), apply_map(gysin, d.basis_vector(a)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace lyu
