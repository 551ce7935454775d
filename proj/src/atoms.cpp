#include "lyu/atoms.hpp"

#include <algorithm>
#include <set>

#include "lyu/error.hpp"

namespace lyu {

AmpleSelection AmpleSelection::of(LinearClass c) {
  AmpleSelection s;
  s.linear = std::move(c);
  return s;
}

AmpleSelection AmpleSelection::of(std::vector<std::pair<std::string, long>> terms) {
  return of(LinearClass{std::move(terms)});
}

AmpleSelection AmpleSelection::segre(AmpleSelection l, AmpleSelection r) {
  AmpleSelection s;
  s.kind = Kind::Segre;
  s.left = std::make_shared<const AmpleSelection>(std::move(l));
  s.right = std::make_shared<const AmpleSelection>(std::move(r));
  return s;
}

std::string AmpleSelection::to_string() const {
  if (kind == Kind::Segre) {
    auto wrap = [](const AmpleSelection& s) {
      std::string t = s.to_string();
      return s.kind == Kind::Linear && s.linear.terms.size() > 1 ? "(" + t + ")" : t;
    };
    return wrap(*left) + " * " + wrap(*right);
  }
  std::string out;
  for (const auto& [name, c] : linear.terms) {
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + " ";
    out += name;
  }
  return out.empty() ? "0" : out;
}

SmoothAtom::SmoothAtom(std::string name, CohomologyRing ring, std::vector<std::pair<std::string, Vec>> generators,
                       std::vector<ConeInequality> cone)
    : name_(std::move(name)), ring_(std::move(ring)), generators_(std::move(generators)), cone_(std::move(cone)) {
  std::set<std::string> seen;
  for (const auto& [g, v] : generators_) {
    if (!seen.insert(g).second) throw ShapeError(name_ + ": generator '" + g + "' declared twice");
    if (v.size() != ring_.size()) throw ShapeError(name_ + ": generator '" + g + "' has the wrong length");
    int deg = ring_.degree_of(v);
    if (deg != -1 && deg != 2) throw ShapeError(name_ + ": generator '" + g + "' is not a degree-2 class");
  }
}

const Vec& SmoothAtom::generator(const std::string& name) const {
  for (const auto& [g, v] : generators_)
    if (g == name) return v;
  std::string known;
  for (const auto& [g, v] : generators_) known += (known.empty() ? "" : ", ") + g;
  throw InvalidClassError(name_ + ": unknown class '" + name + "' (known: " + known + ")");
}

std::vector<std::pair<std::string, long>> SmoothAtom::resolve(const AmpleSelection& sel) const {
  std::vector<std::pair<std::string, long>> out;
  for (const auto& [g, v] : generators_) out.emplace_back(g, 0);
  auto add = [&](const std::string& name, long c) {
    generator(name);
    for (auto& [g, x] : out)
      if (g == name) x += c;
  };
  if (sel.kind == AmpleSelection::Kind::Linear) {
    for (const auto& [name, c] : sel.linear.terms) add(name, c);
    return out;
  }
  if (factors_.size() != 2)
    throw InvalidClassError(name_ + ": '" + sel.to_string() + "' is a product selection but " + name_ +
                            " is not a product");
  const AmpleSelection* parts[2] = {sel.left.get(), sel.right.get()};
  for (int f = 0; f < 2; ++f)
    for (const auto& [local, c] : factors_[f]->resolve(*parts[f])) {
      if (c == 0) continue;
      for (const auto& [from, to] : factor_names_[f])
        if (from == local) add(to, c);
    }
  return out;
}

Vec SmoothAtom::class_element(const AmpleSelection& sel) const {
  auto coeffs = resolve(sel);
  auto coeff = [&](const std::string& name) {
    for (const auto& [g, c] : coeffs)
      if (g == name) return c;
    return 0L;
  };
  for (const auto& ineq : cone_) {
    long v = 0;
    for (const auto& [name, c] : ineq.form) v += c * coeff(name);
    if (v <= 0)
      throw InvalidClassError(name_ + ": class " + sel.to_string() + " is outside the ample cone (needs " + ineq.text +
                              ")");
  }
  Vec x = ring_.zero();
  for (const auto& [g, c] : coeffs) {
    const Vec& v = generator(g);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * v[i];
  }
  return x;
}

GradedOp SmoothAtom::class_op(const AmpleSelection& sel) const {
  Vec x = class_element(sel);
  return ring_.cup_op("c1(" + sel.to_string() + ")", x);
}

SmoothAtom projective_space(int n) {
  CohomologyRing r = ring_projective(n);
  Vec h = r.zero();
  if (n >= 1) h[1] = 1;
  return SmoothAtom("P" + std::to_string(n), r, {{"h", h}}, {{{{"h", 1}}, "h > 0"}});
}

SmoothAtom p1xp1() {
  CohomologyRing r = ring_p1xp1();
  return SmoothAtom("P1xP1", r, {{"e1", r.basis_vector(1)}, {"e2", r.basis_vector(2)}},
                    {{{{"e1", 1}}, "a1 > 0 for a1·e1 + a2·e2"}, {{{"e2", 1}}, "a2 > 0 for a1·e1 + a2·e2"}});
}

SmoothAtom blowup_p2() {
  CohomologyRing r = ring_blowup_p2();
  return SmoothAtom("BlowupP2", r, {{"h", r.basis_vector(1)}, {"e", r.basis_vector(2)}},
                    {{{{"e", -1}}, "b > 0 for a·h − b·e"}, {{{"h", 1}, {"e", 1}}, "a > b for a·h − b·e"}});
}

int plane_curve_genus(int d_E) {
  if (d_E < 1) throw PreconditionError("plane curve degree must be at least 1");
  return (d_E - 1) * (d_E - 2) / 2;
}

SmoothAtom plane_curve(int d_E) {
  int g = plane_curve_genus(d_E);
  CohomologyRing r = ring_curve(g);
  Vec h = r.zero();
  h[r.index_of("pt")] = d_E;
  return SmoothAtom("Curve(" + std::to_string(d_E) + ")", r, {{"h", h}}, {{{{"h", 1}}, "h > 0"}});
}

SmoothAtom atom_product(const SmoothAtom& a, const SmoothAtom& b) {
  CohomologyRing r = ring_tensor(a.ring(), b.ring());
  std::set<std::string> na, nb;
  for (const auto& [g, v] : a.generators()) na.insert(g);
  for (const auto& [g, v] : b.generators()) nb.insert(g);
  bool clash = std::any_of(na.begin(), na.end(), [&](const std::string& g) { return nb.count(g) > 0; });

  std::vector<std::pair<std::string, Vec>> gens;
  std::vector<std::vector<std::pair<std::string, std::string>>> names(2);
  auto pull = [&](const Vec& x, const Vec& y) {
    Vec out = r.zero();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
    return out;
  };
  for (const auto& [g, v] : a.generators()) {
    std::string n = clash ? g + "1" : g;
    gens.emplace_back(n, pull(v, b.ring().unit()));
    names[0].emplace_back(g, n);
  }
  for (const auto& [g, v] : b.generators()) {
    std::string n = clash ? g + "2" : g;
    gens.emplace_back(n, pull(a.ring().unit(), v));
    names[1].emplace_back(g, n);
  }
  std::vector<ConeInequality> cone;
  for (int f = 0; f < 2; ++f)
    for (const auto& ineq : (f == 0 ? a : b).cone()) {
      ConeInequality c;
      c.text = ineq.text;
      for (const auto& [g, k] : ineq.form)
        for (const auto& [from, to] : names[f])
          if (from == g) c.form.emplace_back(to, k);
      cone.push_back(c);
    }
  SmoothAtom out(a.name() + "x" + b.name(), r, gens, cone);
  out.factors_ = {std::make_shared<const SmoothAtom>(a), std::make_shared<const SmoothAtom>(b)};
  out.factor_names_ = names;
  return out;
}

bool poincare_symmetric(const SmoothAtom& a) {
  const CohomologyRing& r = a.ring();
  int d = r.dim();
  for (int k = 0; k <= 2 * d; ++k)
    if (r.betti(k) != r.betti(2 * d - k)) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r.degree(i) < 0 || r.degree(i) > 2 * d) return false;
  return r.betti(0) == 1 && rank(r.pairing()) == r.size();
}

bool hard_lefschetz_holds(const SmoothAtom& a, const AmpleSelection& sel) {
  const CohomologyRing& r = a.ring();
  Vec l = a.class_element(sel);
  int d = r.dim();
  for (int k = 0; k <= d; ++k) {
    Vec power = r.unit();
    for (int i = 0; i < d - k; ++i) power = r.multiply(power, l);
    QMat m = degree_block(r.mult_matrix(power), r, k, r, 2 * d - k);
    if (m.rows() != m.cols() || rank(m) != m.cols()) return false;
  }
  return true;
}

bool gysin_matches_adjoint(const SubvarietyData& s) {
  return gysin_adjoint(s.ambient.ring(), s.sub.ring(), s.restrict) == s.gysin;
}

bool projection_formula_check(const SubvarietyData& s) {
  return projection_formula_holds(s.ambient.ring(), s.sub.ring(), s.restrict, s.gysin);
}

Rat self_intersection(const SubvarietyData& s) {
  const CohomologyRing& d = s.sub.ring();
  if (s.codim != d.dim()) throw PreconditionError(s.name + ": self-intersection needs codim = dim of the subvariety");
  return d.integrate(apply_map(s.restrict, apply_map(s.gysin, d.unit())));
}

namespace {

SubvarietyData make_sub(std::string name, SmoothAtom y, SmoothAtom d, int codim,
                        const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>>& res,
                        const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>>& gys) {
  SubvarietyData s;
  s.name = std::move(name);
  s.codim = codim;
  s.restrict = QMat(d.ring().labels(), y.ring().labels());
  s.gysin = QMat(y.ring().labels(), d.ring().labels());
  for (const auto& [src, img] : res)
    for (const auto& [tgt, c] : img) s.restrict(d.ring().index_of(tgt), y.ring().index_of(src)) = c;
  for (const auto& [src, img] : gys)
    for (const auto& [tgt, c] : img) s.gysin(y.ring().index_of(tgt), d.ring().index_of(src)) = c;
  s.ambient = std::move(y);
  s.sub = std::move(d);
  return s;
}

}  // namespace

SubvarietyData diagonal_in_p1xp1() {
  return make_sub("diagonal", p1xp1(), projective_space(1), 1,
                  {{"1", {{"1", 1}}}, {"e1", {{"h", 1}}}, {"e2", {{"h", 1}}}},
                  {{"1", {{"e1", 1}, {"e2", 1}}}, {"h", {{"e1e2", 1}}}});
}

SubvarietyData conic_in_blowup() {
  return make_sub("conic", blowup_p2(), projective_space(1), 1, {{"1", {{"1", 1}}}, {"h", {{"h", 2}}}, {"e", {{"h", 1}}}},
                  {{"1", {{"h", 2}, {"e", -1}}}, {"h", {{"p", 1}}}});
}

SubvarietyData hyperplane_in(int n) {
  if (n < 1) throw PreconditionError("a hyperplane needs an ambient P^n with n >= 1");
  SmoothAtom y = projective_space(n), d = projective_space(n - 1);
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>> res, gys;
  for (int i = 0; i < n; ++i) {
    res.push_back({y.ring().label(i), {{d.ring().label(i), 1}}});
    gys.push_back({d.ring().label(i), {{y.ring().label(i + 1), 1}}});
  }
  return make_sub("hyperplane", y, d, 1, res, gys);
}

SubvarietyData plane_curve_in_p2(int d_E) {
  SmoothAtom e = plane_curve(d_E);
  return make_sub(e.name(), projective_space(2), e, 1, {{"1", {{"1", 1}}}, {"h", {{"pt", d_E}}}},
                  {{"1", {{"h", d_E}}}, {"pt", {{"h^2", 1}}}});
}

}  // namespace lyu
