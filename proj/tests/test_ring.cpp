#include <doctest.h>

#include "lyu/error.hpp"
#include "lyu/ring.hpp"

using namespace lyu;

namespace {

bool nondegenerate(const CohomologyRing& r) { return rank(r.pairing()) == r.size(); }

Vec e(const CohomologyRing& r, const std::string& l) { return r.basis_vector(r.index_of(l)); }

}  // namespace

TEST_CASE("projective space rings") {
  for (int n = 0; n <= 5; ++n) {
    CohomologyRing r = ring_projective(n);
    CHECK(r.size() == static_cast<std::size_t>(n + 1));
    CHECK(nondegenerate(r));
    if (n >= 1) {
      Vec h = e(r, "h"), p = r.unit();
      for (int i = 0; i < n; ++i) p = r.multiply(p, h);
      CHECK(r.integrate(p) == 1);
      CHECK(r.multiply(p, h) == r.zero());
    }
  }
}

TEST_CASE("intersection numbers") {
  CohomologyRing q = ring_p1xp1();
  Vec d = e(q, "e1");
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += e(q, "e2")[i];
  CHECK(q.integrate(q.multiply(d, d)) == 2);
  CohomologyRing b = ring_blowup_p2();
  Vec c = b.element({{"h", 2}, {"e", -1}});
  CHECK(q.degree_of(d) == 2);
  CHECK(b.integrate(b.multiply(c, c)) == 3);
  CHECK(b.integrate(b.multiply(e(b, "e"), e(b, "e"))) == -1);
}

TEST_CASE("curves: odd classes anticommute") {
  for (int g = 0; g <= 3; ++g) {
    CohomologyRing c = ring_curve(g);
    CHECK(c.betti(1) == static_cast<std::size_t>(2 * g));
    CHECK(nondegenerate(c));
    if (g > 0) {
      Vec a = e(c, "a1"), b = e(c, "b1");
      CHECK(c.integrate(c.multiply(a, b)) == 1);
      CHECK(c.integrate(c.multiply(b, a)) == -1);
      CHECK(c.multiply(a, a) == c.zero());
    }
  }
}

TEST_CASE("tensor products carry Koszul signs") {
  CohomologyRing c = ring_curve(1);
  CohomologyRing t = ring_tensor(c, c);
  CHECK(t.size() == 16);
  CHECK(nondegenerate(t));
  Vec x = e(t, "a1⊗1"), y = e(t, "1⊗b1");
  Vec xy = t.multiply(x, y), yx = t.multiply(y, x);
  for (std::size_t i = 0; i < xy.size(); ++i) CHECK(xy[i] == -yx[i]);
  CohomologyRing pp = ring_tensor(ring_projective(1, "e1"), ring_projective(1, "e2"));
  CHECK(pp.betti(2) == 2);
  CHECK(pp.integrate(pp.multiply(e(pp, "e1⊗1"), e(pp, "1⊗e2"))) == 1);
}

TEST_CASE("Leray-Hirsch ring of P(O + L)") {
  CohomologyRing base = ring_projective(2, "h");
  Vec c = e(base, "h");
  CohomologyRing z = ring_leray_hirsch(base, c);
  CHECK(z.size() == 2 * base.size());
  CHECK(z.dim() == 3);
  CHECK(nondegenerate(z));
  Vec xi = e(z, "1·ξ"), ch = e(z, "h");
  CHECK(z.multiply(xi, xi) == z.multiply(ch, xi));
  QMat s0 = leray_hirsch_section(z, base, c), sinf = leray_hirsch_section(z, base, base.zero());
  CHECK(is_ring_map(z, base, s0));
  CHECK(is_ring_map(z, base, sinf));
  CHECK(is_ring_map(base, z, leray_hirsch_pullback(z, base)));
}

TEST_CASE("disjoint unions and maps into them") {
  CohomologyRing p = ring_projective(2);
  CohomologyRing u = ring_disjoint_union(p, p, "A", "B");
  CHECK(u.size() == 6);
  CHECK(u.betti(0) == 2);
  QMat ra = union_component_restriction(u, p, "A");
  CHECK(is_ring_map(u, p, ra));
  QMat id = QMat::identity(p.labels());
  QMat into = map_into_union(u, id, "A", id, "B");
  CHECK(is_ring_map(p, u, into));
  CHECK(compose(ra, into) == id);
}

TEST_CASE("Gysin maps are adjoint to restriction") {
  CohomologyRing y = ring_projective(2), d = ring_projective(1);
  QMat r(d.labels(), y.labels());
  r(0, 0) = 1;
  r(1, 1) = 1;
  CHECK(is_ring_map(y, d, r));
  QMat g = gysin_adjoint(y, d, r);
  CHECK(apply_map(g, d.unit()) == e(y, "h"));
  CHECK(apply_map(g, e(d, "h")) == e(y, "h^2"));
  CHECK(projection_formula_holds(y, d, r, g));
}

TEST_CASE("bad ring data is rejected") {
  CohomologyRing r = ring_projective(1);
  CHECK_THROWS_AS(r.index_of("nope"), ShapeError);
  Vec mixed = r.unit();
  mixed[1] = 1;
  CHECK_THROWS_AS(r.degree_of(mixed), ShapeError);
  CHECK(r.degree_of(r.zero()) == -1);
}
