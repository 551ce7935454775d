#include <doctest.h>

#include <random>

#include "lyu/constructions.hpp"
#include "lyu/error.hpp"
#include "lyu/oracle.hpp"

using namespace lyu;

namespace {

using Dims = std::vector<std::size_t>;

Basis names(std::size_t n, const std::string& p) {
  Basis b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(p + std::to_string(i));
  return b;
}

long chain_euler(const ChainComplex& c) {
  long e = 0;
  for (std::size_t i = 0; i < c.dims.size(); ++i) e += (i % 2 ? -1 : 1) * static_cast<long>(c.dims[i]);
  return e;
}

long homology_euler(const Dims& h) {
  long e = 0;
  for (std::size_t i = 0; i < h.size(); ++i) e += (i % 2 ? -1 : 1) * static_cast<long>(h[i]);
  return e;
}

}  // namespace

TEST_CASE("cell and simplicial models have the known homology") {
  CHECK(homology_dims(cw_point()) == Dims{1});
  CHECK(homology_dims(cw_sphere(5)) == Dims{1, 0, 0, 0, 0, 1});
  CHECK(homology_dims(simplex_boundary(5)) == Dims{1, 0, 0, 0, 0, 1});
  CHECK(homology_dims(simplex_boundary(1)) == Dims{1, 1});
  CHECK(homology_dims(simplicial_torus()) == Dims{1, 2, 1});
  CHECK(homology_dims(cw_surface(3)) == Dims{1, 6, 1});
  CHECK(homology_dims(cw_complex_projective(3)) == Dims{1, 0, 1, 0, 1, 0, 1});
  CHECK(homology_dims(cw_real_projective_plane()) == Dims{1, 0, 0});
  ChainComplex two_points = simplicial_complex("two points", {{0}, {1}});
  CHECK(homology_dims(two_points) == Dims{2});
  ChainComplex wedge = simplicial_complex("two circles", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  CHECK(homology_dims(wedge) == Dims{1, 2});
}

TEST_CASE("property: homology and chains have the same Euler characteristic") {
  std::vector<ChainComplex> cs = {simplicial_torus(), simplex_boundary(3), simplex_boundary(4), cw_surface(2),
                                  cw_real_projective_plane(), simplicial_complex("solid", {{0, 1, 2, 3}})};
  for (const auto& c : cs) CHECK(homology_euler(homology_dims(c)) == chain_euler(c));
}

TEST_CASE("an exact complex has no homology") {
  // 0 ← Q ← Q² ← Q ← 0 with ∂_1 = (1 1), ∂_2 = (1, −1)ᵀ.
  QMat d1(names(1, "c"), names(2, "b"));
  d1(0, 0) = 1;
  d1(0, 1) = 1;
  QMat d2(names(2, "b"), names(1, "a"));
  d2(0, 0) = 1;
  d2(1, 0) = -1;
  CHECK(homology_dims(make_complex("exact", {1, 2, 1}, {d1, d2})) == Dims{0, 0, 0});
}

TEST_CASE("bad complexes are rejected") {
  QMat d1(names(1, "c"), names(1, "b"));
  d1(0, 0) = 1;
  QMat d2(names(1, "b"), names(1, "a"));
  d2(0, 0) = 1;
  CHECK_THROWS_AS(homology_dims(make_complex("not a complex", {1, 1, 1}, {d1, d2})), PreconditionError);
  CHECK_THROWS_AS(make_complex("short", {1, 1, 1}, {d1}), ShapeError);
  CHECK_THROWS_AS(make_complex("mismatch", {2, 1}, {d1}), ShapeError);
}

TEST_CASE("exactness audit") {
  CHECK(exactness_audit({"ok", {1, 2, 1}, {1, 1}}));
  CHECK(exactness_audit({"empty", {}, {}}));
  CHECK(exactness_audit({"iso", {3, 3}, {3}}));
  CHECK_FALSE(exactness_audit({"rank too small", {1, 2, 1}, {1, 0}}));
  CHECK_FALSE(exactness_audit({"end not surjected", {1, 2}, {1}}));
  CHECK_FALSE(exactness_audit({"negative", {1, -1, 0}, {0, 0}}));
  CHECK_FALSE(exactness_audit({"negative rank", {0, 0}, {-1}}));
  CHECK_THROWS_AS(exactness_audit({"sizes", {1, 2, 1}, {1}}), ShapeError);
}

TEST_CASE("exactness audit agrees with the homology of random complexes") {
  // Build exact complexes as cones of identities, then perturb a rank.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(2, 6), dim(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int n = len(rng);
    std::vector<long> r(n + 1, 0);
    for (int i = 1; i < n; ++i) r[i] = dim(rng);
    LesWindow w{"random", {}, {}};
    for (int i = 0; i < n; ++i) w.dims.push_back(r[i] + r[i + 1]);
    for (int i = 0; i + 1 < n; ++i) w.ranks.push_back(r[i + 1]);
    CHECK(exactness_audit(w));
    if (!w.ranks.empty() && w.ranks[0] > 0) {
      --w.ranks[0];
      CHECK_FALSE(exactness_audit(w));
    }
  }
}

TEST_CASE("Euler checks of the constructions") {
  PerversePresentation x1 = nc_union(diagonal_in_p1xp1());
  CHECK(euler_check(x1));
  long chi = 0;
  for (const auto& [j, v] : x1.pieces) chi += v.euler_characteristic();
  CHECK(chi == 6);
  PerversePresentation x2 = nonequidim_x2(3);
  CHECK(euler_check(x2));
  CHECK(x2.piece(3).euler_characteristic() == 0);
  CHECK(x2.piece(4).euler_characteristic() == 2 * homology_euler(homology_dims(cw_complex_projective(4))));
  CHECK(euler_check(equidim_x2(3, 3)));
  CHECK(euler_check(presentation_of_smooth(plane_curve(3))));
}

TEST_CASE("every window and check of the constructions passes the audit") {
  std::vector<PerversePresentation> ps = {nc_union(diagonal_in_p1xp1()), nc_union(conic_in_blowup()),
                                          nonequidim_x2(3), equidim_x2(4, 3), equidim_x2(3, 4)};
  for (const auto& p : ps) {
    auto lines = audit_presentation(p);
    CHECK(lines.size() >= p.windows.size());
    for (const auto& l : lines) {
      INFO(p.name << ": " << l.name);
      CHECK(l.passed);
    }
  }
}

TEST_CASE("audit catches a corrupted window") {
  PerversePresentation p = nc_union(diagonal_in_p1xp1());
  REQUIRE_FALSE(p.windows.empty());
  p.windows[0].ranks[0] += 1;
  bool any_failed = false;
  for (const auto& l : audit_presentation(p)) any_failed |= !l.passed;
  CHECK(any_failed);
}
