#include <doctest.h>

#include "lyu/constructions.hpp"
#include "lyu/error.hpp"
#include "lyu/lyubeznik.hpp"
#include "lyu/oracle.hpp"

using namespace lyu;

namespace {

AmpleSelection lin(std::vector<std::pair<std::string, long>> t) { return AmpleSelection::of(std::move(t)); }

const AmpleSelection kD = lin({{"e1", 1}, {"e2", 1}});
const AmpleSelection kD2 = lin({{"e1", 2}, {"e2", 1}});
const AmpleSelection kH = lin({{"h", 1}});

UnionInput x1_input(bool flip = false) {
  SubvarietyData sd = diagonal_in_p1xp1();
  UnionInput u;
  u.name = "X1";
  u.ambient = sd.ambient;
  u.piece_a = u.piece_b = sd.ambient.ring();
  u.intersection = sd.sub.ring();
  u.restrict_a = u.restrict_b = QMat::identity(sd.ambient.ring().labels());
  u.restrict_ai = sd.restrict;
  u.push_a = u.push_b = gysin_adjoint(sd.ambient.ring(), sd.sub.ring(), sd.restrict);
  if (flip) u.push_b = u.push_b.scaled(-1);
  return u;
}

std::size_t odd_dim(const WGVS& v, int k) {
  std::size_t n = 0;
  for (int w : v.weights_in(k))
    if (w % 2 != 0) n += v.dim({k, w});
  return n;
}

}  // namespace

TEST_CASE("normal-crossing union of two P1xP1 along the diagonal") {
  PerversePresentation x1 = nc_union(diagonal_in_p1xp1());
  CHECK(x1.dim == 2);
  CHECK(x1.pure);
  const WGVS& v = x1.piece(2);
  CHECK(v.dim(-2) == 2);
  CHECK(v.dim(0) == 3);
  CHECK(v.dim(2) == 1);
  CHECK(v.euler_characteristic() == 6);
  CHECK(op_cokernel_dim_at(x1.ops(kD).at(2), 0) == 2);
  CHECK(op_cokernel_dim_at(x1.ops(kD2).at(2), 0) == 1);
  CHECK(euler_check(x1));
  CHECK(exactness_audit(x1.windows.at(0)));
  CHECK(x1.metadata.count("sign_convention") == 1);
}

TEST_CASE("normal-crossing union along a plane cubic keeps H1 of the curve") {
  PerversePresentation x = nc_union(plane_curve_in_p2(3));
  CHECK(x.piece(2).dim({0, -1}) == 2);
  for (const auto& w : x.windows) CHECK(exactness_audit(w));
  CHECK(euler_check(x));
}

TEST_CASE("normal-crossing unions need a divisor") {
  SubvarietyData sd = hyperplane_in(3);
  sd.codim = 2;
  CHECK_THROWS_AS(nc_union(sd), UnsupportedError);
  PerversePresentation x1 = nc_union(diagonal_in_p1xp1());
  CHECK_THROWS_AS(x1.ops(lin({{"e1", 1}, {"e2", -1}})), InvalidClassError);
}

TEST_CASE("non-equidimensional example") {
  for (int d2 = 2; d2 <= 4; ++d2) {
    PerversePresentation x = nonequidim_x2(d2);
    CHECK(x.dim == d2 + 1);
    CHECK_FALSE(x.pure);
    CHECK(x.pieces.size() == 2);
    CHECK(x.piece(d2).total_dim() == 2);
    CHECK(x.piece(d2).dim({-d2, -2 * d2}) == 1);
    CHECK(x.piece(d2).dim({d2 - 1, 0}) == 1);
    for (int k = -d2 - 1; k <= d2 + 1; k += 2) CHECK(x.piece(d2 + 1).dim(k) == 2);
    CHECK(x.piece(d2 + 1).total_dim() == static_cast<std::size_t>(2 * (d2 + 2)));
    GradedOp z = x.ops(kH).at(d2);
    for (int k : x.piece(d2).degrees()) CHECK(op_kernel_dim_at(z, k) == x.piece(d2).dim(k));
    CHECK(euler_check(x));
    CHECK(x.parameters.at("d2") == d2);
    CHECK(x.metadata.count("weight_normalization") == 1);
  }
  CHECK_THROWS_AS(nonequidim_x2(1), PreconditionError);
}

TEST_CASE("restriction degrees rescale the action on the two projective spaces") {
  PerversePresentation a = nonequidim_x2(3), b = nonequidim_x2(3, {2, 3});
  CHECK(b.metadata.at("restriction_degrees") == "2,3");
  for (int k = -4; k <= 4; ++k)
    CHECK(op_kernel_dim_at(a.ops(kH).at(4), k) == op_kernel_dim_at(b.ops(kH).at(4), k));
}

TEST_CASE("Mayer-Vietoris: two lines meeting in a point") {
  SmoothAtom p1 = projective_space(1);
  CohomologyRing pt = ring_projective(0);
  QMat r(pt.labels(), p1.ring().labels());
  r(0, 0) = 1;
  UnionInput u;
  u.name = "P1 ∨ P1";
  u.ambient = p1;
  u.piece_a = u.piece_b = p1.ring();
  u.intersection = pt;
  u.restrict_a = u.restrict_b = QMat::identity(p1.ring().labels());
  u.restrict_ai = r;
  u.push_a = u.push_b = gysin_adjoint(p1.ring(), pt, r);
  PerversePresentation x = union_two_smooth(u);
  // k = 1 − m for homological degree m.
  CHECK(x.piece(1).dim(1) == 1);
  CHECK(x.piece(1).dim(0) == 0);
  CHECK(x.piece(1).dim(-1) == 2);
  for (const auto& w : x.windows) CHECK(exactness_audit(w));
  CHECK(euler_check(x));
}

TEST_CASE("both union engines agree, whatever the sign") {
  PerversePresentation nc = nc_union(diagonal_in_p1xp1());
  for (bool flip : {false, true}) {
    PerversePresentation mv = union_two_smooth(x1_input(flip));
    CHECK(dims_string(mv.piece(2)) == dims_string(nc.piece(2)));
    for (const auto& s : {kD, kD2}) {
      CHECK(op_cokernel_dim_at(mv.ops(s).at(2), 0) == op_cokernel_dim_at(nc.ops(s).at(2), 0));
      CHECK(lambda_table(mv, s).entries == lambda_table(nc, s).entries);
    }
  }
}

TEST_CASE("union input validation") {
  UnionInput u = x1_input();
  u.piece_b = ring_projective(3);
  CHECK_THROWS_WITH_AS(union_two_smooth(u), doctest::Contains("NonEquidimX2"), PreconditionError);
  u = x1_input();
  u.push_a = QMat();
  CHECK_THROWS_AS(union_two_smooth(u), PreconditionError);
  u = x1_input();
  u.intersection = ring_projective(0);
  CHECK_THROWS_AS(union_two_smooth(u), PreconditionError);
}

TEST_CASE("equidimensional example: odd weights sit where H1 of the curve goes") {
  for (int d2 = 3; d2 <= 5; ++d2)
    for (int de : {3, 4}) {
      const std::size_t g = static_cast<std::size_t>(plane_curve_genus(de));
      PerversePresentation x = equidim_x2(d2, de);
      const WGVS& v = x.piece(d2);
      // Homological degree m sits at k = d2 − m.
      for (int k = -d2; k <= d2; ++k) {
        bool hit = k == d2 - (2 * d2 - 1) || k == d2 - 2;
        CHECK(odd_dim(v, k) == (hit ? 2 * g : 0));
      }
      for (const auto& w : x.windows) CHECK_MESSAGE(exactness_audit(w), w.name);
      for (const auto& c : x.checks) CHECK_MESSAGE(c.passed, c.name);
      CHECK(euler_check(x));
      CHECK(x.parameters.at("delta2") == d2 - 4);
    }
  CHECK_THROWS_AS(equidim_x2(2, 3), PreconditionError);
  CHECK_THROWS_AS(equidim_x2(4, 2), PreconditionError);
}

TEST_CASE("equidimensional example: the two sides for d2 = 4") {
  EquidimX2Parts p = equidim_x2_parts(4, 4);
  const int delta2 = 0;
  for (int k = -4; k <= 4; k += 2) {
    const int a = std::abs(k) - delta2;
    std::size_t want = a == 2 || a == 4 ? 6 - std::abs(k) + delta2 : 6;
    CHECK(p.z2.dim(k) == want);
  }
  const WGVS& zp = p.z1_prime.assembled;
  CHECK(zp.dim(-3) == 6);
  CHECK(zp.dim(2) == 6);
  for (int k : {-4, -2, 1, 3}) CHECK(zp.dim(k) == 1);
  CHECK(p.x2.piece(4).dim(3) == 0);
  CHECK_FALSE(p.weight_windows.empty());
  for (const auto& w : p.weight_windows) CHECK(exactness_audit(w));
}

TEST_CASE("perverse products") {
  PerversePresentation x1 = nc_union(diagonal_in_p1xp1()), x2 = nonequidim_x2(3);
  PerversePresentation x = perverse_product(x1, x2);
  CHECK(x.dim == 6);
  CHECK(x.pieces.size() == 2);
  CHECK(x.has_piece(5));
  CHECK(x.has_piece(6));
  CHECK(x.piece(5).dim(2) == 3);
  CHECK(x.parameters.at("d2") == 3);
  CHECK(euler_check(x));

  PerversePresentation pt = presentation_of_smooth(projective_space(0));
  PerversePresentation same = perverse_product(x1, pt);
  CHECK(dims_string(same.piece(2)) == dims_string(x1.piece(2)));

  CHECK_THROWS_AS(perverse_product(x2, x2), UnsupportedError);
  CHECK_THROWS_AS(x.ops(kD), InvalidClassError);
  CHECK_NOTHROW(x.ops(AmpleSelection::segre(kD, kH)));
}

TEST_CASE("Gysin split") {
  PerversePresentation p1 = presentation_of_smooth(projective_space(1));
  GradedOp l = p1.ops(kH).at(1);
  GysinSplitPieces s = gysin_split(l.source(), l);
  CHECK(s.assembled.total_dim() == 2);
  std::vector<int> degs = s.assembled.degrees();
  CHECK(degs == std::vector<int>{-2, 1});

  PerversePresentation e = presentation_of_smooth(plane_curve(4));
  GradedOp le = e.ops(kH).at(1);
  GysinSplitPieces se = gysin_split(le.source(), le);
  CHECK(se.ker_part.dim(0) == 6);

  PerversePresentation x = perverse_product(nc_union(diagonal_in_p1xp1()), nonequidim_x2(3));
  GradedOp op = x.ops(AmpleSelection::segre(kD, kH)).at(5);
  GysinSplitPieces sx = gysin_split(op.source(), op);
  CHECK(sx.assembled.dim(1) == 2);
  CHECK(exactness_audit(gysin_window("split", op.source(), op, sx)));

  for (const auto* sp : {&s, &se, &sx})
    for (int k : sp->assembled.degrees()) CHECK(sp->assembled.dim(k) == sp->coker_part.dim(k) + sp->ker_part.dim(k));
  // With one weight per degree the two parts never share a weight.
  for (const auto* sp : {&s, &se})
    for (int k : sp->assembled.degrees())
      for (int w : sp->coker_part.weights_in(k)) CHECK(sp->ker_part.dim({k, w}) == 0);
}
