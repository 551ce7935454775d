#include <doctest.h>

#include "lyu/constructions.hpp"
#include "lyu/error.hpp"
#include "lyu/lyubeznik.hpp"

using namespace lyu;

namespace {

AmpleSelection lin(std::vector<std::pair<std::string, long>> t) { return AmpleSelection::of(std::move(t)); }

const AmpleSelection kD = lin({{"e1", 1}, {"e2", 1}});
const AmpleSelection kD2 = lin({{"e1", 2}, {"e2", 1}});
const AmpleSelection kH = lin({{"h", 1}});
const AmpleSelection kHZ = lin({{"h1", 1}, {"h2", 1}, {"xi", 1}});

PerversePresentation nonequidim_product() {
  return perverse_product(nc_union(diagonal_in_p1xp1()), nonequidim_x2(3));
}

}  // namespace

TEST_CASE("projective spaces have the trivial table") {
  for (int d = 1; d <= 4; ++d) {
    PerversePresentation p = presentation_of_smooth(projective_space(d));
    CHECK(lambda_kj(p, kH, d + 1, d + 1) == 1);
    for (int k = 2; k <= d; ++k) CHECK(lambda_kj(p, kH, k, d + 1) == 0);
    LyubeznikTable t = pure_case_table(p, kH);
    for (int j = 1; j <= d; ++j) CHECK(*t.at(0, j) == 0);
    CHECK(t.formula.at({0, 1}) == kFormulaPurity);
    CHECK(t.formula.at({2, 1}) == kFormulaKerCoker);
  }
  PerversePresentation p2 = presentation_of_smooth(projective_space(2));
  LyubeznikTable t = lambda_table(p2, kH);
  long total = 0;
  for (const auto& [kj, v] : t.entries) total += v;
  CHECK(total == 1);
  CHECK(*t.at(3, 3) == 1);
}

TEST_CASE("only k >= 2 is computed directly") {
  PerversePresentation p = presentation_of_smooth(projective_space(2));
  CHECK_THROWS_AS(lambda_kj(p, kH, 1, 3), OutOfRangeError);
  CHECK_THROWS_AS(lambda_kj(p, kH, 0, 1), OutOfRangeError);
  CHECK_THROWS_AS(lambda_table(p, kH, Range{2, 9}), OutOfRangeError);
  PerversePresentation x = nonequidim_product();
  LyubeznikTable t = lambda_table(x, AmpleSelection::segre(kD, kH), Range{0, 3});
  CHECK_FALSE(t.available(0, 1));
  CHECK_FALSE(t.available(1, 6));
  CHECK(t.available(2, 6));
  LyubeznikTable low = lambda_table(x, AmpleSelection::segre(kD, kH), Range{0, 1});
  CHECK(low.entries.empty());
}

TEST_CASE("pure case: P1xP1 and curves") {
  PerversePresentation y = presentation_of_smooth(p1xp1());
  LyubeznikTable t = pure_case_table(y, kD);
  CHECK(*t.at(3, 3) == 1);
  CHECK(*t.at(2, 3) == 0);
  CHECK(*t.at(0, 2) == 0);
  CHECK(*t.at(0, 1) == 0);
  // λ_{2,2} = dim Coker(H^{-2} → H^0) + dim Ker(H^{-1} → H^1) on a curve: 0 + 1.
  for (int de : {3, 4}) {
    PerversePresentation e = presentation_of_smooth(plane_curve(de));
    LyubeznikTable te = pure_case_table(e, kH);
    CHECK(*te.at(2, 2) == 1);
    CHECK(*te.at(0, 1) == 0);
  }
  CHECK_THROWS_AS(pure_case_table(nonequidim_product(), AmpleSelection::segre(kD, kH)), PreconditionError);
}

TEST_CASE("property: pieces above the dimension contribute nothing") {
  std::vector<std::pair<PerversePresentation, AmpleSelection>> cases = {
      {presentation_of_smooth(blowup_p2()), lin({{"h", 2}, {"e", -1}})},
      {nonequidim_product(), AmpleSelection::segre(kD, kH)},
      {equidim_x2(3, 3), kHZ}};
  for (const auto& [p, s] : cases)
    for (int j = p.dim + 2; j <= p.dim + 4; ++j)
      for (int k = 2; k <= 2 * p.dim + 2; ++k) CHECK(lambda_kj(p, s, k, j) == 0);
}

TEST_CASE("property: smooth atoms give the same table for every class") {
  std::vector<std::pair<SmoothAtom, std::vector<AmpleSelection>>> cases = {
      {projective_space(3), {kH, lin({{"h", 2}}), lin({{"h", 5}})}},
      {p1xp1(), {kD, kD2, lin({{"e1", 3}, {"e2", 7}})}},
      {blowup_p2(), {lin({{"h", 2}, {"e", -1}}), lin({{"h", 3}, {"e", -2}})}},
      {plane_curve(4), {kH, lin({{"h", 3}})}},
      {atom_product(p1xp1(), projective_space(1)),
       {lin({{"e1", 1}, {"e2", 1}, {"h", 1}}), lin({{"e1", 4}, {"e2", 1}, {"h", 2}})}}};
  for (const auto& [a, sels] : cases) {
    PerversePresentation p = presentation_of_smooth(a);
    LyubeznikTable first = pure_case_table(p, sels[0]);
    for (const auto& s : sels) {
      LyubeznikTable t = pure_case_table(p, s);
      CHECK(t.entries == first.entries);
      DependenceReport r = dependence_report(p, sels[0], s);
      CHECK_FALSE(r.verdict);
      CHECK(r.converse_check.value());
    }
  }
}

TEST_CASE("the non-equidimensional product depends on the class") {
  PerversePresentation x = nonequidim_product();
  AmpleSelection la = AmpleSelection::segre(kD, kH), lb = AmpleSelection::segre(kD2, kH);
  CHECK(lambda_kj(x, la, 2, 6) == 2);
  CHECK(lambda_kj(x, lb, 2, 6) == 1);
  CHECK(lambda_kj_gysin(x, la, 2, 6) == 2);
  DependenceReport r = dependence_report(x, la, lb);
  CHECK(r.verdict);
  REQUIRE(r.diff.size() == 1);
  CHECK(r.diff[0].k == 2);
  CHECK(r.diff[0].j == 6);
  CHECK(r.diff[0].lambda_a == 2);
  CHECK(r.diff[0].lambda_b == 1);
  CHECK_FALSE(r.converse_check.has_value());
  DependenceReport same = dependence_report(x, la, la);
  CHECK_FALSE(same.verdict);
  CHECK(same.diff.empty());
}

TEST_CASE("restriction degrees on the blow-up side do not move the (2,6) entry") {
  PerversePresentation x1 = nc_union(diagonal_in_p1xp1());
  for (auto deg : {std::pair<long, long>{1, 1}, {2, 1}, {3, 5}}) {
    PerversePresentation x = perverse_product(x1, nonequidim_x2(3, deg));
    CHECK(lambda_kj(x, AmpleSelection::segre(kD, kH), 2, 6) == 2);
    CHECK(lambda_kj(x, AmpleSelection::segre(kD2, kH), 2, 6) == 1);
  }
}

TEST_CASE("equidimensional product: parity bookkeeping") {
  PerversePresentation x1 = nc_union(diagonal_in_p1xp1());
  AmpleSelection la = AmpleSelection::segre(kD, kHZ), lb = AmpleSelection::segre(kD2, kHZ);
  PerversePresentation x = perverse_product(x1, equidim_x2(4, 3));
  ParityReport r = parity_report(x, la, lb, 2, 7);
  CHECK(r.delta_odd > r.delta_even);
  CHECK(r.g_E == 1);
  CHECK(r.d_E == 3);
  CHECK(r.delta2 == 0);
  ParityReport same = parity_report(x, la, la, 2, 7);
  CHECK(same.delta_odd == 0);
  CHECK(same.delta_even == 0);
  CHECK(lambda_kj(x, la, 2, 7) != lambda_kj(x, lb, 2, 7));
  CHECK_THROWS_AS(parity_report(x, la, lb, 2, 3), PreconditionError);

  // λ splits into its odd and even parts wherever both are defined.
  for (const auto& [j1, v] : x.pieces)
    for (int k = 2; k <= 2 * x.dim + 2; ++k) {
      ParityMu mu = parity_mu(x, la, k, j1 + 1);
      CHECK(lambda_kj(x, la, k, j1 + 1) == mu.mu_odd + mu.mu_even);
    }
}

TEST_CASE("property: the Gysin split reproduces every table entry") {
  std::vector<std::pair<PerversePresentation, AmpleSelection>> cases = {
      {nonequidim_product(), AmpleSelection::segre(kD2, kH)},
      {equidim_x2(3, 4), lin({{"h1", 2}, {"h2", 1}, {"xi", 1}})},
      {nc_union(conic_in_blowup()), lin({{"h", 3}, {"e", -1}})},
      {presentation_of_smooth(blowup_p2()), lin({{"h", 2}, {"e", -1}})}};
  for (const auto& [p, s] : cases) {
    LyubeznikTable t = lambda_table(p, s);
    for (const auto& [kj, v] : t.entries) CHECK(lambda_kj_gysin(p, s, kj.first, kj.second) == v);
  }
}
