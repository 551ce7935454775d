// lyubeznik.hpp
//
// Lyubeznik numbers of the affine cone over X for a chosen ample class:
//
//   λ_{k,j} = dim Coker(ℓ: H^{k−2}_{(j−1)} → H^k_{(j−1)}) + dim Ker(ℓ: H^{k−1}_{(j−1)} → H^{k+1}_{(j−1)})
//
// for k ≥ 2. When X is a ℚ-homology manifold the k = 0 row follows from
// λ_{k,d+1} = λ_{0,d+2−k} + δ_{k,d+1}.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lyu/presentation.hpp"

namespace lyu {

struct Range {
  int lo = 0;
  int hi = -1;
  bool contains(int x) const { return lo <= x && x <= hi; }
};

/// Entry tags.
inline constexpr const char* kFormulaKerCoker = "coker+ker";
inline constexpr const char* kFormulaPurity = "purity";

struct LyubeznikTable {
  std::string object;
  std::string ample;
  int d = 0;
  int klow = 2;
  Range krange, jrange;
  std::map<std::pair<int, int>, long> entries;
  std::map<std::pair<int, int>, std::string> formula;

  /// Entries not computed (k < 2 on a non-pure object) are absent.
  std::optional<long> at(int k, int j) const;
  bool available(int k, int j) const { return entries.count({k, j}) > 0; }
};

/// Throws OutOfRangeError for k < 2.
long lambda_kj(const PerversePresentation& p, const AmpleSelection& ample, int k, int j);
/// Same number via the Gysin split of piece j−1.
long lambda_kj_gysin(const PerversePresentation& p, const AmpleSelection& ample, int k, int j);

/// Defaults: k ∈ [2, 2d+2], j ∈ [1, d+1]. Rows k ∈ {0, 1} are filled only for pure objects.
LyubeznikTable lambda_table(const PerversePresentation& p, const AmpleSelection& ample,
                            std::optional<Range> krange = std::nullopt, std::optional<Range> jrange = std::nullopt);

/// k ∈ [0, 2d+2], j ∈ [1, d+1]. PreconditionError unless p.pure.
LyubeznikTable pure_case_table(const PerversePresentation& p, const AmpleSelection& ample);

struct LambdaDiff {
  int k = 0, j = 0;
  long lambda_a = 0, lambda_b = 0;
};

struct DependenceReport {
  std::string ample_a, ample_b;
  LyubeznikTable table_a, table_b;
  std::vector<LambdaDiff> diff;
  bool verdict = false;
  /// Only for pure objects: the kernel/cokernel sums differ exactly where λ differs.
  std::optional<bool> converse_check;
};

DependenceReport dependence_report(const PerversePresentation& p, const AmpleSelection& a, const AmpleSelection& b,
                                   std::optional<Range> krange = std::nullopt,
                                   std::optional<Range> jrange = std::nullopt);

struct ParityMu {
  std::string ample;
  long mu_odd = 0, mu_even = 0;
};

struct ParityReport {
  int k0 = 0, j0 = 0;
  ParityMu a, b;
  long delta_odd = 0, delta_even = 0;
  long g_E = 0, d_E = 0, delta2 = 0;
};

/// μ^k = Σ_w dim Gr^W_w Coker(ℓ at k) + dim Gr^W_w Ker(ℓ at k−1) on piece j0−1, split by the parity of w.
ParityMu parity_mu(const PerversePresentation& p, const AmpleSelection& ample, int k0, int j0);
ParityReport parity_report(const PerversePresentation& p, const AmpleSelection& a, const AmpleSelection& b, int k0,
                           int j0);

}  // namespace lyu
