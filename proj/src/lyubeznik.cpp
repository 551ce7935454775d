#include "lyu/lyubeznik.hpp"

#include <cstdlib>
#include <set>

#include "lyu/constructions.hpp"
#include "lyu/error.hpp"

namespace lyu {

namespace {

using OpMap = std::map<int, GradedOp>;

long from_ops(const OpMap& ops, int k, int j) {
  if (k < 2) throw OutOfRangeError("λ_{" + std::to_string(k) + "," + std::to_string(j) + "}: only k >= 2 is computed");
  auto it = ops.find(j - 1);
  if (it == ops.end()) return 0;
  return static_cast<long>(op_cokernel_dim_at(it->second, k) + op_kernel_dim_at(it->second, k - 1));
}

long gysin_from_ops(const OpMap& ops, int k, int j) {
  if (k < 2) throw OutOfRangeError("λ_{" + std::to_string(k) + "," + std::to_string(j) + "}: only k >= 2 is computed");
  auto it = ops.find(j - 1);
  if (it == ops.end()) return 0;
  return static_cast<long>(gysin_split(it->second.source(), it->second).assembled.dim(k - 1));
}

Range default_k(const PerversePresentation& p) { return {2, 2 * p.dim + 2}; }
Range default_j(const PerversePresentation& p) { return {1, p.dim + 1}; }

void check_krange(const PerversePresentation& p, const Range& r) {
  if (r.lo < 0 || r.hi > 2 * p.dim + 2 || r.lo > r.hi)
    throw OutOfRangeError("k-range " + std::to_string(r.lo) + ".." + std::to_string(r.hi) + " is outside [0, " +
                          std::to_string(2 * p.dim + 2) + "]");
}

void check_jrange(const Range& r) {
  if (r.lo < 0 || r.lo > r.hi)
    throw OutOfRangeError("j-range " + std::to_string(r.lo) + ".." + std::to_string(r.hi) + " is not a valid range");
}

LyubeznikTable pure_from_ops(const PerversePresentation& p, const AmpleSelection& ample, const OpMap& ops) {
  if (!p.pure) throw PreconditionError(p.name + " is not pure; the k = 0 row is not determined");
  const int d = p.dim;
  LyubeznikTable t;
  t.object = p.name;
  t.ample = ample.to_string();
  t.d = d;
  t.krange = {0, 2 * d + 2};
  t.jrange = default_j(p);
  for (int j = 1; j <= d + 1; ++j) {
    for (int k = 2; k <= 2 * d + 2; ++k) {
      long v = from_ops(ops, k, j);
      bool in_support = j == d + 1 && k <= d + 1;
      if (!in_support && v != 0)
        throw InternalInconsistency(p.name + ": λ_{" + std::to_string(k) + "," + std::to_string(j) +
                                    "} = " + std::to_string(v) + " outside the pure support");
      t.entries[{k, j}] = v;
      t.formula[{k, j}] = kFormulaKerCoker;
    }
    t.entries[{0, j}] = 0;
    t.entries[{1, j}] = 0;
    t.formula[{0, j}] = kFormulaPurity;
    t.formula[{1, j}] = kFormulaPurity;
  }
  for (int k = 2; k <= d + 1; ++k) {
    long l0 = t.entries[{k, d + 1}] - (k == d + 1 ? 1 : 0);
    if (l0 < 0)
      throw InternalInconsistency(p.name + ": λ_{0," + std::to_string(d + 2 - k) + "} would be negative");
    if (d + 2 - k >= 1) t.entries[{0, d + 2 - k}] = l0;
  }
  return t;
}

LyubeznikTable table_from_ops(const PerversePresentation& p, const AmpleSelection& ample, const OpMap& ops,
                              const Range& kr, const Range& jr) {
  LyubeznikTable t;
  t.object = p.name;
  t.ample = ample.to_string();
  t.d = p.dim;
  t.krange = kr;
  t.jrange = jr;
  std::optional<LyubeznikTable> pure;
  if (kr.lo < 2 && p.pure) pure = pure_from_ops(p, ample, ops);
  for (int k = kr.lo; k <= kr.hi; ++k)
    for (int j = jr.lo; j <= jr.hi; ++j) {
      if (k >= 2) {
        t.entries[{k, j}] = from_ops(ops, k, j);
        t.formula[{k, j}] = kFormulaKerCoker;
      } else if (pure) {
        auto v = pure->at(k, j);
        t.entries[{k, j}] = v.value_or(0);
        t.formula[{k, j}] = kFormulaPurity;
      }
    }
  return t;
}

}  // namespace

std::optional<long> LyubeznikTable::at(int k, int j) const {
  auto it = entries.find({k, j});
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

long lambda_kj(const PerversePresentation& p, const AmpleSelection& ample, int k, int j) {
  if (k < 2) throw OutOfRangeError("λ_{" + std::to_string(k) + "," + std::to_string(j) + "}: only k >= 2 is computed");
  return from_ops(p.ops(ample), k, j);
}

long lambda_kj_gysin(const PerversePresentation& p, const AmpleSelection& ample, int k, int j) {
  if (k < 2) throw OutOfRangeError("λ_{" + std::to_string(k) + "," + std::to_string(j) + "}: only k >= 2 is computed");
  return gysin_from_ops(p.ops(ample), k, j);
}

LyubeznikTable lambda_table(const PerversePresentation& p, const AmpleSelection& ample, std::optional<Range> krange,
                            std::optional<Range> jrange) {
  Range kr = krange.value_or(default_k(p)), jr = jrange.value_or(default_j(p));
  check_krange(p, kr);
  check_jrange(jr);
  return table_from_ops(p, ample, p.ops(ample), kr, jr);
}

LyubeznikTable pure_case_table(const PerversePresentation& p, const AmpleSelection& ample) {
  if (!p.pure) throw PreconditionError(p.name + " is not pure; the k = 0 row is not determined");
  return pure_from_ops(p, ample, p.ops(ample));
}

DependenceReport dependence_report(const PerversePresentation& p, const AmpleSelection& a, const AmpleSelection& b,
                                   std::optional<Range> krange, std::optional<Range> jrange) {
  Range kr = krange.value_or(default_k(p)), jr = jrange.value_or(default_j(p));
  check_krange(p, kr);
  check_jrange(jr);
  OpMap oa = p.ops(a), ob = p.ops(b);
  DependenceReport r;
  r.ample_a = a.to_string();
  r.ample_b = b.to_string();
  r.table_a = table_from_ops(p, a, oa, kr, jr);
  r.table_b = table_from_ops(p, b, ob, kr, jr);
  for (const auto& [kj, va] : r.table_a.entries) {
    auto vb = r.table_b.at(kj.first, kj.second);
    if (vb && *vb != va) r.diff.push_back({kj.first, kj.second, va, *vb});
  }
  for (const auto& df : r.diff)
    if (df.k >= 2) r.verdict = true;

  if (p.pure) {
    std::set<std::pair<int, int>> lam, sums;
    bool any_lambda = false;
    for (const auto& df : r.diff) {
      any_lambda = true;
      if (df.k >= 2) lam.insert({df.k, df.j});
    }
    for (int k = std::max(2, kr.lo); k <= kr.hi; ++k)
      for (int j = jr.lo; j <= jr.hi; ++j)
        if (gysin_from_ops(oa, k, j) != gysin_from_ops(ob, k, j)) sums.insert({k, j});
    r.converse_check = lam == sums && any_lambda == !sums.empty();
    if (!*r.converse_check)
      throw InternalInconsistency(p.name + ": λ differences do not match the kernel/cokernel differences");
  }
  return r;
}

ParityMu parity_mu(const PerversePresentation& p, const AmpleSelection& ample, int k0, int j0) {
  if (!p.has_piece(j0 - 1))
    throw PreconditionError(p.name + " has no perverse piece j=" + std::to_string(j0 - 1));
  OpMap ops = p.ops(ample);
  const GradedOp& op = ops.at(j0 - 1);
  const WGVS& v = op.source();
  ParityMu mu;
  mu.ample = ample.to_string();
  auto add = [&mu](int w, std::size_t n) { (std::abs(w) % 2 == 1 ? mu.mu_odd : mu.mu_even) += static_cast<long>(n); };
  for (int w : v.weights_in(k0)) add(w, op_cokernel_dim_at(op, Grade{k0, w}));
  for (int w : v.weights_in(k0 - 1)) add(w, op_kernel_dim_at(op, Grade{k0 - 1, w}));
  return mu;
}

ParityReport parity_report(const PerversePresentation& p, const AmpleSelection& a, const AmpleSelection& b, int k0,
                           int j0) {
  ParityReport r;
  r.k0 = k0;
  r.j0 = j0;
  r.a = parity_mu(p, a, k0, j0);
  r.b = parity_mu(p, b, k0, j0);
  r.delta_odd = std::abs(r.a.mu_odd - r.b.mu_odd);
  r.delta_even = std::abs(r.a.mu_even - r.b.mu_even);
  auto param = [&p](const char* key) {
    auto it = p.parameters.find(key);
    return it == p.parameters.end() ? 0L : it->second;
  };
  r.g_E = param("g_E");
  r.d_E = param("d_E");
  r.delta2 = param("delta2");
  return r;
}

}  // namespace lyu
