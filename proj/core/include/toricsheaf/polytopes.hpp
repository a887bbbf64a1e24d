#pragma once

#include "toricsheaf/filtration.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace toricsheaf {

// lower_k <= <row_k, m> <= upper_inclusive_k for every row k; nullopt means
// the bound is absent (-inf or +inf).
struct IntervalConstraintSystem {
  std::vector<IntVector> matrix;
  std::vector<std::optional<std::int64_t>> lower;
  std::vector<std::optional<std::int64_t>> upper_inclusive;

  std::size_t variables() const { return matrix.empty() ? 0 : matrix.front().size(); }
  // Some row has lower > upper_inclusive, so there are no solutions at all.
  bool has_empty_row() const;
  bool satisfied_by(const Character& m) const;
};

// One 1-based filtration index per ray.
using MultiIndex = std::vector<std::size_t>;

// Throws InputError unless idx has one entry in 1..rank per ray.
void check_multi_index(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx);

// Characters m of twist(sheaf, c) with <m, rho_k> in [i^k_{idx_k}, i^k_{idx_k + 1}).
IntervalConstraintSystem omega_system(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx,
                                      const ClassElement& c);

// Integer solutions in lexicographic order. Requires every lower bound to be
// finite and the rows to positively span (as the rays of a complete fan do);
// throws UnboundedSystemError on a missing lower bound.
std::vector<Character> psi_points(const IntervalConstraintSystem& sys);
// Same as psi_points(sys).size() without materializing the list.
std::uint64_t psi_count(const IntervalConstraintSystem& sys);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<IntVector> witness;
};

// Nonnegative integer x with a.x >= A and sum(x) <= B. Requires a sorted and
// nonnegative and B >= 0, else InputError.
FeasibilityResult feasible_system1(const std::vector<int>& a, std::int64_t A, std::int64_t B);

// Whether m in Z^{s+r} exists with <m, rho_t> >= lambda_t and <m, eta_u> >= mu_u
// on the fan of SplitBundle(s, a), with s = lambda.size() - 1.
bool feasible_metasystem(const std::vector<int>& a, const IntVector& lambda, const IntVector& mu);

// Split bundles only. psi_n: c in Z^r for the eta-indices n (length r + 1)
// at twist q. psi_m_sliced: d in Z^s for the rho-indices m (length s + 1) at
// twist p, given c.
std::vector<IntVector> psi_n(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& n,
                             std::int64_t q);
std::vector<IntVector> psi_m_sliced(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& m,
                                    std::int64_t p, const IntVector& c);

// Sum over c in psi_n of |psi_m_sliced(c)|, with idx = (m, n) in ray order.
std::uint64_t assemble_slices(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx,
                              std::int64_t p, std::int64_t q);

}  // namespace toricsheaf
