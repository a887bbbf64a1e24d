#pragma once

#include "toricsheaf/polynomial.hpp"
#include "toricsheaf/polytopes.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toricsheaf {

// dim of the intersection over rays k of spaces[idx_k - 1].
std::size_t intersection_dim(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx);

// h(c) = sum over multi-indices of |Psi_idx(c)| * D(idx).
std::int64_t hilbert_function(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c);

// Keeps the multi-indices with D(idx) > 0 and nonempty intervals, so repeated
// evaluation of one sheaf skips the pruning step.
class HilbertEvaluator {
 public:
  explicit HilbertEvaluator(const EquivariantReflexiveSheaf& sheaf);

  std::int64_t operator()(const ClassElement& c) const;
  std::int64_t operator()(std::int64_t p, std::int64_t q) const;
  std::size_t live_indices() const { return terms_.size(); }

 private:
  struct Term {
    IntervalConstraintSystem base;  // untwisted omega system
    std::size_t weight;
  };
  ToricVariety variety_;
  std::vector<Term> terms_;
};

// cp * p + cq * q >= bound.
struct HalfPlane {
  std::int64_t cp = 0, cq = 0, bound = 0;
  bool contains(std::int64_t p, std::int64_t q) const { return cp * p + cq * q >= bound; }
  std::string to_string() const;
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

enum class RegionKind { LowerBound, I, J, Omega };

struct SupportRegion {
  RegionKind kind = RegionKind::LowerBound;
  int index = 0;  // k for I(k) and J(k)
  std::array<HalfPlane, 2> halves;

  bool contains(std::int64_t p, std::int64_t q) const {
    return halves[0].contains(p, q) && halves[1].contains(p, q);
  }
  std::string name() const;  // "L_E", "I(0)", "J(1)", "omega"
  std::string to_string() const;
  friend bool operator==(const SupportRegion&, const SupportRegion&) = default;
};

// Split bundles only; UnsupportedError otherwise.
SupportRegion lower_bound_region(const EquivariantReflexiveSheaf& sheaf);
// I(0..s) followed by J(0..r).
std::vector<SupportRegion> upper_bound_regions(const EquivariantReflexiveSheaf& sheaf);
bool in_support_lower_bound(const EquivariantReflexiveSheaf& sheaf, std::int64_t p, std::int64_t q);
bool in_support_upper_bound(const EquivariantReflexiveSheaf& sheaf, std::int64_t p, std::int64_t q);
// Region where the Hilbert function is polynomial.
SupportRegion regularity_region(const EquivariantReflexiveSheaf& sheaf);

// B_n with B_1 = -1/2.
Rational bernoulli_number(unsigned n);
// B_n(x) = sum_k C(n, k) B_{n-k} x^k, one variable.
RationalPolynomial bernoulli_polynomial(unsigned n);
// F_t(q) with F_t(q) = sum_{k=0}^{q} k^t for q >= 0, one variable.
RationalPolynomial faulhaber_sum(unsigned t);
// P in variables (q, e_1, ..., e_k); returns the one-variable polynomial
// S(q) = sum of P over e_i >= 0 with e_1 + ... + e_k <= q.
RationalPolynomial simplex_sum(const RationalPolynomial& poly, std::size_t k);

// Bivariate Hilbert polynomial in (p, q) of total degree <= dim X, fitted on
// the corner of the regularity region and cross-checked on further points.
// Throws ConsistencyError if the fit fails the check.
RationalPolynomial hilbert_polynomial(const EquivariantReflexiveSheaf& sheaf);

}  // namespace toricsheaf
