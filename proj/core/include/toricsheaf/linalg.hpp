#pragma once

#include "toricsheaf/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace toricsheaf {

// Row-major dense matrix of exact rationals.
using RationalMatrix = std::vector<RationalVector>;

// Reduced row-echelon form of `rows` (every row of length `cols`); zero rows
// are dropped, so the result has exactly rank-many rows.
RationalMatrix reduced_row_echelon(RationalMatrix rows, std::size_t cols);

std::size_t rank(RationalMatrix rows, std::size_t cols);

// Basis of { x : rows * x = 0 }, one vector per free column.
RationalMatrix nullspace(const RationalMatrix& rows, std::size_t cols);

// Unique solution of a square system, or nullopt when singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

// A linear subspace of Q^ell stored by its canonical basis: reduced row-echelon
// rows, so equal subspaces compare equal structurally.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const RationalMatrix& basis() const { return basis_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;

  // Basis of the annihilator { w : <b, w> = 0 for every basis row b }.
  RationalMatrix annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient, RationalMatrix rref)
      : ambient_(ambient), basis_(std::move(rref)) {}

  friend Subspace span(std::span<const RationalVector>, std::size_t);

  std::size_t ambient_ = 0;
  RationalMatrix basis_;
};

// Canonical subspace spanned by `vectors`; throws InputError on a length mismatch.
Subspace span(std::span<const RationalVector> vectors, std::size_t ambient_dim);

// Set intersection of all inputs (nonempty, equal ambients).
Subspace intersect(std::span<const Subspace> subspaces);
Subspace intersect(const Subspace& a, const Subspace& b);

// Span of the union of all inputs (nonempty, equal ambients).
Subspace sum(std::span<const Subspace> subspaces);
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace toricsheaf
