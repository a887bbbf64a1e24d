#pragma once

// Integer Cramer-rule machinery shared by the polytope enumerator and the
// cohomology enumeration box. Internal to the core library.

#include "toricsheaf/toric.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace toricsheaf::detail {

__extension__ typedef __int128 Wide;

// A dim-subset of constraint rows with an invertible matrix A, stored as an
// integer adjugate with det > 0, so A^{-1} v = adj * v / det exactly.
struct SquareSubsystem {
  std::vector<std::size_t> rows;
  std::vector<std::vector<Wide>> adj;
  Wide det = 1;
};

// Every invertible dim-subset of `rows`. Memoized per thread by row matrix.
std::shared_ptr<const std::vector<SquareSubsystem>> invertible_subsystems(
    const std::vector<IntVector>& rows, std::size_t dim);

Wide floor_div(Wide num, Wide den);  // den > 0
Wide ceil_div(Wide num, Wide den);   // den > 0

// Rational point adj * values / det, kept as numerators over a common det.
struct ScaledPoint {
  std::vector<Wide> numerators;
  Wide det = 1;
};

ScaledPoint solve_subsystem(const SquareSubsystem& sub, const std::vector<std::int64_t>& values);

std::int64_t narrow(Wide value);

}  // namespace toricsheaf::detail
