#pragma once

#include "toricsheaf/filtration.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace toricsheaf::fixtures {

// Rank-3 sheaf on Hirzebruch(3) used as the worked example.
EquivariantReflexiveSheaf final_example();
// Tangent sheaf of Hirzebruch(3).
EquivariantReflexiveSheaf tangent_h3();

Subspace span_of(std::initializer_list<std::initializer_list<int>> gens, std::size_t ambient);

struct RandomSheafOptions {
  std::size_t max_rank = 3;
  std::int64_t min_jump = -6;
  std::int64_t max_jump = 0;
  int entry_bound = 3;
};

// Valid sheaf with a random flag per ray: strictly increasing dimensions and
// each distinct jump repeated by its dimension increment.
EquivariantReflexiveSheaf random_sheaf(const ToricVariety& variety, std::mt19937_64& rng,
                                       const RandomSheafOptions& options = {});

// Twenty random sheaves on Hirzebruch(a), a <= 3, followed by final_example().
std::vector<EquivariantReflexiveSheaf> acceptance_sample(std::uint64_t seed = 20240611);

}  // namespace toricsheaf::fixtures
