#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricsheaf::fixtures {

Subspace span_of(std::initializer_list<std::initializer_list<int>> gens, std::size_t ambient) {
  std::vector<RationalVector> vectors;
  for (const auto& g : gens) {
    RationalVector v;
    for (int x : g) v.emplace_back(x);
    vectors.push_back(std::move(v));
  }
  return span(vectors, ambient);
}

EquivariantReflexiveSheaf final_example() {
  const ToricVariety X = build_variety(Hirzebruch{3});
  auto full = Subspace::full(3);
  std::vector<KlyachkoFiltration> f;
  f.emplace_back(IntVector{-3, -1, 0},
                 std::vector<Subspace>{span_of({{3, 3, 1}}, 3), span_of({{3, 3, 1}, {4, 0, 2}}, 3), full});
  f.emplace_back(IntVector{-9, -3, 0},
                 std::vector<Subspace>{span_of({{9, 4, 8}}, 3), span_of({{9, 4, 8}, {2, 8, 8}}, 3), full});
  f.emplace_back(IntVector{-4, -1, 0},
                 std::vector<Subspace>{span_of({{0, 6, 3}}, 3), span_of({{0, 6, 3}, {7, 1, 3}}, 3), full});
  f.emplace_back(IntVector{-2, -1, 0},
                 std::vector<Subspace>{span_of({{4, 0, 4}}, 3), span_of({{4, 0, 4}, {9, 8, 0}}, 3), full});
  return EquivariantReflexiveSheaf(X, std::move(f));
}

EquivariantReflexiveSheaf tangent_h3() {
  const ToricVariety X = build_variety(Hirzebruch{3});
  auto full = Subspace::full(2);
  std::vector<KlyachkoFiltration> f;
  for (auto gen : {std::pair{3, 1}, std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 0}}) {
    f.emplace_back(IntVector{-1, 0},
                   std::vector<Subspace>{span_of({{gen.first, gen.second}}, 2), full});
  }
  return EquivariantReflexiveSheaf(X, std::move(f));
}

EquivariantReflexiveSheaf random_sheaf(const ToricVariety& variety, std::mt19937_64& rng,
                                       const RandomSheafOptions& options) {
  std::uniform_int_distribution<std::size_t> rank_dist(1, options.max_rank);
  const std::size_t ell = rank_dist(rng);
  std::uniform_int_distribution<int> entry(-options.entry_bound, options.entry_bound);
  std::bernoulli_distribution coin(0.5);

  std::vector<KlyachkoFiltration> filtrations;
  for (std::size_t ray = 0; ray < variety.ray_count(); ++ray) {
    // Dimension chain d_1 < ... < d_k = ell.
    std::vector<std::size_t> dims;
    for (std::size_t d = 1; d < ell; ++d) {
      if (coin(rng)) dims.push_back(d);
    }
    dims.push_back(ell);
    const std::size_t k = dims.size();

    // k distinct jump values in [min_jump, max_jump], sorted.
    std::vector<std::int64_t> pool;
    for (auto v = options.min_jump; v <= options.max_jump; ++v) pool.push_back(v);
    if (pool.size() < k) throw std::invalid_argument("jump range too narrow for the rank");
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::int64_t> values(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(values.begin(), values.end());

    // Random basis of Q^ell; the block j space is spanned by its first d_j vectors.
    std::vector<RationalVector> basis;
    while (true) {
      basis.clear();
      for (std::size_t b = 0; b < ell; ++b) {
        RationalVector v;
        for (std::size_t t = 0; t < ell; ++t) v.emplace_back(entry(rng));
        basis.push_back(std::move(v));
      }
      if (span(basis, ell).is_full()) break;
    }

    IntVector jumps;
    std::vector<Subspace> spaces;
    std::size_t prev = 0;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<RationalVector> first(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(dims[j]));
      Subspace piece = span(first, ell);
      for (std::size_t rep = prev; rep < dims[j]; ++rep) {
        jumps.push_back(values[j]);
        spaces.push_back(piece);
      }
      prev = dims[j];
    }
    filtrations.emplace_back(std::move(jumps), std::move(spaces));
  }
  EquivariantReflexiveSheaf sheaf(variety, std::move(filtrations));
  if (!validate(sheaf).empty()) throw std::logic_error("random sheaf failed validation");
  return sheaf;
}

std::vector<EquivariantReflexiveSheaf> acceptance_sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> a_dist(0, 3);
  std::vector<EquivariantReflexiveSheaf> out;
  for (int i = 0; i < 20; ++i) {
    const ToricVariety X = build_variety(Hirzebruch{a_dist(rng)});
    out.push_back(random_sheaf(X, rng));
  }
  out.push_back(final_example());
  return out;
}

}  // namespace toricsheaf::fixtures
