#pragma once

#include "toricsheaf/filtration.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace toricsheaf {

// Per-coordinate closed integer window in character space.
struct CharacterBox {
  IntVector lower;
  IntVector upper;

  bool contains(const Character& m) const;
  std::uint64_t size() const;

  // Calls f(m) for every lattice point, lexicographically.
  template <class F>
  void for_each(F&& f) const {
    if (lower.empty()) return;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (lower[i] > upper[i]) return;
    }
    Character m = lower;
    while (true) {
      f(static_cast<const Character&>(m));
      std::size_t k = m.size();
      while (k > 0) {
        --k;
        if (m[k] < upper[k]) {
          ++m[k];
          break;
        }
        m[k] = lower[k];
        if (k == 0) return;
      }
    }
  }
};

// E^sigma_m: intersection over the cone's rays of E^rho(<m, rho>).
Subspace sigma_piece(const EquivariantReflexiveSheaf& sheaf, const Cone& cone, const Character& m);

std::size_t h0_character(const EquivariantReflexiveSheaf& sheaf, const Character& m);
std::size_t hn_character(const EquivariantReflexiveSheaf& sheaf, const Character& m);
std::int64_t euler_character(const EquivariantReflexiveSheaf& sheaf, const Character& m);

// Dimensions (H^0, ..., H^dim) of the degree-m part of the Cech complex on the
// cover by maximal cones.
std::vector<std::size_t> cech_character(const EquivariantReflexiveSheaf& sheaf, const Character& m);

// Bounding box, widened by `margin`, of all vertices of the hyperplane
// arrangement { <m, rho> = jump }. Every character with a nonzero cohomology
// contribution lies inside it.
CharacterBox enumeration_box(const EquivariantReflexiveSheaf& sheaf, std::int64_t margin = 1);

// Global sums over the enumeration box of twist(sheaf, c). Memoizes the
// per-character data by which filtration pieces a character selects, so one
// calculator answers many twists cheaply. Not safe for concurrent use.
class CohomologyCalculator {
 public:
  explicit CohomologyCalculator(EquivariantReflexiveSheaf sheaf, std::int64_t margin = 1);

  const EquivariantReflexiveSheaf& sheaf() const { return sheaf_; }

  std::int64_t h0(const ClassElement& c);
  std::int64_t hn(const ClassElement& c);
  std::int64_t euler(const ClassElement& c);
  std::vector<std::int64_t> cech(const ClassElement& c);
  // h^0 + h^n - chi; surfaces only.
  std::int64_t h1_surface(const ClassElement& c);

 private:
  struct Entry {
    bool has_h0 = false, has_hn = false, has_euler = false, has_cech = false;
    std::size_t h0 = 0, hn = 0;
    std::int64_t euler = 0;
    std::vector<std::size_t> cech;
  };

  template <class F>
  void accumulate(const ClassElement& c, F&& per_character);

  EquivariantReflexiveSheaf sheaf_;
  std::int64_t margin_;
  std::map<std::vector<std::uint8_t>, Entry> cache_;
};

std::int64_t h0_dim(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c);
std::int64_t hn_dim(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c);
std::int64_t euler_characteristic(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c);
std::vector<std::int64_t> cech_cohomology(const EquivariantReflexiveSheaf& sheaf,
                                          const ClassElement& c);
std::int64_t h1_surface(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c);

}  // namespace toricsheaf
