#pragma once

#include "toricsheaf/linalg.hpp"
#include "toricsheaf/toric.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toricsheaf {

// Increasing filtration E(i) of Q^ell given by ell (jump, space) pairs:
// E(i) = 0 below jumps[0], spaces[j] on [jumps[j], jumps[j+1]) and the full
// space from jumps.back() on. Repeated jumps are stored explicitly.
class KlyachkoFiltration {
 public:
  // Throws InputError if the lists are empty, of different lengths, or the
  // spaces do not all live in an ambient space of dimension jumps.size().
  // Ordering invariants are reported by validate(), not enforced here.
  KlyachkoFiltration(IntVector jumps, std::vector<Subspace> spaces);

  // Rank-ell filtration jumping straight from 0 to the full space at `jump`.
  static KlyachkoFiltration trivial(std::size_t rank, std::int64_t jump);

  std::size_t rank() const { return jumps_.size(); }
  const IntVector& jumps() const { return jumps_; }
  const std::vector<Subspace>& spaces() const { return spaces_; }
  std::int64_t first_jump() const { return jumps_.front(); }
  std::int64_t top_jump() const { return jumps_.back(); }

  // 0 when E(i) = 0, otherwise the 1-based index j of the piece spaces[j-1].
  // For repeated jumps the last index sharing the value is returned.
  std::size_t piece_index(std::int64_t i) const;
  // The zero space for index 0, spaces[index-1] otherwise.
  const Subspace& piece(std::size_t index) const;
  const Subspace& evaluate(std::int64_t i) const { return piece(piece_index(i)); }

  KlyachkoFiltration shifted(std::int64_t delta) const;

  friend bool operator==(const KlyachkoFiltration&, const KlyachkoFiltration&) = default;

 private:
  IntVector jumps_;
  std::vector<Subspace> spaces_;
  Subspace zero_;
};

// An equivariant reflexive sheaf: one filtration of Q^ell per ray.
class EquivariantReflexiveSheaf {
 public:
  // Throws InputError unless there is exactly one filtration per ray and
  // every filtration has the same rank.
  EquivariantReflexiveSheaf(ToricVariety variety, std::vector<KlyachkoFiltration> filtrations);

  const ToricVariety& variety() const { return variety_; }
  std::size_t rank() const { return filtrations_.front().rank(); }
  const std::vector<KlyachkoFiltration>& filtrations() const { return filtrations_; }
  const KlyachkoFiltration& filtration(std::size_t ray) const { return filtrations_.at(ray); }

  friend bool operator==(const EquivariantReflexiveSheaf&,
                         const EquivariantReflexiveSheaf&) = default;

 private:
  ToricVariety variety_;
  std::vector<KlyachkoFiltration> filtrations_;
};

// O(D) for D = sum a_rho D_rho: the rank-1 filtration jumping at -a_rho.
EquivariantReflexiveSheaf line_bundle(const ToricVariety& variety, const IntVector& divisor);

// Shifts every jump on ray rho by -a_rho with (a_rho) = twist_divisor(c).
EquivariantReflexiveSheaf twist(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c);

// Shifts every jump on ray rho by -divisor[rho].
EquivariantReflexiveSheaf twist_by_divisor(const EquivariantReflexiveSheaf& sheaf,
                                           const IntVector& divisor);

struct Normalization {
  ClassElement delta;
  EquivariantReflexiveSheaf sheaf;
};

// delta_E = sum_tau (top jump of tau) [D_tau], and E twisted by that divisor,
// whose top jumps are all zero. Split bundles only.
Normalization delta_normalization(const EquivariantReflexiveSheaf& sheaf);

// Degrees of a presentation  sum R(m^i) -> sum R(mu^j) -> E -> 0, one entry
// per ray in every degree vector.
struct PresentationDegrees {
  std::vector<IntVector> generator_degrees;
  std::vector<IntVector> relation_degrees;
};

struct JumpInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const JumpInterval&, const JumpInterval&) = default;
};

// Per-ray interval [lo, hi] containing every jump of a reflexive quotient with
// these degrees: lo = -max_j mu^j, hi = -min_i m^i. Without relations hi is
// taken over the generators instead.
std::vector<JumpInterval> jump_bounds_from_presentation(const PresentationDegrees& degrees);

struct Diagnostic {
  std::size_t ray = 0;
  std::string message;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Every violated filtration invariant, with its ray. Empty means valid.
std::vector<Diagnostic> validate(const EquivariantReflexiveSheaf& sheaf);

}  // namespace toricsheaf
