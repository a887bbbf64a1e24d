#include "toricsheaf/filtration.hpp"

#include "toricsheaf/errors.hpp"

#include <algorithm>
#include <limits>

namespace toricsheaf {

KlyachkoFiltration::KlyachkoFiltration(IntVector jumps, std::vector<Subspace> spaces)
    : jumps_(std::move(jumps)), spaces_(std::move(spaces)), zero_(Subspace::zero(jumps_.size())) {
  if (jumps_.empty()) throw InputError("filtration must have at least one jump");
  if (spaces_.size() != jumps_.size()) {
    throw InputError("filtration has " + std::to_string(jumps_.size()) + " jumps but " +
                     std::to_string(spaces_.size()) + " spaces");
  }
  for (std::size_t j = 0; j < spaces_.size(); ++j) {
    if (spaces_[j].ambient_dim() != jumps_.size()) {
      throw InputError("space " + std::to_string(j + 1) + " lives in dimension " +
                       std::to_string(spaces_[j].ambient_dim()) + ", expected " +
                       std::to_string(jumps_.size()));
    }
  }
}

KlyachkoFiltration KlyachkoFiltration::trivial(std::size_t rank, std::int64_t jump) {
  return KlyachkoFiltration(IntVector(rank, jump),
                            std::vector<Subspace>(rank, Subspace::full(rank)));
}

std::size_t KlyachkoFiltration::piece_index(std::int64_t i) const {
  return static_cast<std::size_t>(std::upper_bound(jumps_.begin(), jumps_.end(), i) -
                                  jumps_.begin());
}

const Subspace& KlyachkoFiltration::piece(std::size_t index) const {
  return index == 0 ? zero_ : spaces_.at(index - 1);
}

KlyachkoFiltration KlyachkoFiltration::shifted(std::int64_t delta) const {
  KlyachkoFiltration out = *this;
  for (auto& j : out.jumps_) j += delta;
  return out;
}

EquivariantReflexiveSheaf::EquivariantReflexiveSheaf(ToricVariety variety,
                                                     std::vector<KlyachkoFiltration> filtrations)
    : variety_(std::move(variety)), filtrations_(std::move(filtrations)) {
  if (filtrations_.size() != variety_.ray_count()) {
    throw InputError("sheaf has " + std::to_string(filtrations_.size()) +
                     " filtrations, variety has " + std::to_string(variety_.ray_count()) +
                     " rays");
  }
  const std::size_t ell = filtrations_.front().rank();
  for (std::size_t k = 0; k < filtrations_.size(); ++k) {
    if (filtrations_[k].rank() != ell) {
      throw InputError("filtration on ray " + variety_.ray_names()[k] + " has rank " +
                       std::to_string(filtrations_[k].rank()) + ", expected " +
                       std::to_string(ell));
    }
  }
}

EquivariantReflexiveSheaf line_bundle(const ToricVariety& variety, const IntVector& divisor) {
  if (divisor.size() != variety.ray_count()) {
    throw InputError("divisor needs one coefficient per ray");
  }
  std::vector<KlyachkoFiltration> filtrations;
  for (auto a : divisor) filtrations.push_back(KlyachkoFiltration::trivial(1, -a));
  return EquivariantReflexiveSheaf(variety, std::move(filtrations));
}

EquivariantReflexiveSheaf twist_by_divisor(const EquivariantReflexiveSheaf& sheaf,
                                           const IntVector& divisor) {
  if (divisor.size() != sheaf.variety().ray_count()) {
    throw InputError("divisor needs one coefficient per ray");
  }
  std::vector<KlyachkoFiltration> filtrations;
  for (std::size_t k = 0; k < divisor.size(); ++k) {
    filtrations.push_back(sheaf.filtration(k).shifted(-divisor[k]));
  }
  return EquivariantReflexiveSheaf(sheaf.variety(), std::move(filtrations));
}

EquivariantReflexiveSheaf twist(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c) {
  return twist_by_divisor(sheaf, sheaf.variety().twist_divisor(c));
}

Normalization delta_normalization(const EquivariantReflexiveSheaf& sheaf) {
  const auto& v = sheaf.variety();
  if (!v.is_split_bundle()) {
    throw UnsupportedError("delta normalization is only defined on split bundles");
  }
  IntVector tops;
  for (const auto& f : sheaf.filtrations()) tops.push_back(f.top_jump());
  return Normalization{v.divisor_class(tops), twist_by_divisor(sheaf, tops)};
}

std::vector<JumpInterval> jump_bounds_from_presentation(const PresentationDegrees& degrees) {
  if (degrees.generator_degrees.empty()) {
    throw InputError("presentation needs at least one generator");
  }
  const std::size_t rays = degrees.generator_degrees.front().size();
  auto check = [rays](const std::vector<IntVector>& list) {
    for (const auto& d : list) {
      if (d.size() != rays) throw InputError("presentation degrees of unequal length");
    }
  };
  check(degrees.generator_degrees);
  check(degrees.relation_degrees);

  const auto& upper_source =
      degrees.relation_degrees.empty() ? degrees.generator_degrees : degrees.relation_degrees;
  std::vector<JumpInterval> out(rays);
  for (std::size_t k = 0; k < rays; ++k) {
    std::int64_t max_mu = std::numeric_limits<std::int64_t>::min();
    for (const auto& mu : degrees.generator_degrees) max_mu = std::max(max_mu, mu[k]);
    std::int64_t min_m = std::numeric_limits<std::int64_t>::max();
    for (const auto& m : upper_source) min_m = std::min(min_m, m[k]);
    out[k] = JumpInterval{-max_mu, -min_m};
  }
  return out;
}

std::vector<Diagnostic> validate(const EquivariantReflexiveSheaf& sheaf) {
  std::vector<Diagnostic> out;
  const auto& names = sheaf.variety().ray_names();
  for (std::size_t k = 0; k < sheaf.filtrations().size(); ++k) {
    const auto& f = sheaf.filtration(k);
    const auto& jumps = f.jumps();
    const auto& spaces = f.spaces();
    auto report = [&](std::string msg) { out.push_back({k, "ray " + names[k] + ": " + msg}); };

    if (!std::is_sorted(jumps.begin(), jumps.end())) report("jumps not weakly increasing");
    if (!spaces.back().is_full()) report("last space is not the full space");
    if (spaces.front().is_zero()) report("first space is zero, so its jump is not a jump");
    for (std::size_t j = 0; j + 1 < spaces.size(); ++j) {
      const std::string at = "E_" + std::to_string(j + 1) + ", E_" + std::to_string(j + 2);
      if (!spaces[j + 1].contains(spaces[j])) report("spaces not increasing at " + at);
      const bool same_jump = jumps[j] == jumps[j + 1];
      const bool same_space = spaces[j] == spaces[j + 1];
      if (same_jump && !same_space) {
        report("i_j = i_{j+1} but E_j != E_{j+1} at " + at);
      } else if (!same_jump && same_space) {
        report("E_j = E_{j+1} but i_j != i_{j+1} at " + at);
      }
    }
  }
  return out;
}

}  // namespace toricsheaf
