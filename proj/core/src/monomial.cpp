#include "toricsheaf/monomial.hpp"

#include "toricsheaf/errors.hpp"

namespace toricsheaf {

void check_ideal(const MonomialIdeal& ideal) {
  if (ideal.n < 1) throw InputError("ideal needs n >= 1");
  if (ideal.generators.empty()) throw InputError("ideal needs at least one generator");
  for (const auto& g : ideal.generators) {
    if (g.size() != static_cast<std::size_t>(ideal.n + 1)) {
      throw InputError("generator needs n + 1 exponents");
    }
    for (auto e : g) {
      if (e < 0) throw InputError("negative exponent in generator");
    }
  }
}

int sigma_piece_dim(const MonomialIdeal& ideal, const Cone& cone, const Character& m) {
  check_ideal(ideal);
  const ToricVariety X = build_variety(ProjectiveSpace{ideal.n});
  if (m.size() != X.dim()) throw InputError("character has the wrong length");
  for (auto ray : cone.rays) {
    if (ray >= X.ray_count()) throw InputError("cone ray out of range");
  }
  for (const auto& g : ideal.generators) {
    bool divides = true;
    for (auto ray : cone.rays) {
      if (g[ray] > X.pairing(m, ray)) {
        divides = false;
        break;
      }
    }
    if (divides) return 1;
  }
  return 0;
}

}  // namespace toricsheaf
