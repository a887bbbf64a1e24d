#include "toricsheaf/cohomology.hpp"

#include "lattice_geometry.hpp"
#include "toricsheaf/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace toricsheaf {

bool CharacterBox::contains(const Character& m) const {
  if (m.size() != lower.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < lower[i] || m[i] > upper[i]) return false;
  }
  return true;
}

std::uint64_t CharacterBox::size() const {
  if (lower.empty()) return 0;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) return 0;
    n *= static_cast<std::uint64_t>(upper[i] - lower[i] + 1);
  }
  return n;
}

Subspace sigma_piece(const EquivariantReflexiveSheaf& sheaf, const Cone& cone, const Character& m) {
  const auto& X = sheaf.variety();
  if (cone.rays.empty()) return Subspace::full(sheaf.rank());
  Subspace out = sheaf.filtration(cone.rays[0]).evaluate(X.pairing(m, cone.rays[0]));
  for (std::size_t k = 1; k < cone.rays.size() && !out.is_zero(); ++k) {
    out = intersect(out, sheaf.filtration(cone.rays[k]).evaluate(X.pairing(m, cone.rays[k])));
  }
  return out;
}

std::size_t h0_character(const EquivariantReflexiveSheaf& sheaf, const Character& m) {
  Cone all;
  for (std::size_t k = 0; k < sheaf.variety().ray_count(); ++k) all.rays.push_back(k);
  return sigma_piece(sheaf, all, m).dim();
}

std::size_t hn_character(const EquivariantReflexiveSheaf& sheaf, const Character& m) {
  const auto& X = sheaf.variety();
  std::vector<Subspace> pieces;
  pieces.reserve(X.ray_count());
  for (std::size_t k = 0; k < X.ray_count(); ++k) {
    pieces.push_back(sheaf.filtration(k).evaluate(X.pairing(m, k)));
  }
  return sheaf.rank() - sum(pieces).dim();
}

std::int64_t euler_character(const EquivariantReflexiveSheaf& sheaf, const Character& m) {
  std::int64_t chi = 0;
  for (const Cone& cone : sheaf.variety().cones()) {
    auto d = static_cast<std::int64_t>(sigma_piece(sheaf, cone, m).dim());
    chi += (cone.codim % 2 == 0) ? d : -d;
  }
  return chi;
}

std::vector<std::size_t> cech_character(const EquivariantReflexiveSheaf& sheaf,
                                        const Character& m) {
  const auto& X = sheaf.variety();
  const std::size_t ell = sheaf.rank();
  const auto maximal = X.maximal_cones();
  const std::size_t k = maximal.size();
  if (k >= 31) throw UnsupportedError("too many maximal cones for the Cech complex");
  const std::uint32_t subsets = 1u << k;

  // Piece and basis for every nonempty subset of maximal cones.
  std::vector<Subspace> piece(subsets, Subspace::zero(ell));
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    Cone c;
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (first) {
        c.rays = maximal[i].rays;
        first = false;
      } else {
        std::vector<std::size_t> both;
        std::set_intersection(c.rays.begin(), c.rays.end(), maximal[i].rays.begin(),
                              maximal[i].rays.end(), std::back_inserter(both));
        c.rays = std::move(both);
      }
    }
    c.codim = X.dim() - c.rays.size();
    piece[mask] = sigma_piece(sheaf, c, m);
  }

  // Subsets of size p + 1 in increasing order, and each one's slot in C^p.
  std::vector<std::vector<std::uint32_t>> level(k);
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    level[static_cast<std::size_t>(std::popcount(mask)) - 1].push_back(mask);
  }
  std::vector<std::size_t> dimC(k, 0);
  for (std::size_t p = 0; p < k; ++p) {
    for (auto mask : level[p]) dimC[p] += piece[mask].dim();
  }

  // rank of d^p : C^p -> C^{p+1}; each basis vector of C^p gives one image row.
  std::vector<std::size_t> rank_d(k, 0);
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (dimC[p] == 0 || dimC[p + 1] == 0) continue;
    std::vector<std::size_t> offset(subsets, 0);
    std::size_t cols = 0;
    for (auto mask : level[p + 1]) {
      offset[mask] = cols;
      cols += ell;
    }
    RationalMatrix image;
    for (auto I : level[p]) {
      for (const auto& b : piece[I].basis()) {
        RationalVector row(cols);
        for (std::size_t j = 0; j < k; ++j) {
          if (I >> j & 1u) continue;
          std::uint32_t J = I | (1u << j);
          // position of j inside J
          int pos = std::popcount(J & ((1u << j) - 1u));
          for (std::size_t t = 0; t < ell; ++t) {
            row[offset[J] + t] = (pos % 2 == 0) ? b[t] : Rational(-b[t]);
          }
        }
        image.push_back(std::move(row));
      }
    }
    rank_d[p] = rank(std::move(image), cols);
  }

  std::vector<std::size_t> h(k, 0);
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t prev = p == 0 ? 0 : rank_d[p - 1];
    h[p] = dimC[p] - rank_d[p] - prev;
  }
  for (std::size_t p = X.dim() + 1; p < k; ++p) {
    if (h[p] != 0) throw ConsistencyError("Cech cohomology nonzero above the dimension");
  }
  h.resize(X.dim() + 1, 0);
  return h;
}

CharacterBox enumeration_box(const EquivariantReflexiveSheaf& sheaf, std::int64_t margin) {
  const auto& X = sheaf.variety();
  const std::size_t n = X.dim();
  std::vector<IntVector> values(X.ray_count());
  for (std::size_t k = 0; k < X.ray_count(); ++k) {
    values[k] = sheaf.filtration(k).jumps();
    std::sort(values[k].begin(), values[k].end());
    values[k].erase(std::unique(values[k].begin(), values[k].end()), values[k].end());
  }

  auto subs = detail::invertible_subsystems(X.rays(), n);
  IntVector lo(n, std::numeric_limits<std::int64_t>::max());
  IntVector hi(n, std::numeric_limits<std::int64_t>::min());
  std::vector<std::int64_t> rhs(n);
  std::vector<std::size_t> choice(n);
  for (const auto& sub : *subs) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) rhs[i] = values[sub.rows[i]][choice[i]];
      auto pt = detail::solve_subsystem(sub, rhs);
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], detail::narrow(detail::floor_div(pt.numerators[i], pt.det)));
        hi[i] = std::max(hi[i], detail::narrow(detail::ceil_div(pt.numerators[i], pt.det)));
      }
      std::size_t i = 0;
      while (i < n && ++choice[i] == values[sub.rows[i]].size()) choice[i++] = 0;
      if (i == n) break;
    }
  }
  CharacterBox box{lo, hi};
  for (std::size_t i = 0; i < n; ++i) {
    box.lower[i] -= margin;
    box.upper[i] += margin;
  }
  return box;
}

CohomologyCalculator::CohomologyCalculator(EquivariantReflexiveSheaf sheaf, std::int64_t margin)
    : sheaf_(std::move(sheaf)), margin_(margin) {
  if (sheaf_.rank() > 255) throw UnsupportedError("rank above 255");
}

template <class F>
void CohomologyCalculator::accumulate(const ClassElement& c, F&& per_character) {
  const auto& X = sheaf_.variety();
  const IntVector a = X.twist_divisor(c);
  const EquivariantReflexiveSheaf twisted = twist_by_divisor(sheaf_, a);
  const CharacterBox box = enumeration_box(twisted, margin_);
  std::vector<std::uint8_t> sig(X.ray_count());
  box.for_each([&](const Character& m) {
    for (std::size_t k = 0; k < X.ray_count(); ++k) {
      sig[k] = static_cast<std::uint8_t>(sheaf_.filtration(k).piece_index(X.pairing(m, k) + a[k]));
    }
    Entry& e = cache_[sig];
    per_character(e, twisted, m);
  });
}

std::int64_t CohomologyCalculator::h0(const ClassElement& c) {
  std::int64_t total = 0;
  accumulate(c, [&](Entry& e, const EquivariantReflexiveSheaf& s, const Character& m) {
    if (!e.has_h0) {
      e.h0 = h0_character(s, m);
      e.has_h0 = true;
    }
    total += static_cast<std::int64_t>(e.h0);
  });
  return total;
}

std::int64_t CohomologyCalculator::hn(const ClassElement& c) {
  std::int64_t total = 0;
  accumulate(c, [&](Entry& e, const EquivariantReflexiveSheaf& s, const Character& m) {
    if (!e.has_hn) {
      e.hn = hn_character(s, m);
      e.has_hn = true;
    }
    total += static_cast<std::int64_t>(e.hn);
  });
  return total;
}

std::int64_t CohomologyCalculator::euler(const ClassElement& c) {
  std::int64_t total = 0;
  accumulate(c, [&](Entry& e, const EquivariantReflexiveSheaf& s, const Character& m) {
    if (!e.has_euler) {
      e.euler = euler_character(s, m);
      e.has_euler = true;
    }
    total += e.euler;
  });
  return total;
}

std::vector<std::int64_t> CohomologyCalculator::cech(const ClassElement& c) {
  std::vector<std::int64_t> total(sheaf_.variety().dim() + 1, 0);
  accumulate(c, [&](Entry& e, const EquivariantReflexiveSheaf& s, const Character& m) {
    if (!e.has_cech) {
      e.cech = cech_character(s, m);
      e.has_cech = true;
    }
    for (std::size_t p = 0; p < total.size(); ++p) total[p] += static_cast<std::int64_t>(e.cech[p]);
  });
  return total;
}

std::int64_t CohomologyCalculator::h1_surface(const ClassElement& c) {
  if (sheaf_.variety().dim() != 2) throw UnsupportedError("h1_surface needs a surface");
  return h0(c) + hn(c) - euler(c);
}

std::int64_t h0_dim(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c) {
  return CohomologyCalculator(sheaf).h0(c);
}

std::int64_t hn_dim(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c) {
  return CohomologyCalculator(sheaf).hn(c);
}

std::int64_t euler_characteristic(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c) {
  return CohomologyCalculator(sheaf).euler(c);
}

std::vector<std::int64_t> cech_cohomology(const EquivariantReflexiveSheaf& sheaf,
                                          const ClassElement& c) {
  return CohomologyCalculator(sheaf).cech(c);
}

std::int64_t h1_surface(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c) {
  return CohomologyCalculator(sheaf).h1_surface(c);
}

}  // namespace toricsheaf
