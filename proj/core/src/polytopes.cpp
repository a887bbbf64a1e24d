#include "toricsheaf/polytopes.hpp"

#include "lattice_geometry.hpp"
#include "toricsheaf/cohomology.hpp"
#include "toricsheaf/errors.hpp"

#include <algorithm>
#include <limits>

namespace toricsheaf {

bool IntervalConstraintSystem::has_empty_row() const {
  for (std::size_t k = 0; k < matrix.size(); ++k) {
    if (lower[k] && upper_inclusive[k] && *lower[k] > *upper_inclusive[k]) return true;
  }
  return false;
}

bool IntervalConstraintSystem::satisfied_by(const Character& m) const {
  for (std::size_t k = 0; k < matrix.size(); ++k) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < m.size(); ++i) v += matrix[k][i] * m[i];
    if (lower[k] && v < *lower[k]) return false;
    if (upper_inclusive[k] && v > *upper_inclusive[k]) return false;
  }
  return true;
}

void check_multi_index(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx) {
  if (idx.size() != sheaf.variety().ray_count()) {
    throw InputError("multi-index needs one entry per ray");
  }
  for (auto v : idx) {
    if (v < 1 || v > sheaf.rank()) throw InputError("multi-index entry out of range 1..rank");
  }
}

namespace {

// Interval [i_j - shift, i_{j+1} - shift - 1] of the j-th piece, top piece open.
void piece_bounds(const KlyachkoFiltration& f, std::size_t j, std::int64_t shift,
                  std::optional<std::int64_t>& lo, std::optional<std::int64_t>& hi) {
  lo = f.jumps()[j - 1] - shift;
  if (j < f.rank()) {
    hi = f.jumps()[j] - shift - 1;
  } else {
    hi.reset();
  }
}

// Bounding box of the polytope from its vertices; nullopt when empty.
std::optional<CharacterBox> polytope_box(const IntervalConstraintSystem& sys) {
  const std::size_t n = sys.variables();
  const std::size_t rows = sys.matrix.size();
  for (std::size_t k = 0; k < rows; ++k) {
    if (!sys.lower[k]) throw UnboundedSystemError("lower bound missing on a constraint row");
  }
  if (sys.has_empty_row()) return std::nullopt;

  using detail::Wide;
  auto subs = detail::invertible_subsystems(sys.matrix, n);
  bool any = false;
  std::vector<Wide> lo(n), hi(n);  // scaled by nothing: integer bounds
  std::vector<std::int64_t> rhs(n);
  std::vector<std::uint8_t> choice(n);
  for (const auto& sub : *subs) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      bool usable = true;
      for (std::size_t i = 0; i < n; ++i) {
        const auto k = sub.rows[i];
        if (choice[i] == 0) {
          rhs[i] = *sys.lower[k];
        } else if (sys.upper_inclusive[k]) {
          rhs[i] = *sys.upper_inclusive[k];
        } else {
          usable = false;
        }
      }
      if (usable) {
        auto pt = detail::solve_subsystem(sub, rhs);
        bool feasible = true;
        for (std::size_t k = 0; k < rows && feasible; ++k) {
          Wide v = 0;
          for (std::size_t i = 0; i < n; ++i) v += static_cast<Wide>(sys.matrix[k][i]) * pt.numerators[i];
          if (v < static_cast<Wide>(*sys.lower[k]) * pt.det) feasible = false;
          if (sys.upper_inclusive[k] && v > static_cast<Wide>(*sys.upper_inclusive[k]) * pt.det) {
            feasible = false;
          }
        }
        if (feasible) {
          for (std::size_t i = 0; i < n; ++i) {
            Wide c_lo = detail::ceil_div(pt.numerators[i], pt.det);
            Wide c_hi = detail::floor_div(pt.numerators[i], pt.det);
            if (!any) {
              lo[i] = c_lo;
              hi[i] = c_hi;
            } else {
              lo[i] = std::min(lo[i], c_lo);
              hi[i] = std::max(hi[i], c_hi);
            }
          }
          any = true;
        }
      }
      std::size_t i = 0;
      while (i < n && ++choice[i] == 2) choice[i++] = 0;
      if (i == n) break;
    }
  }
  if (!any) return std::nullopt;
  CharacterBox box;
  for (std::size_t i = 0; i < n; ++i) {
    box.lower.push_back(detail::narrow(lo[i]));
    box.upper.push_back(detail::narrow(hi[i]));
  }
  return box;
}

}  // namespace

IntervalConstraintSystem omega_system(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx,
                                      const ClassElement& c) {
  check_multi_index(sheaf, idx);
  const auto& X = sheaf.variety();
  const IntVector shift = X.twist_divisor(c);
  IntervalConstraintSystem sys;
  sys.matrix = X.rays();
  sys.lower.resize(X.ray_count());
  sys.upper_inclusive.resize(X.ray_count());
  for (std::size_t k = 0; k < X.ray_count(); ++k) {
    piece_bounds(sheaf.filtration(k), idx[k], shift[k], sys.lower[k], sys.upper_inclusive[k]);
  }
  return sys;
}

std::vector<Character> psi_points(const IntervalConstraintSystem& sys) {
  std::vector<Character> out;
  auto box = polytope_box(sys);
  if (!box) return out;
  box->for_each([&](const Character& m) {
    if (sys.satisfied_by(m)) out.push_back(m);
  });
  return out;
}

std::uint64_t psi_count(const IntervalConstraintSystem& sys) {
  std::uint64_t count = 0;
  auto box = polytope_box(sys);
  if (!box) return 0;
  box->for_each([&](const Character& m) {
    if (sys.satisfied_by(m)) ++count;
  });
  return count;
}

namespace {

void check_weights(const std::vector<int>& a) {
  if (a.empty()) throw InputError("weight list is empty");
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u] < 0) throw InputError("weights must be nonnegative");
    if (u > 0 && a[u] < a[u - 1]) throw InputError("weights must be sorted");
  }
}

}  // namespace

FeasibilityResult feasible_system1(const std::vector<int>& a, std::int64_t A, std::int64_t B) {
  check_weights(a);
  if (B < 0) throw InputError("B must be nonnegative");
  FeasibilityResult res;
  if (A <= static_cast<std::int64_t>(a.back()) * B) {
    res.feasible = true;
    IntVector w(a.size(), 0);
    w.back() = B;
    res.witness = std::move(w);
  }
  return res;
}

bool feasible_metasystem(const std::vector<int>& a, const IntVector& lambda, const IntVector& mu) {
  check_weights(a);
  if (lambda.empty() || mu.size() != a.size() + 1) {
    throw InputError("metasystem needs s + 1 lambdas and r + 1 mus");
  }
  // Substituting e_t = <m, rho_t> - lambda_t (t >= 1), e_{s+u} = <m, eta_u> - mu_u
  // turns the system into System2 with these right-hand sides.
  std::int64_t B = 0;
  for (auto v : mu) B -= v;
  std::int64_t A = 0;
  for (auto v : lambda) A += v;
  for (std::size_t u = 1; u < mu.size(); ++u) A -= static_cast<std::int64_t>(a[u - 1]) * mu[u];
  if (B < 0) return false;
  return feasible_system1(a, A, B).feasible;
}

namespace {

void require_split(const EquivariantReflexiveSheaf& sheaf) {
  if (!sheaf.variety().is_split_bundle()) {
    throw UnsupportedError("sliced systems need a split-bundle variety");
  }
}

}  // namespace

std::vector<IntVector> psi_n(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& n,
                             std::int64_t q) {
  require_split(sheaf);
  const auto& X = sheaf.variety();
  const auto r = static_cast<std::size_t>(X.r());
  if (n.size() != r + 1) throw InputError("eta multi-index needs r + 1 entries");
  IntervalConstraintSystem sys;
  sys.lower.resize(r + 1);
  sys.upper_inclusive.resize(r + 1);
  for (std::size_t u = 0; u <= r; ++u) {
    if (n[u] < 1 || n[u] > sheaf.rank()) throw InputError("multi-index entry out of range 1..rank");
    IntVector row(r, 0);
    if (u == 0) {
      std::fill(row.begin(), row.end(), -1);
    } else {
      row[u - 1] = 1;
    }
    sys.matrix.push_back(std::move(row));
    piece_bounds(sheaf.filtration(X.eta_index(static_cast<int>(u))), n[u], u == 0 ? q : 0,
                 sys.lower[u], sys.upper_inclusive[u]);
  }
  return psi_points(sys);
}

std::vector<IntVector> psi_m_sliced(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& m,
                                    std::int64_t p, const IntVector& c) {
  require_split(sheaf);
  const auto& X = sheaf.variety();
  const auto s = static_cast<std::size_t>(X.s());
  if (m.size() != s + 1) throw InputError("rho multi-index needs s + 1 entries");
  if (c.size() != static_cast<std::size_t>(X.r())) throw InputError("slice needs r coordinates");
  std::int64_t A = 0;
  for (std::size_t u = 0; u < c.size(); ++u) A += static_cast<std::int64_t>(X.a()[u]) * c[u];
  IntervalConstraintSystem sys;
  sys.lower.resize(s + 1);
  sys.upper_inclusive.resize(s + 1);
  for (std::size_t t = 0; t <= s; ++t) {
    if (m[t] < 1 || m[t] > sheaf.rank()) throw InputError("multi-index entry out of range 1..rank");
    IntVector row(s, 0);
    if (t == 0) {
      std::fill(row.begin(), row.end(), -1);
    } else {
      row[t - 1] = 1;
    }
    sys.matrix.push_back(std::move(row));
    piece_bounds(sheaf.filtration(X.rho_index(static_cast<int>(t))), m[t], t == 0 ? p + A : 0,
                 sys.lower[t], sys.upper_inclusive[t]);
  }
  return psi_points(sys);
}

std::uint64_t assemble_slices(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx,
                              std::int64_t p, std::int64_t q) {
  require_split(sheaf);
  check_multi_index(sheaf, idx);
  const auto s = static_cast<std::size_t>(sheaf.variety().s());
  MultiIndex m(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(s + 1));
  MultiIndex n(idx.begin() + static_cast<std::ptrdiff_t>(s + 1), idx.end());
  std::uint64_t total = 0;
  for (const auto& c : psi_n(sheaf, n, q)) total += psi_m_sliced(sheaf, m, p, c).size();
  return total;
}

}  // namespace toricsheaf
