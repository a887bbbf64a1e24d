#include "toricsheaf/hilbert.hpp"

#include "toricsheaf/errors.hpp"

#include <mutex>

namespace toricsheaf {

std::size_t intersection_dim(const EquivariantReflexiveSheaf& sheaf, const MultiIndex& idx) {
  check_multi_index(sheaf, idx);
  std::vector<Subspace> spaces;
  for (std::size_t k = 0; k < idx.size(); ++k) spaces.push_back(sheaf.filtration(k).piece(idx[k]));
  return intersect(spaces).dim();
}

HilbertEvaluator::HilbertEvaluator(const EquivariantReflexiveSheaf& sheaf)
    : variety_(sheaf.variety()) {
  const std::size_t rays = variety_.ray_count();
  const std::size_t ell = sheaf.rank();
  const ClassElement zero{IntVector(variety_.class_rank(), 0)};
  MultiIndex idx(rays, 1);
  while (true) {
    IntervalConstraintSystem sys = omega_system(sheaf, idx, zero);
    if (!sys.has_empty_row()) {
      std::size_t d = intersection_dim(sheaf, idx);
      if (d > 0) terms_.push_back(Term{std::move(sys), d});
    }
    std::size_t k = 0;
    while (k < rays && ++idx[k] > ell) idx[k++] = 1;
    if (k == rays) break;
  }
}

std::int64_t HilbertEvaluator::operator()(const ClassElement& c) const {
  const IntVector shift = variety_.twist_divisor(c);
  std::int64_t total = 0;
  for (const auto& term : terms_) {
    IntervalConstraintSystem sys = term.base;
    for (std::size_t k = 0; k < shift.size(); ++k) {
      if (shift[k] == 0) continue;
      if (sys.lower[k]) *sys.lower[k] -= shift[k];
      if (sys.upper_inclusive[k]) *sys.upper_inclusive[k] -= shift[k];
    }
    total += static_cast<std::int64_t>(psi_count(sys) * term.weight);
  }
  return total;
}

std::int64_t HilbertEvaluator::operator()(std::int64_t p, std::int64_t q) const {
  return (*this)(ClassElement{{p, q}});
}

std::int64_t hilbert_function(const EquivariantReflexiveSheaf& sheaf, const ClassElement& c) {
  return HilbertEvaluator(sheaf)(c);
}

namespace {

std::string linear_term(std::int64_t coeff, const char* var, bool first) {
  if (coeff == 0) return "";
  std::string out;
  std::int64_t mag = coeff < 0 ? -coeff : coeff;
  if (first) {
    if (coeff < 0) out += "-";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  if (mag != 1) out += std::to_string(mag);
  return out + var;
}

void require_split(const EquivariantReflexiveSheaf& sheaf) {
  if (!sheaf.variety().is_split_bundle()) {
    throw UnsupportedError("support bounds are only available on split-bundle varieties");
  }
}

// { q >= sum mu', p + a_r q >= sum lambda' + a_r mu'_0 + sum_{u>=1} (a_r - a_u) mu'_u }.
std::array<HalfPlane, 2> metasystem_region(const std::vector<int>& a, const IntVector& lambda,
                                           const IntVector& mu) {
  const std::int64_t ar = a.back();
  std::int64_t qb = 0;
  for (auto v : mu) qb += v;
  std::int64_t pb = ar * mu[0];
  for (auto v : lambda) pb += v;
  for (std::size_t u = 1; u < mu.size(); ++u) pb += (ar - a[u - 1]) * mu[u];
  return {HalfPlane{0, 1, qb}, HalfPlane{1, ar, pb}};
}

struct JumpVectors {
  IntVector first_rho, top_rho, first_eta, top_eta;
};

JumpVectors jump_vectors(const EquivariantReflexiveSheaf& sheaf) {
  const auto& X = sheaf.variety();
  JumpVectors j;
  for (int t = 0; t <= X.s(); ++t) {
    j.first_rho.push_back(sheaf.filtration(X.rho_index(t)).first_jump());
    j.top_rho.push_back(sheaf.filtration(X.rho_index(t)).top_jump());
  }
  for (int u = 0; u <= X.r(); ++u) {
    j.first_eta.push_back(sheaf.filtration(X.eta_index(u)).first_jump());
    j.top_eta.push_back(sheaf.filtration(X.eta_index(u)).top_jump());
  }
  return j;
}

}  // namespace

std::string HalfPlane::to_string() const {
  std::string lhs = linear_term(cp, "p", true);
  lhs += linear_term(cq, "q", lhs.empty());
  if (lhs.empty()) lhs = "0";
  return lhs + " >= " + std::to_string(bound);
}

std::string SupportRegion::name() const {
  switch (kind) {
    case RegionKind::LowerBound:
      return "L_E";
    case RegionKind::I:
      return "I(" + std::to_string(index) + ")";
    case RegionKind::J:
      return "J(" + std::to_string(index) + ")";
    case RegionKind::Omega:
      return "omega";
  }
  return "";
}

std::string SupportRegion::to_string() const {
  return name() + ": " + halves[0].to_string() + " and " + halves[1].to_string();
}

SupportRegion lower_bound_region(const EquivariantReflexiveSheaf& sheaf) {
  require_split(sheaf);
  auto j = jump_vectors(sheaf);
  return SupportRegion{RegionKind::LowerBound, 0,
                       metasystem_region(sheaf.variety().a(), j.first_rho, j.first_eta)};
}

std::vector<SupportRegion> upper_bound_regions(const EquivariantReflexiveSheaf& sheaf) {
  require_split(sheaf);
  const auto& X = sheaf.variety();
  auto j = jump_vectors(sheaf);
  std::vector<SupportRegion> out;
  for (int k = 0; k <= X.s(); ++k) {
    IntVector lambda = j.top_rho;
    lambda[static_cast<std::size_t>(k)] = j.first_rho[static_cast<std::size_t>(k)];
    out.push_back({RegionKind::I, k, metasystem_region(X.a(), lambda, j.top_eta)});
  }
  for (int k = 0; k <= X.r(); ++k) {
    IntVector mu = j.top_eta;
    mu[static_cast<std::size_t>(k)] = j.first_eta[static_cast<std::size_t>(k)];
    out.push_back({RegionKind::J, k, metasystem_region(X.a(), j.top_rho, mu)});
  }
  return out;
}

bool in_support_lower_bound(const EquivariantReflexiveSheaf& sheaf, std::int64_t p, std::int64_t q) {
  return lower_bound_region(sheaf).contains(p, q);
}

bool in_support_upper_bound(const EquivariantReflexiveSheaf& sheaf, std::int64_t p, std::int64_t q) {
  for (const auto& region : upper_bound_regions(sheaf)) {
    if (region.contains(p, q)) return true;
  }
  return false;
}

SupportRegion regularity_region(const EquivariantReflexiveSheaf& sheaf) {
  require_split(sheaf);
  const auto& X = sheaf.variety();
  auto j = jump_vectors(sheaf);
  std::int64_t pb = -1, qb = -1;
  for (auto v : j.top_rho) pb += v;
  for (int u = 1; u <= X.r(); ++u) {
    pb -= static_cast<std::int64_t>(X.a()[static_cast<std::size_t>(u - 1)]) *
          j.first_eta[static_cast<std::size_t>(u)];
  }
  for (auto v : j.top_eta) qb += v;
  return SupportRegion{RegionKind::Omega, 0, {HalfPlane{1, 0, pb}, HalfPlane{0, 1, qb}}};
}

Rational bernoulli_number(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 solved for B_m.
    const auto m = static_cast<unsigned>(table.size());
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binom) * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

RationalPolynomial bernoulli_polynomial(unsigned n) {
  RationalPolynomial out(1);
  Integer binom = 1;  // C(n, k)
  for (unsigned k = 0; k <= n; ++k) {
    out.add_term({k}, Rational(binom) * bernoulli_number(n - k));
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

RationalPolynomial faulhaber_sum(unsigned t) {
  RationalPolynomial b = bernoulli_polynomial(t + 1);
  RationalPolynomial shift = RationalPolynomial::variable(1, 0) + RationalPolynomial::constant(1, 1);
  RationalPolynomial out = b.substitute(0, shift) - RationalPolynomial::constant(1, b.evaluate({0}));
  return out * Rational(1, t + 1);
}

RationalPolynomial simplex_sum(const RationalPolynomial& poly, std::size_t k) {
  if (k == 0) throw InputError("simplex_sum needs at least one summation variable");
  if (poly.variables() != k + 1) throw InputError("simplex_sum needs k + 1 variables");
  RationalPolynomial current = poly;
  for (std::size_t v = k; v >= 1; --v) {
    // Sum e_v from 0 to Q = q - e_1 - ... - e_{v-1}.
    RationalPolynomial Q = RationalPolynomial::variable(k + 1, 0);
    for (std::size_t i = 1; i < v; ++i) Q -= RationalPolynomial::variable(k + 1, i);
    RationalPolynomial next(k + 1);
    const int top = current.degree_in(v);
    for (int power = 0; power <= top; ++power) {
      RationalPolynomial coeff = current.coefficient_of(v, static_cast<unsigned>(power));
      if (coeff.is_zero()) continue;
      RationalPolynomial f = faulhaber_sum(static_cast<unsigned>(power)).resized(k + 1);
      next += coeff * f.substitute(0, Q);
    }
    current = std::move(next);
  }
  return current.resized(1);
}

namespace {

// C(x_var - origin, a) as a polynomial in two variables.
RationalPolynomial shifted_binomial(std::size_t var, std::int64_t origin, unsigned a) {
  RationalPolynomial out = RationalPolynomial::constant(2, 1);
  for (unsigned i = 0; i < a; ++i) {
    RationalPolynomial factor = RationalPolynomial::variable(2, var) -
                                RationalPolynomial::constant(2, Rational(origin + i));
    out = out * factor * Rational(1, i + 1);
  }
  return out;
}

}  // namespace

RationalPolynomial hilbert_polynomial(const EquivariantReflexiveSheaf& sheaf) {
  require_split(sheaf);
  const SupportRegion omega = regularity_region(sheaf);
  const std::int64_t p0 = omega.halves[0].bound;
  const std::int64_t q0 = omega.halves[1].bound;
  const auto D = static_cast<std::int64_t>(sheaf.variety().dim());
  HilbertEvaluator h(sheaf);

  // Newton forward differences on the (D+1) x (D+1) grid.
  std::vector<std::vector<Rational>> diff(static_cast<std::size_t>(D + 1),
                                          std::vector<Rational>(static_cast<std::size_t>(D + 1)));
  for (std::int64_t i = 0; i <= D; ++i) {
    for (std::int64_t j = 0; j <= D; ++j) {
      diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h(p0 + i, q0 + j);
    }
  }
  for (std::size_t level = 1; level <= static_cast<std::size_t>(D); ++level) {
    for (std::size_t i = static_cast<std::size_t>(D); i >= level; --i) {
      for (std::size_t j = 0; j < diff[i].size(); ++j) diff[i][j] -= diff[i - 1][j];
    }
  }
  for (auto& row : diff) {
    for (std::size_t level = 1; level < row.size(); ++level) {
      for (std::size_t j = row.size() - 1; j >= level; --j) row[j] -= row[j - 1];
    }
  }

  RationalPolynomial P(2);
  for (unsigned a = 0; a <= static_cast<unsigned>(D); ++a) {
    for (unsigned b = 0; b <= static_cast<unsigned>(D); ++b) {
      const Rational& c = diff[a][b];
      if (c == 0) continue;
      P += shifted_binomial(0, p0, a) * shifted_binomial(1, q0, b) * c;
    }
  }
  if (P.degree() > D) {
    throw ConsistencyError("Hilbert function on the regularity corner is not of degree <= dim X");
  }
  for (std::int64_t k = 0; k < D; ++k) {
    const std::int64_t pts[2][2] = {{p0 + D + 1 + k, q0 + k}, {p0 + k, q0 + D + 1 + k}};
    for (const auto& pt : pts) {
      if (P.evaluate({pt[0], pt[1]}) != Rational(h(pt[0], pt[1]))) {
        throw ConsistencyError("Hilbert polynomial fails validation at (" + std::to_string(pt[0]) +
                               ", " + std::to_string(pt[1]) + ")");
      }
    }
  }
  return P;
}

}  // namespace toricsheaf
