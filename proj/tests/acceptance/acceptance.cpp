// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include "fixtures.hpp"

#include "toricsheaf/cohomology.hpp"
#include "toricsheaf/errors.hpp"
#include "toricsheaf/hilbert.hpp"
#include "toricsheaf/monomial.hpp"
#include "toricsheaf/polytopes.hpp"
#include "toricsheaf_cli/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace toricsheaf;

namespace {

// Exact comparisons everywhere: every criterion is integer or rational valued.
constexpr std::int64_t kTolerance = 0;
constexpr double kCriterion1Seconds = 60.0;
constexpr std::uint64_t kSampleSeed = 20240611;
constexpr std::uint64_t kPropertySeed = 7;

const std::string kDataDir = TORICSHEAF_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool exact(std::int64_t a, std::int64_t b) { return (a > b ? a - b : b - a) <= kTolerance; }

std::string str(std::int64_t p, std::int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

struct Twists {
  std::vector<std::pair<std::int64_t, std::int64_t>> grid, window, coarse;
  std::vector<std::pair<std::int64_t, std::int64_t>> all() const {
    auto out = grid;
    out.insert(out.end(), window.begin(), window.end());
    out.insert(out.end(), coarse.begin(), coarse.end());
    return out;
  }
};

Twists sample_twists(const EquivariantReflexiveSheaf& E) {
  const SupportRegion omega = regularity_region(E);
  const auto p0 = omega.halves[0].bound, q0 = omega.halves[1].bound;
  const auto D = static_cast<std::int64_t>(E.variety().dim());
  Twists t;
  for (std::int64_t i = 0; i <= D; ++i) {
    for (std::int64_t j = 0; j <= D; ++j) t.grid.emplace_back(p0 + i, q0 + j);
  }
  for (std::int64_t i = 3; i <= 8; ++i) {
    for (std::int64_t j = 3; j <= 8; ++j) t.window.emplace_back(p0 + i, q0 + j);
  }
  for (std::int64_t p = -12; p <= 12; p += 6) {
    for (std::int64_t q = -12; q <= 12; q += 6) t.coarse.emplace_back(p, q);
  }
  return t;
}

Outcome criterion1() {
  Outcome o;
  const std::vector<std::vector<std::int64_t>> expected_h1 = {
      {3, 2, 1, 0, 0, 0, 0, 0, 0},        {3, 2, 1, 0, 0, 0, 0, 0, 0},
      {3, 2, 1, 0, 0, 0, 0, 0, 0},        {3, 2, 1, 0, 0, 0, 0, 0, 0},
      {3, 2, 1, 0, 0, 0, 0, 0, 0},        {3, 2, 1, 0, 0, 0, 0, 0, 0},
      {11, 10, 9, 8, 8, 8, 8, 8, 8},      {24, 24, 24, 24, 24, 24, 24, 24, 24},
      {31, 33, 35, 37, 39, 41, 43, 45, 47}};
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  int code = cli::run({"cohomology-table", "--config", kDataDir + "/final_example_h3.json", "--i",
                       "1", "--p", "2:10", "--q=-4:4", "--format", "csv"},
                      out, err);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (code != 0) {
    o.fail("exit code " + std::to_string(code) + ": " + err.str());
    return o;
  }
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  if (line != "q\\p,2,3,4,5,6,7,8,9,10") o.fail("unexpected header " + line);
  for (std::size_t r = 0; r < expected_h1.size(); ++r) {
    if (!std::getline(lines, line)) {
      o.fail("missing row " + std::to_string(r));
      break;
    }
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    if (cell != std::to_string(4 - static_cast<int>(r))) o.fail("row label " + cell);
    for (std::size_t c = 0; c < expected_h1[r].size(); ++c) {
      std::getline(cells, cell, ',');
      if (!exact(std::stoll(cell), expected_h1[r][c])) {
        o.fail("mismatch at q=" + std::to_string(4 - static_cast<int>(r)) +
               ", p=" + std::to_string(2 + c) + ": got " + cell);
      }
    }
  }
  if (seconds >= kCriterion1Seconds) o.fail("took " + std::to_string(seconds) + " s");
  if (o.pass) o.detail = "9x9 table reproduced in " + std::to_string(seconds) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream out, err;
  int code = cli::run({"bounds", "--config", kDataDir + "/final_example_h3.json"}, out, err);
  if (code != 0) o.fail("exit code " + std::to_string(code));
  if (out.str().find("omega: p >= 5 and q >= -1\n") == std::string::npos) {
    o.fail("bounds output lacks the expected omega line:\n" + out.str());
  }
  const SupportRegion omega = regularity_region(fixtures::final_example());
  if (!(omega.halves[0] == HalfPlane{1, 0, 5} && omega.halves[1] == HalfPlane{0, 1, -1})) {
    o.fail("library omega is " + omega.to_string());
  }
  if (o.pass) o.detail = "omega = {p >= 5, q >= -1}";
  return o;
}

Outcome criterion3(const std::vector<EquivariantReflexiveSheaf>& sample) {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t s = 0; s < sample.size(); ++s) {
    const auto& E = sample[s];
    try {
      const RationalPolynomial P = hilbert_polynomial(E);
      HilbertEvaluator h(E);
      for (auto [p, q] : sample_twists(E).window) {
        ++checked;
        if (P.evaluate({p, q}) != Rational(h(p, q))) {
          o.fail("sheaf " + std::to_string(s) + " at " + str(p, q));
        }
      }
    } catch (const std::exception& e) {
      o.fail("sheaf " + std::to_string(s) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " window points on " +
                         std::to_string(sample.size()) + " sheaves";
  return o;
}

Outcome criterion4(const std::vector<EquivariantReflexiveSheaf>& sample) {
  Outcome o;
  std::size_t checked = 0;
  auto compare = [&](const EquivariantReflexiveSheaf& E, const std::string& label,
                     const std::vector<std::pair<std::int64_t, std::int64_t>>& twists) {
    HilbertEvaluator h(E);
    CohomologyCalculator calc(E);
    for (auto [p, q] : twists) {
      ++checked;
      ClassElement c{{p, q}};
      auto a = h(c), b = calc.h0(c);
      if (!exact(a, b)) {
        o.fail(label + " at " + str(p, q) + ": hilbert " + std::to_string(a) + " vs h0 " +
               std::to_string(b));
      }
    }
  };
  for (std::size_t s = 0; s < sample.size(); ++s) {
    compare(sample[s], "sheaf " + std::to_string(s), sample_twists(sample[s]).all());
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  for (std::int64_t p = -5; p <= 5; ++p) {
    for (std::int64_t q = -5; q <= 5; ++q) box.emplace_back(p, q);
  }
  for (int a = 0; a <= 3; ++a) {
    const ToricVariety X = build_variety(Hirzebruch{a});
    compare(line_bundle(X, IntVector(X.ray_count(), 0)), "O on H" + std::to_string(a), box);
  }
  if (o.pass) o.detail = std::to_string(checked) + " (sheaf, twist) pairs";
  return o;
}

Outcome criterion5(const std::vector<EquivariantReflexiveSheaf>& sample) {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t s = 0; s < sample.size(); ++s) {
    const auto& E = sample[s];
    CohomologyCalculator calc(E);
    for (auto [p, q] : sample_twists(E).all()) {
      ++checked;
      ClassElement c{{p, q}};
      const auto cech = calc.cech(c);
      const auto h0 = calc.h0(c), hn = calc.hn(c), chi = calc.euler(c);
      std::int64_t alt = 0;
      for (std::size_t i = 0; i < cech.size(); ++i) alt += (i % 2 == 0) ? cech[i] : -cech[i];
      const std::string where = "sheaf " + std::to_string(s) + " at " + str(p, q);
      if (!exact(cech[0], h0)) o.fail(where + ": Cech H^0 != h0");
      if (!exact(cech[2], hn)) o.fail(where + ": Cech H^2 != hn");
      if (!exact(alt, chi)) o.fail(where + ": alternating sum != chi");
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (sheaf, twist) pairs";
  return o;
}

Outcome criterion6(const std::vector<EquivariantReflexiveSheaf>& sample) {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t s = 0; s < sample.size(); ++s) {
    const auto& E = sample[s];
    HilbertEvaluator h(E);
    const SupportRegion lower = lower_bound_region(E);
    const auto upper = upper_bound_regions(E);
    for (std::int64_t p = -12; p <= 12; ++p) {
      for (std::int64_t q = -12; q <= 12; ++q) {
        ++checked;
        const bool positive = h(p, q) > 0;
        bool in_upper = false;
        for (const auto& r : upper) in_upper = in_upper || r.contains(p, q);
        if (positive && !lower.contains(p, q)) {
          o.fail("sheaf " + std::to_string(s) + " at " + str(p, q) + ": h > 0 outside L_E");
        }
        if (in_upper && !positive) {
          o.fail("sheaf " + std::to_string(s) + " at " + str(p, q) + ": in U_E but h = 0");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " window points";
  return o;
}

bool brute_system1(const std::vector<int>& a, std::int64_t A, std::int64_t B) {
  std::vector<std::int64_t> x(a.size(), 0);
  while (true) {
    std::int64_t sum = 0, dot = 0;
    for (std::size_t u = 0; u < a.size(); ++u) {
      sum += x[u];
      dot += a[u] * x[u];
    }
    if (sum <= B && dot >= A) return true;
    std::size_t u = 0;
    while (u < x.size() && ++x[u] > B) x[u++] = 0;
    if (u == x.size()) return false;
  }
}

bool brute_metasystem(const std::vector<int>& a, const IntVector& lambda, const IntVector& mu,
                      std::int64_t radius) {
  const std::size_t s = lambda.size() - 1, r = mu.size() - 1;
  IntVector m(s + r, -radius);
  while (true) {
    std::int64_t v0 = 0, w0 = 0;
    bool ok = true;
    for (std::size_t t = 0; t < s; ++t) {
      v0 -= m[t];
      if (m[t] < lambda[t + 1]) ok = false;
    }
    for (std::size_t u = 0; u < r; ++u) {
      v0 += a[u] * m[s + u];
      w0 -= m[s + u];
      if (m[s + u] < mu[u + 1]) ok = false;
    }
    if (ok && v0 >= lambda[0] && w0 >= mu[0]) return true;
    std::size_t k = 0;
    while (k < m.size() && ++m[k] > radius) m[k++] = -radius;
    if (k == m.size()) return false;
  }
}

Outcome criterion7() {
  Outcome o;
  std::size_t cases = 0;
  // System1: every sorted weight list with entries in 0..3, r <= 2.
  std::vector<std::vector<int>> weights;
  for (int x = 0; x <= 3; ++x) {
    weights.push_back({x});
    for (int y = x; y <= 3; ++y) weights.push_back({x, y});
  }
  for (const auto& a : weights) {
    for (std::int64_t A = -4; A <= 4; ++A) {
      for (std::int64_t B = 0; B <= 4; ++B) {
        ++cases;
        auto res = feasible_system1(a, A, B);
        if (res.feasible != brute_system1(a, A, B)) {
          o.fail("system1 disagrees at A=" + std::to_string(A) + ", B=" + std::to_string(B));
        }
        if (res.feasible) {
          const auto& w = *res.witness;
          std::int64_t sum = 0, dot = 0;
          for (std::size_t u = 0; u < a.size(); ++u) {
            sum += w[u];
            dot += a[u] * w[u];
            if (w[u] < 0) o.fail("negative witness entry");
          }
          if (sum > B || dot < A) o.fail("witness does not solve system1");
        }
      }
    }
  }

  // Metasystem with s = r = 1: exhaustive over [-4,4]^4 for each a_1 in 0..3.
  for (int a1 = 0; a1 <= 3; ++a1) {
    for (std::int64_t l0 = -4; l0 <= 4; ++l0)
      for (std::int64_t l1 = -4; l1 <= 4; ++l1)
        for (std::int64_t m0 = -4; m0 <= 4; ++m0)
          for (std::int64_t m1 = -4; m1 <= 4; ++m1) {
            ++cases;
            IntVector lambda{l0, l1}, mu{m0, m1};
            if (feasible_metasystem({a1}, lambda, mu) !=
                brute_metasystem({a1}, lambda, mu, 2 * 4 + 2)) {
              o.fail("metasystem disagrees at a=" + std::to_string(a1) + " lambda=" + str(l0, l1) +
                     " mu=" + str(m0, m1));
            }
          }
  }

  // Larger shapes (s, r) in {(1,2), (2,1), (2,2)}: random tuples in [-4,4].
  std::mt19937_64 rng(kPropertySeed);
  std::uniform_int_distribution<std::int64_t> entry(-4, 4);
  std::uniform_int_distribution<int> weight(0, 3);
  for (auto [s, r] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    const int trials = (s == 2 && r == 2) ? 300 : 600;
    for (int trial = 0; trial < trials; ++trial) {
      ++cases;
      std::vector<int> a;
      for (int u = 0; u < r; ++u) a.push_back(weight(rng));
      std::sort(a.begin(), a.end());
      IntVector lambda, mu;
      for (int t = 0; t <= s; ++t) lambda.push_back(entry(rng));
      for (int u = 0; u <= r; ++u) mu.push_back(entry(rng));
      // A feasible system has a solution with d_t = lambda_t and every c_u in
      // [mu_u, -mu_0 - sum of the other mu], so this box is large enough.
      const std::int64_t radius = static_cast<std::int64_t>(r + 1) * 4 + 2;
      if (feasible_metasystem(a, lambda, mu) != brute_metasystem(a, lambda, mu, radius)) {
        o.fail("metasystem disagrees on a random (s,r)=" + str(s, r) + " instance");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (unsigned t = 0; t <= 8; ++t) {
    const RationalPolynomial F = faulhaber_sum(t);
    Integer direct = 0;
    for (std::int64_t q = 0; q <= 100; ++q) {
      Integer term = 1;
      for (unsigned k = 0; k < t; ++k) term *= q;
      if (t == 0) term = 1;
      direct += term;
      if (F.evaluate({q}) != Rational(direct)) {
        o.fail("faulhaber t=" + std::to_string(t) + " q=" + std::to_string(q));
      }
    }
  }

  std::mt19937_64 rng(kPropertySeed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::size_t polys = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    std::uniform_int_distribution<unsigned> expo(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
      ++polys;
      RationalPolynomial P(k + 1);
      for (int term = 0; term < 5; ++term) {
        RationalPolynomial::Exponent e(k + 1, 0);
        unsigned budget = 3;
        for (auto& x : e) {
          x = std::min(expo(rng), budget);
          budget -= x;
        }
        P.add_term(e, Rational(coeff(rng), 1 + (coeff(rng) + 5) % 3));
      }
      const RationalPolynomial S = simplex_sum(P, k);
      for (std::int64_t q = 0; q <= 12; ++q) {
        Rational direct = 0;
        std::vector<Rational> point(k + 1);
        point[0] = q;
        IntVector e(k, 0);
        while (true) {
          std::int64_t total = 0;
          for (auto x : e) total += x;
          if (total <= q) {
            for (std::size_t i = 0; i < k; ++i) point[i + 1] = e[i];
            direct += P.evaluate(point);
          }
          std::size_t i = 0;
          while (i < k && ++e[i] > q) e[i++] = 0;
          if (i == k) break;
        }
        if (S.evaluate({q}) != direct) {
          o.fail("simplex_sum k=" + std::to_string(k) + " q=" + std::to_string(q));
        }
      }
    }
  }
  if (o.pass) o.detail = "t <= 8, q <= 100; " + std::to_string(polys) + " random polynomials";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const MonomialIdeal I{2, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}}};
  const Cone rho0{{0}, 1}, sigma0{{1, 2}, 0}, sigma2{{0, 1}, 0};
  std::size_t checked = 0;
  for (std::int64_t d1 = -10; d1 <= 10; ++d1) {
    for (std::int64_t d2 = -10; d2 <= 10; ++d2) {
      checked += 3;
      const Character m{d1, d2};
      const int want_rho0 = (-d1 - d2 >= 0) ? 1 : 0;
      const int want_sigma0 = ((d1 == 0 && d2 >= 1) || (d1 >= 1 && d2 >= 0)) ? 1 : 0;
      const int want_sigma2 = (-d1 - d2 >= 0 && d1 >= 0) ? 1 : 0;
      if (sigma_piece_dim(I, rho0, m) != want_rho0) o.fail("rho0 at " + str(d1, d2));
      if (sigma_piece_dim(I, sigma0, m) != want_sigma0) o.fail("sigma0 at " + str(d1, d2));
      if (sigma_piece_dim(I, sigma2, m) != want_sigma2) o.fail("sigma2 at " + str(d1, d2));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (cone, character) checks";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(kPropertySeed + 10);
  std::uniform_int_distribution<int> a_dist(0, 3);
  std::uniform_int_distribution<std::int64_t> twist(-8, 8);
  std::size_t triples = 0;
  auto run = [&](const std::function<ToricVariety()>& make, const std::string& label) {
    for (int trial = 0; trial < 200; ++trial) {
      ++triples;
      const ToricVariety X = make();
      const auto E = fixtures::random_sheaf(X, rng);
      MultiIndex idx(X.ray_count());
      std::uniform_int_distribution<std::size_t> pick(1, E.rank());
      for (auto& v : idx) v = pick(rng);
      const std::int64_t p = twist(rng), q = twist(rng);
      const auto sliced = assemble_slices(E, idx, p, q);
      const auto direct = psi_points(omega_system(E, idx, ClassElement{{p, q}})).size();
      if (sliced != direct) {
        o.fail(label + " trial " + std::to_string(trial) + ": " + std::to_string(sliced) +
               " vs " + std::to_string(direct));
      }
    }
  };
  run([&] { return build_variety(Hirzebruch{a_dist(rng)}); }, "Hirzebruch");
  run([] { return build_variety(SplitBundle{2, {1, 2}}); }, "SplitBundle(2,(1,2))");
  if (o.pass) o.detail = std::to_string(triples) + " triples";
  return o;
}

}  // namespace

int main() {
  const auto sample = fixtures::acceptance_sample(kSampleSeed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"final-example H^1 table", criterion1},
      {"regularity region", criterion2},
      {"Hilbert polynomial on validation window", [&] { return criterion3(sample); }},
      {"hilbert_function == h0_dim", [&] { return criterion4(sample); }},
      {"Cech consistency", [&] { return criterion5(sample); }},
      {"support sandwich", [&] { return criterion6(sample); }},
      {"feasibility lemmas vs brute force", criterion7},
      {"Faulhaber and simplex sums", criterion8},
      {"monomial ideal sigma-pieces", criterion9},
      {"slicing identity", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " ("
              << criteria[i].first << "): " << o.detail << " ["
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures;
}
