#include "lattice_geometry.hpp"

#include "toricsheaf/errors.hpp"
#include "toricsheaf/linalg.hpp"

#include <limits>
#include <map>

namespace toricsheaf::detail {

namespace {

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& current,
            std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    current.push_back(i);
    choose(n, k, i + 1, current, out);
    current.pop_back();
  }
}

Wide to_wide(const Integer& value) {
  if (value > Integer(std::numeric_limits<std::int64_t>::max()) ||
      value < Integer(std::numeric_limits<std::int64_t>::min())) {
    throw InputError("constraint matrix entries too large for exact integer solve");
  }
  return static_cast<Wide>(value.convert_to<std::int64_t>());
}

std::vector<SquareSubsystem> build(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  choose(rows.size(), dim, 0, current, subsets);

  std::vector<SquareSubsystem> out;
  for (auto& subset : subsets) {
    // [A | I] -> [I | A^{-1}] over Q, then scale by |det|.
    RationalMatrix aug(dim, RationalVector(2 * dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) aug[i][j] = rows[subset[i]][j];
      aug[i][dim + i] = 1;
    }
    RationalMatrix original = aug;
    RationalMatrix rref = reduced_row_echelon(std::move(aug), 2 * dim);
    bool invertible = rref.size() == dim;
    for (std::size_t i = 0; invertible && i < dim; ++i) invertible = rref[i][i] == 1;
    if (!invertible) continue;

    // det by fraction-free elimination on the original block.
    RationalMatrix m(dim, RationalVector(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) m[i][j] = original[i][j];
    }
    Rational det = 1;
    for (std::size_t c = 0; c < dim; ++c) {
      std::size_t p = c;
      while (m[p][c] == 0) ++p;
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t r = c + 1; r < dim; ++r) {
        if (m[r][c] == 0) continue;
        Rational f = m[r][c] / m[c][c];
        for (std::size_t k = c; k < dim; ++k) m[r][k] -= f * m[c][k];
      }
    }
    Rational abs_det = det < 0 ? Rational(-det) : det;

    SquareSubsystem sub;
    sub.rows = subset;
    sub.det = to_wide(boost::multiprecision::numerator(abs_det));
    sub.adj.assign(dim, std::vector<Wide>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Rational entry = rref[i][dim + j] * abs_det;
        sub.adj[i][j] = to_wide(boost::multiprecision::numerator(entry));
      }
    }
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

std::shared_ptr<const std::vector<SquareSubsystem>> invertible_subsystems(
    const std::vector<IntVector>& rows, std::size_t dim) {
  thread_local std::map<std::pair<std::vector<IntVector>, std::size_t>,
                        std::shared_ptr<const std::vector<SquareSubsystem>>>
      cache;
  auto key = std::make_pair(rows, dim);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto built = std::make_shared<const std::vector<SquareSubsystem>>(build(rows, dim));
  cache.emplace(std::move(key), built);
  return built;
}

Wide floor_div(Wide num, Wide den) {
  Wide q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Wide ceil_div(Wide num, Wide den) { return -floor_div(-num, den); }

ScaledPoint solve_subsystem(const SquareSubsystem& sub, const std::vector<std::int64_t>& values) {
  const std::size_t dim = sub.rows.size();
  ScaledPoint p;
  p.det = sub.det;
  p.numerators.assign(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    Wide acc = 0;
    for (std::size_t j = 0; j < dim; ++j) acc += sub.adj[i][j] * values[j];
    p.numerators[i] = acc;
  }
  return p;
}

std::int64_t narrow(Wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw InputError("lattice coordinate out of 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace toricsheaf::detail
