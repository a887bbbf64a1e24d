#include "toricsheaf/linalg.hpp"

#include "toricsheaf/errors.hpp"

#include <string>
#include <utility>

namespace toricsheaf {

RationalMatrix reduced_row_echelon(RationalMatrix rows, std::size_t cols) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    RationalVector& piv = rows[pivot_row];
    if (piv[col] != 1) {
      Rational inv = 1 / piv[col];
      for (std::size_t k = col; k < cols; ++k) {
        if (piv[k] != 0) piv[k] *= inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t k = col; k < cols; ++k) {
        if (piv[k] != 0) rows[r][k] -= factor * piv[k];
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(RationalMatrix rows, std::size_t cols) {
  return reduced_row_echelon(std::move(rows), cols).size();
}

RationalMatrix nullspace(const RationalMatrix& rows, std::size_t cols) {
  RationalMatrix rref = reduced_row_echelon(rows, cols);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : rref) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < rref.size(); ++r) v[pivots[r]] = -rref[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  RationalMatrix rref = reduced_row_echelon(std::move(a), n + 1);
  if (rref.size() != n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rref[i][i] != 1) return std::nullopt;  // pivot landed in the augmented column
    x[i] = rref[i][n];
  }
  return x;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  RationalMatrix id(ambient_dim, RationalVector(ambient_dim));
  for (std::size_t i = 0; i < ambient_dim; ++i) id[i][i] = 1;
  return Subspace(ambient_dim, std::move(id));
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) return false;
  RationalMatrix rows = basis_;
  rows.push_back(v);
  return rank(std::move(rows), ambient_) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

RationalMatrix Subspace::annihilator() const { return nullspace(basis_, ambient_); }

Subspace span(std::span<const RationalVector> vectors, std::size_t ambient_dim) {
  RationalMatrix rows;
  rows.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) {
      throw InputError("vector " + std::to_string(i) + " has length " +
                       std::to_string(vectors[i].size()) + ", expected " +
                       std::to_string(ambient_dim));
    }
    rows.push_back(vectors[i]);
  }
  return Subspace(ambient_dim, reduced_row_echelon(std::move(rows), ambient_dim));
}

namespace {

std::size_t common_ambient(std::span<const Subspace> subspaces, const char* op) {
  if (subspaces.empty()) throw InputError(std::string(op) + " of an empty list");
  const std::size_t ambient = subspaces.front().ambient_dim();
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != ambient) {
      throw InputError(std::string(op) + ": ambient dimensions " + std::to_string(ambient) +
                       " and " + std::to_string(s.ambient_dim()) + " differ");
    }
  }
  return ambient;
}

}  // namespace

Subspace intersect(std::span<const Subspace> subspaces) {
  const std::size_t ambient = common_ambient(subspaces, "intersect");
  // The intersection is cut out by the union of the dual constraints.
  RationalMatrix constraints;
  for (const auto& s : subspaces) {
    if (s.is_full()) continue;
    if (s.is_zero()) return Subspace::zero(ambient);
    for (auto& w : s.annihilator()) constraints.push_back(std::move(w));
  }
  if (constraints.empty()) return Subspace::full(ambient);
  RationalMatrix kernel = nullspace(constraints, ambient);
  return span(kernel, ambient);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const Subspace both[] = {a, b};
  return intersect(both);
}

Subspace sum(std::span<const Subspace> subspaces) {
  const std::size_t ambient = common_ambient(subspaces, "sum");
  RationalMatrix rows;
  for (const auto& s : subspaces) {
    if (s.is_full()) return s;
    rows.insert(rows.end(), s.basis().begin(), s.basis().end());
  }
  return span(rows, ambient);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  const Subspace both[] = {a, b};
  return sum(both);
}

}  // namespace toricsheaf
