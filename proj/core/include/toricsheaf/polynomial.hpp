#pragma once

#include "toricsheaf/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace toricsheaf {

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored.
class RationalPolynomial {
 public:
  using Exponent = std::vector<unsigned>;

  explicit RationalPolynomial(std::size_t variables = 1) : vars_(variables) {}
  static RationalPolynomial constant(std::size_t variables, const Rational& c);
  static RationalPolynomial variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Rational evaluate(const std::vector<Rational>& point) const;
  Rational evaluate(std::initializer_list<std::int64_t> point) const;

  // Replace variable `var` by g (same variable count).
  RationalPolynomial substitute(std::size_t var, const RationalPolynomial& g) const;
  // Coefficient of var^power, as a polynomial in the remaining variables
  // (variable count unchanged; var no longer occurs).
  RationalPolynomial coefficient_of(std::size_t var, unsigned power) const;
  // Same polynomial viewed in `variables` variables; dropped ones must not occur.
  RationalPolynomial resized(std::size_t variables) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  // Terms by descending total degree, then lexicographically descending
  // exponents, so p^2 precedes p*q precedes q^2. "0" for the zero polynomial.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t vars_;
  std::map<Exponent, Rational> terms_;
};

RationalPolynomial pow(const RationalPolynomial& base, unsigned exponent);

}  // namespace toricsheaf
