#include "toricsheaf/polynomial.hpp"

#include "toricsheaf/errors.hpp"

#include <algorithm>
#include <numeric>

namespace toricsheaf {

RationalPolynomial RationalPolynomial::constant(std::size_t variables, const Rational& c) {
  RationalPolynomial p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

RationalPolynomial RationalPolynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw InputError("variable index out of range");
  RationalPolynomial p(variables);
  Exponent e(variables, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int RationalPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return d;
}

int RationalPolynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.at(var)));
  return d;
}

Rational RationalPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RationalPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_) throw InputError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational RationalPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_) throw InputError("evaluation point has the wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Rational RationalPolynomial::evaluate(std::initializer_list<std::int64_t> point) const {
  std::vector<Rational> pt;
  for (auto v : point) pt.emplace_back(v);
  return evaluate(pt);
}

RationalPolynomial RationalPolynomial::substitute(std::size_t var,
                                                  const RationalPolynomial& g) const {
  if (g.vars_ != vars_) throw InputError("substitution needs matching variable counts");
  RationalPolynomial out(vars_);
  std::vector<RationalPolynomial> powers{constant(vars_, 1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * g);
    RationalPolynomial mono(vars_);
    Exponent rest = e;
    rest[var] = 0;
    mono.add_term(rest, c);
    out += mono * powers[e[var]];
  }
  return out;
}

RationalPolynomial RationalPolynomial::coefficient_of(std::size_t var, unsigned power) const {
  RationalPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponent rest = e;
    rest[var] = 0;
    out.add_term(rest, c);
  }
  return out;
}

RationalPolynomial RationalPolynomial::resized(std::size_t variables) const {
  RationalPolynomial out(variables);
  for (const auto& [e, c] : terms_) {
    Exponent f(variables, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i < variables) {
        f[i] = e[i];
      } else if (e[i] != 0) {
        throw InputError("resizing would drop a variable that occurs");
      }
    }
    out.add_term(f, c);
  }
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.vars_ != vars_) throw InputError("adding polynomials with different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.vars_ != vars_) throw InputError("subtracting polynomials with different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.vars_ != b.vars_) throw InputError("multiplying polynomials with different variable counts");
  RationalPolynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      RationalPolynomial::Exponent e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

RationalPolynomial pow(const RationalPolynomial& base, unsigned exponent) {
  RationalPolynomial out = RationalPolynomial::constant(base.variables(), 1);
  for (unsigned k = 0; k < exponent; ++k) out = out * base;
  return out;
}

std::string RationalPolynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != vars_) throw InputError("need one name per variable");
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    auto dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
    auto dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += toricsheaf::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += toricsheaf::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace toricsheaf
