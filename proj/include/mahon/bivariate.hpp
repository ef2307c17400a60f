#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mahon/unipoly.hpp"

// Exact bivariate polynomials in x and q over arbitrary-precision integers.
// Canonical form stores no zero coefficients and orders monomials
// lexicographically by (x-exponent, q-exponent), so equality is structural.

namespace mahon {

struct Monomial {
  int x = 0;
  int q = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class BivariatePoly;

// Non-divisibility in Z[x,q]; carries the reduced remainder at the point the
// division stopped.
class divisibility_error : public std::runtime_error {
 public:
  divisibility_error(const std::string& msg, BivariatePoly remainder);
  const BivariatePoly& remainder() const;

 private:
  std::shared_ptr<BivariatePoly> remainder_;  // shared so the error is copyable
};

class BivariatePoly {
 public:
  BivariatePoly() = default;  // zero
  static BivariatePoly constant(Int c) { return monomial(std::move(c), 0, 0); }
  static BivariatePoly one() { return constant(1); }
  static BivariatePoly monomial(Int c, int xe, int qe) {
    BivariatePoly p;
    p.add_term(xe, qe, c);
    return p;
  }
  enum class Var { x, q };
  static BivariatePoly from_univariate(const UniPoly& u, Var v) {
    BivariatePoly p;
    for (int k = 0; k <= u.degree(); ++k) {
      if (v == Var::x)
        p.add_term(k, 0, u.coeff(k));
      else
        p.add_term(0, k, u.coeff(k));
    }
    return p;
  }

  void add_term(int xe, int qe, const Int& c) {
    if (xe < 0 || qe < 0)
      throw std::invalid_argument("BivariatePoly: negative exponent");
    if (c == 0) return;
    Monomial m{xe, qe};
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  int x_degree() const {  // -1 for zero
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }
  int q_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.q);
    return d;
  }
  const Int& coeff(int xe, int qe) const {
    static const Int zero{0};
    auto it = terms_.find(Monomial{xe, qe});
    return it == terms_.end() ? zero : it->second;
  }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m.x, m.q, c);
    return r;
  }
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m.x, m.q, -c);
    return r;
  }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(ma.x + mb.x, ma.q + mb.q, ca * cb);
    return r;
  }
  BivariatePoly& operator+=(const BivariatePoly& b) { return *this = *this + b; }
  BivariatePoly& operator-=(const BivariatePoly& b) { return *this = *this - b; }
  BivariatePoly& operator*=(const BivariatePoly& b) { return *this = *this * b; }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  // Coefficient of x^k as a polynomial in q.
  UniPoly coeff_of_x(int k) const {
    std::vector<Int> c;
    for (const auto& [m, co] : terms_) {
      if (m.x != k) continue;
      if (static_cast<int>(c.size()) <= m.q) c.resize(static_cast<size_t>(m.q) + 1);
      c[static_cast<size_t>(m.q)] = co;
    }
    return UniPoly(std::move(c));
  }

  // Specializations; the result is univariate in the surviving variable.
  UniPoly eval_q1() const {
    std::vector<Int> c;
    for (const auto& [m, co] : terms_) {
      if (static_cast<int>(c.size()) <= m.x) c.resize(static_cast<size_t>(m.x) + 1);
      c[static_cast<size_t>(m.x)] += co;
    }
    return UniPoly(std::move(c));
  }
  UniPoly eval_x1() const {
    std::vector<Int> c;
    for (const auto& [m, co] : terms_) {
      if (static_cast<int>(c.size()) <= m.q) c.resize(static_cast<size_t>(m.q) + 1);
      c[static_cast<size_t>(m.q)] += co;
    }
    return UniPoly(std::move(c));
  }
  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  // Exact division in Z[x,q], treating both sides as polynomials in x with
  // coefficients in Z[q]. Every quotient step must divide exactly in Z[q]
  // and the remainder must vanish; otherwise divisibility_error carries the
  // working remainder.
  BivariatePoly exact_div(const BivariatePoly& g) const;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      Int a = c;
      if (!out.empty()) {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      } else if (a < 0) {
        out += "-";
        a = -a;
      }
      std::string mono;
      if (m.x > 0) {
        mono += "x";
        if (m.x > 1) mono += "^" + std::to_string(m.x);
      }
      if (m.q > 0) {
        if (!mono.empty()) mono += "*";
        mono += "q";
        if (m.q > 1) mono += "^" + std::to_string(m.q);
      }
      if (mono.empty()) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  std::map<Monomial, Int> terms_;
};

inline divisibility_error::divisibility_error(const std::string& msg,
                                              BivariatePoly remainder)
    : std::runtime_error(msg),
      remainder_(std::make_shared<BivariatePoly>(std::move(remainder))) {}

inline const BivariatePoly& divisibility_error::remainder() const {
  return *remainder_;
}

inline BivariatePoly BivariatePoly::exact_div(const BivariatePoly& g) const {
  if (g.is_zero())
    throw std::invalid_argument("BivariatePoly: division by zero");
  int dg = g.x_degree();
  UniPoly glead = g.coeff_of_x(dg);
  std::vector<std::pair<int, UniPoly>> gcoeffs;  // (x-exponent, q-coefficient)
  for (int k = 0; k <= dg; ++k) {
    UniPoly c = g.coeff_of_x(k);
    if (!c.is_zero()) gcoeffs.emplace_back(k, std::move(c));
  }

  BivariatePoly r = *this;
  BivariatePoly q;
  while (!r.is_zero() && r.x_degree() >= dg) {
    int dr = r.x_degree();
    UniPoly rlead = r.coeff_of_x(dr);
    auto t = UniPoly::try_exact_div(rlead, glead);
    if (!t)
      throw divisibility_error("BivariatePoly: leading q-coefficient not divisible",
                               r);
    int shift = dr - dg;
    for (int k = 0; k <= t->degree(); ++k)
      q.add_term(shift, k, t->coeff(k));
    // r -= t * x^shift * g
    for (const auto& [xe, gc] : gcoeffs) {
      UniPoly prod = *t * gc;
      for (int k = 0; k <= prod.degree(); ++k)
        r.add_term(xe + shift, k, -prod.coeff(k));
    }
  }
  if (!r.is_zero())
    throw divisibility_error("BivariatePoly: nonzero remainder", r);
  return q;
}

}  // namespace mahon
