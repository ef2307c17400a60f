#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Dense univariate polynomials with arbitrary-precision integer
// coefficients. Used for q-analogues, series coefficients, cyclotomic
// polynomials, and specializations of bivariate polynomials.

namespace mahon {

using Int = boost::multiprecision::cpp_int;

class UniPoly {
 public:
  UniPoly() = default;  // zero
  UniPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) c_.emplace_back(c);
    normalize();
  }
  explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static UniPoly constant(Int v) {
    UniPoly p;
    p.c_.push_back(std::move(v));
    p.normalize();
    return p;
  }
  static UniPoly one() { return constant(1); }
  static UniPoly monomial(Int coeff, int deg) {
    UniPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<size_t>(deg) + 1, Int(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Int& coeff(int k) const {
    static const Int zero{0};
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)]
                                                       : zero;
  }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const { return c_.back(); }  // requires nonzero

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.normalize();
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const Int& s) {
    UniPoly r = a;
    for (auto& c : r.c_) c *= s;
    r.normalize();
    return r;
  }
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Multiply by t^k.
  UniPoly shifted(int k) const {
    if (is_zero()) return {};
    UniPoly r;
    r.c_.assign(static_cast<size_t>(k), Int(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  UniPoly derivative() const {
    UniPoly r;
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Int(i));
    r.normalize();
    return r;
  }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& c : c_) s += c;
    return s;
  }

  UniPoly pow(int e) const {
    UniPoly r = one();
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Quotient of the classical division in Z[t] when both the remainder and
  // every leading-coefficient division are exact; nullopt means f is not
  // divisible by g in the integer polynomial ring.
  static std::optional<UniPoly> try_exact_div(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("UniPoly: division by zero");
    UniPoly r = f;
    UniPoly q;
    q.c_.assign(f.c_.size(), Int(0));
    while (!r.is_zero() && r.degree() >= g.degree()) {
      Int lead = r.leading();
      if (lead % g.leading() != 0) return std::nullopt;
      Int t = lead / g.leading();
      int dd = r.degree() - g.degree();
      q.c_[static_cast<size_t>(dd)] = t;
      r -= (g * t).shifted(dd);
    }
    if (!r.is_zero()) return std::nullopt;
    q.normalize();
    return q;
  }

  static UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
    auto q = try_exact_div(f, g);
    if (!q)
      throw std::domain_error("UniPoly: not divisible: (" + f.str() + ") / (" +
                              g.str() + ")");
    return *q;
  }

  std::string str(const char* var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Int a = c_[i];
      if (!out.empty()) {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      } else if (a < 0) {
        out += "-";
        a = -a;
      }
      if (i == 0) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;  // c_[k] is the coefficient of t^k; no trailing zeros
};

}  // namespace mahon
