#pragma once

#include <utility>
#include <vector>

#include "mahon/bivariate.hpp"
#include "mahon/qanalog.hpp"

// Power series in x truncated at degree K, with exact Z[q] coefficients.
// Both sides of every Carlitz-type identity live here. Denominators are
// expanded factor-wise as geometric series, never by long division.

namespace mahon {

class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cap) : cap_(cap), c_(static_cast<size_t>(cap) + 1) {
    if (cap < 0) throw std::invalid_argument("TruncatedSeries: negative cap");
  }

  static TruncatedSeries one(int cap) {
    TruncatedSeries s(cap);
    s.c_[0] = UniPoly::one();
    return s;
  }

  static TruncatedSeries from_poly(const BivariatePoly& p, int cap) {
    TruncatedSeries s(cap);
    for (int k = 0; k <= cap; ++k) s.c_[static_cast<size_t>(k)] = p.coeff_of_x(k);
    return s;
  }

  int cap() const { return cap_; }
  const UniPoly& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  void set_coeff(int k, UniPoly p) { c_[static_cast<size_t>(k)] = std::move(p); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap_ != b.cap_)
      throw std::invalid_argument("TruncatedSeries: cap mismatch");
    TruncatedSeries r(a.cap_);
    for (int i = 0; i <= a.cap_; ++i) {
      if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= a.cap_; ++j)
        r.c_[static_cast<size_t>(i + j)] +=
            a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // Multiply by 1/(1 - x^a q^b) = sum_t x^{at} q^{bt}; requires a >= 1.
  TruncatedSeries& mul_geometric_inverse(int a, int b) {
    if (a < 1)
      throw std::domain_error("geometric inverse: factor needs x-exponent >= 1");
    std::vector<UniPoly> out(c_.size());
    for (int k = 0; k <= cap_; ++k) {
      UniPoly acc;
      for (int t = 0; a * t <= k; ++t)
        acc += c_[static_cast<size_t>(k - a * t)].shifted(b * t);
      out[static_cast<size_t>(k)] = std::move(acc);
    }
    c_ = std::move(out);
    return *this;
  }

  // prod over factors (1 - x^a q^b) of the geometric inverse, mod x^{K+1}.
  static TruncatedSeries geometric_factor_inverse(
      const std::vector<std::pair<int, int>>& factors, int cap) {
    TruncatedSeries s = one(cap);
    for (auto [a, b] : factors) s.mul_geometric_inverse(a, b);
    return s;
  }

 private:
  int cap_;
  std::vector<UniPoly> c_;  // c_[k] = coefficient of x^k, a polynomial in q
};

// Left side of the multiset identity: coefficient of x^k is
// prod_j [rho_j + k choose k]_q.
inline TruncatedSeries lhs_series(const Composition& rho, int cap) {
  TruncatedSeries s(cap);
  for (int k = 0; k <= cap; ++k) {
    UniPoly c = UniPoly::one();
    for (int j = 1; j <= rho.num_parts(); ++j) c *= q_binomial(rho.part(j) + k, k);
    s.set_coeff(k, std::move(c));
  }
  return s;
}

// Left side of the signed and even-signed identities: coefficient of x^k is
// [k+1]_q^n.
inline TruncatedSeries lhs_series_power(int n, int cap) {
  TruncatedSeries s(cap);
  for (int k = 0; k <= cap; ++k) s.set_coeff(k, q_int(k + 1).pow(n));
  return s;
}

inline TruncatedSeries lhs_series_b(int n, int cap) { return lhs_series_power(n, cap); }
inline TruncatedSeries lhs_series_d(int n, int cap) { return lhs_series_power(n, cap); }

// Denominators of the three Carlitz identities, as (a, b) factor lists for
// (1 - x^a q^b).
inline std::vector<std::pair<int, int>> denominator_multiset(int n) {
  std::vector<std::pair<int, int>> f;
  for (int i = 0; i <= n; ++i) f.emplace_back(1, i);
  return f;
}

inline std::vector<std::pair<int, int>> denominator_b(int n) {
  std::vector<std::pair<int, int>> f{{1, 0}};
  for (int i = 1; i <= n; ++i) f.emplace_back(2, 2 * i);
  return f;
}

inline std::vector<std::pair<int, int>> denominator_d(int n) {
  std::vector<std::pair<int, int>> f{{1, 0}, {1, n}};
  for (int i = 1; i <= n - 1; ++i) f.emplace_back(2, 2 * i);
  return f;
}

}  // namespace mahon
