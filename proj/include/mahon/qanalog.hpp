#pragma once

#include <stdexcept>

#include "mahon/unipoly.hpp"

// q-analogues: [n]_q, [n]_q! and the Gaussian binomial coefficients.

namespace mahon {

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline UniPoly q_int(int n) {
  if (n < 0) throw std::domain_error("q_int: n must be >= 0");
  std::vector<Int> c(static_cast<size_t>(n), Int(1));
  return UniPoly(std::move(c));
}

inline UniPoly q_factorial(int n) {
  if (n < 0) throw std::domain_error("q_factorial: n must be >= 0");
  UniPoly r = UniPoly::one();
  for (int i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

// [n choose k]_q = [n]_q! / ([n-k]_q! [k]_q!), computed as the product
// prod_{i=1}^{k} [n-k+i]_q / [i]_q with each division exact in Z[q].
inline UniPoly q_binomial(int n, int k) {
  if (k < 0 || k > n)
    throw std::domain_error("q_binomial: require 0 <= k <= n");
  UniPoly r = UniPoly::one();
  for (int i = 1; i <= k; ++i)
    r = UniPoly::exact_div(r * q_int(n - k + i), q_int(i));
  return r;
}

// Out-of-range pairs give the zero polynomial instead of an error.
inline UniPoly q_binomial_or_zero(int n, int k) {
  if (k < 0 || k > n) return {};
  return q_binomial(n, k);
}

}  // namespace mahon
