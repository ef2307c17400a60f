#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "mahon/core.hpp"

// Structure-preserving maps: standardization and its inverse, minimal coset
// representatives, the sign decomposition of B_n, the T_n x S_n decomposition
// of D_n, and the block-swap involution phi on two-block quotients.

namespace mahon {

// std_rho(w): replace the rho_1 occurrences of letter 1, left to right, by
// 1..rho_1, the occurrences of letter 2 by rho_1+1..rho_1+rho_2, and so on.
// Preserves the descent set exactly.
inline Permutation standardize(const MultisetWord& w) {
  const Composition& rho = w.rho();
  int n = w.size();
  std::vector<int> next(static_cast<size_t>(rho.num_parts()));
  int base = 1;
  for (int k = 1; k <= rho.num_parts(); ++k) {
    next[static_cast<size_t>(k) - 1] = base;
    base += rho.part(k);
  }
  std::vector<int> win(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    win[static_cast<size_t>(i) - 1] = next[static_cast<size_t>(w.letter(i)) - 1]++;
  return Permutation(std::move(win), unchecked);
}

// istd(w) = (std_rho(w))^{-1}; a bijection S_rho -> S^R that preserves the
// inversion number.
inline Permutation istd(const MultisetWord& w) { return standardize(w).inverse(); }

// The unique minimal coset representative sigma^{R^c}: sort the window
// ascending within each block cut out by R. Identity exactly on S^R.
inline Permutation min_coset_rep(const Permutation& p, const DescentSubset& r) {
  int n = p.size();
  if (r.max() > std::max(0, n - 1))
    throw std::invalid_argument("min_coset_rep: R exceeds [N-1]");
  std::vector<int> w = p.window();
  int prev = 0;
  auto cuts = r.positions();
  cuts.push_back(n);
  for (int c : cuts) {
    std::sort(w.begin() + prev, w.begin() + c);
    prev = c;
  }
  return Permutation(std::move(w), unchecked);
}

inline bool in_quotient(const Permutation& p, const DescentSubset& r) {
  for (int d : descent_positions(p.window()))
    if (!r.contains(d)) return false;
  return true;
}

namespace detail {

inline void check_phi_domain(const Permutation& w, int r) {
  if (r < 1 || r % 2 == 0)
    throw std::domain_error("phi: r must be odd and positive");
  if (w.size() != 2 * r)
    throw std::domain_error("phi: carrier must lie in S_{2r}");
  if (!in_quotient(w, DescentSubset({r})))
    throw std::domain_error("phi: carrier is not in the quotient S^{{r}}");
}

}  // namespace detail

// M_w: the i in [r] for which i and i+r are not in the same ascending block
// of w in S^{{r}}. Nonempty whenever r is odd.
inline std::vector<int> m_set(const Permutation& w, int r) {
  detail::check_phi_domain(w, r);
  Permutation inv = w.inverse();
  std::vector<int> m;
  for (int i = 1; i <= r; ++i)
    if ((inv(i) <= r) != (inv(i + r) <= r)) m.push_back(i);
  return m;
}

// phi(w) = ((iota, iota+r) w)^{R^c} with iota = min M_w: swap the values
// iota and iota+r in the window, then re-sort the two blocks. An involution
// with |Delta length| = r and |Delta stc| = 1.
inline Permutation phi(const Permutation& w, int r) {
  std::vector<int> m = m_set(w, r);
  if (m.empty())
    throw std::domain_error("phi: M_w is empty (r even?)");
  int iota = m.front();
  Permutation inv = w.inverse();
  std::vector<int> win = w.window();
  std::swap(win[static_cast<size_t>(inv(iota)) - 1],
            win[static_cast<size_t>(inv(iota + r)) - 1]);
  return min_coset_rep(Permutation(std::move(win), unchecked), DescentSubset({r}));
}

// sy(sigma): the ordinary permutation whose entries are in the same relative
// positions as sigma's window values.
inline Permutation sy(const SignedPermutation& s) {
  int n = s.size();
  std::vector<int> sorted = s.window();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> tau(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s(i));
    tau[static_cast<size_t>(i) - 1] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(tau), unchecked);
}

// J(sigma) = {sigma(j) | j in Neg(sigma)}: the set of negative window values.
inline std::vector<int> signs(const SignedPermutation& s) {
  std::vector<int> j;
  for (int v : s.window())
    if (v < 0) j.push_back(v);
  std::sort(j.begin(), j.end());
  return j;
}

// Inverse of the pair (sy, signs): negate the values |j| for j in J, sort the
// resulting 2n-alphabet values, and place them by tau's relative order.
inline SignedPermutation assemble_b(const Permutation& tau, const std::vector<int>& j) {
  int n = tau.size();
  std::set<int> negated;
  for (int v : j) {
    if (v >= 0)
      throw std::domain_error("assemble_b: J must contain negative values");
    if (-v < 1 || -v > n)
      throw std::domain_error("assemble_b: |J| value out of [n]");
    if (!negated.insert(-v).second)
      throw std::domain_error("assemble_b: duplicate value in J");
  }
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v)
    values.push_back(negated.count(v) ? -v : v);
  std::sort(values.begin(), values.end());
  std::vector<int> win(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    win[static_cast<size_t>(i) - 1] = values[static_cast<size_t>(tau(i)) - 1];
  return SignedPermutation(std::move(win), unchecked);
}

// The unique factorization sigma = alpha . tau with alpha in T_n (ascending,
// even sign count) and tau in S_n: alpha is the sorted window, tau the rank
// permutation sy(sigma).
inline std::pair<SignedPermutation, Permutation> d_decompose(const SignedPermutation& s) {
  if (!s.in_dn())
    throw std::domain_error("d_decompose: carrier is not in D_n");
  std::vector<int> sorted = s.window();
  std::sort(sorted.begin(), sorted.end());
  return {SignedPermutation(std::move(sorted), unchecked), sy(s)};
}

}  // namespace mahon
