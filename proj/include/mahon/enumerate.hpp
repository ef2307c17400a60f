#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mahon/core.hpp"

// Exhaustive enumerators for every family the identities sum over.
// All streams are emitted in lexicographic order on windows, so repeated
// runs and golden files are reproducible. Enumerators are pure and
// restartable; caps are configuration, not constants.

namespace mahon {

struct EnumCaps {
  int sn = 10;        // S_n, quotients and descent classes
  int multiset = 10;  // total letters N of a multiset word
  int bn = 8;         // B_n, D_n, T_n
};

namespace detail {

inline void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > cap)
    throw resource_limit_error(std::string(what) + ": size " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
}

// Recursively emit quotient windows: each block ascending, blocks filled
// with lexicographically increasing combinations of the remaining values.
template <class F>
void quotient_rec(const std::vector<int>& blocks, size_t bi, std::vector<int>& pool,
                  std::vector<int>& window, F& f) {
  if (bi == blocks.size()) {
    f(Permutation(window, unchecked));
    return;
  }
  int k = blocks[bi];
  int m = static_cast<int>(pool.size());
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<int> rest;
    rest.reserve(pool.size() - static_cast<size_t>(k));
    size_t w0 = window.size();
    {
      size_t t = 0;
      for (int i = 0; i < m; ++i) {
        if (t < idx.size() && idx[t] == i) {
          window.push_back(pool[static_cast<size_t>(i)]);
          ++t;
        } else {
          rest.push_back(pool[static_cast<size_t>(i)]);
        }
      }
    }
    quotient_rec(blocks, bi + 1, rest, window, f);
    window.resize(w0);
    // next combination in lex order
    int j = k - 1;
    while (j >= 0 && idx[static_cast<size_t>(j)] == m - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<size_t>(j)];
    for (int t = j + 1; t < k; ++t)
      idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
  }
}

// Emit signed windows in lex order by choosing entries smallest-first from
// the unused absolute values. keep(neg_count) gates leaf emission.
template <class F, class Keep>
void signed_rec(int n, std::vector<char>& used, std::vector<int>& window,
                int negs, F& f, Keep keep) {
  if (static_cast<int>(window.size()) == n) {
    if (keep(negs)) f(SignedPermutation(window, unchecked));
    return;
  }
  for (int v = -n; v <= n; ++v) {
    if (v == 0) continue;
    int a = v < 0 ? -v : v;
    if (used[static_cast<size_t>(a) - 1]) continue;
    used[static_cast<size_t>(a) - 1] = 1;
    window.push_back(v);
    signed_rec(n, used, window, negs + (v < 0 ? 1 : 0), f, keep);
    window.pop_back();
    used[static_cast<size_t>(a) - 1] = 0;
  }
}

}  // namespace detail

// S_n in lexicographic window order; n! elements.
template <class F>
void for_each_sn(int n, F&& f, const EnumCaps& caps = {}) {
  detail::check_cap(n, caps.sn, "enumerate_sn");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(Permutation(w, unchecked));
  } while (std::next_permutation(w.begin(), w.end()));
}

// Words of S_rho in lexicographic order; N!/prod(rho_i!) elements.
template <class F>
void for_each_multiset(const Composition& rho, F&& f, const EnumCaps& caps = {}) {
  detail::check_cap(rho.total(), caps.multiset, "enumerate_multiset");
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(rho.total()));
  for (int i = 1; i <= rho.num_parts(); ++i)
    letters.insert(letters.end(), static_cast<size_t>(rho.part(i)), i);
  do {
    f(MultisetWord(letters, rho, unchecked));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

// The quotient S^R = {w in S_N | Des(w) subset of R}, lex window order.
template <class F>
void for_each_quotient(int n, const DescentSubset& r, F&& f,
                       const EnumCaps& caps = {}) {
  detail::check_cap(n, caps.sn, "enumerate_quotient");
  if (n == 0) {
    f(Permutation());
    return;
  }
  Composition rho = subset_to_composition(n, r);
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> window;
  window.reserve(static_cast<size_t>(n));
  detail::quotient_rec(rho.parts(), 0, pool, window, f);
}

// Inverse descent class {w | Des(w^{-1}) subset of R}, lex on w itself.
template <class F>
void for_each_inverse_descent_class(int n, const DescentSubset& r, F&& f,
                                    const EnumCaps& caps = {}) {
  detail::check_cap(n, caps.sn, "enumerate_inverse_descent_class");
  if (r.max() > std::max(0, n - 1))
    throw std::invalid_argument("inverse_descent_class: R exceeds [N-1]");
  for_each_sn(
      n,
      [&](const Permutation& p) {
        for (int d : descent_positions(p.inverse().window()))
          if (!r.contains(d)) return;
        f(p);
      },
      caps);
}

// Exact descent class {w | Des(w) = J}, lex window order.
template <class F>
void for_each_descent_class(int n, const DescentSubset& j, F&& f,
                            const EnumCaps& caps = {}) {
  detail::check_cap(n, caps.sn, "enumerate_descent_class");
  if (j.max() > std::max(0, n - 1))
    throw std::invalid_argument("descent_class: J exceeds [N-1]");
  for_each_sn(
      n,
      [&](const Permutation& p) {
        if (DescentSubset(descent_positions(p.window())) == j) f(p);
      },
      caps);
}

// B_n in lex window order; 2^n n! elements.
template <class F>
void for_each_bn(int n, F&& f, const EnumCaps& caps = {}) {
  detail::check_cap(n, caps.bn, "enumerate_bn");
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<int> window;
  window.reserve(static_cast<size_t>(n));
  detail::signed_rec(n, used, window, 0, f, [](int) { return true; });
}

// D_n = {sigma in B_n | neg(sigma) even}; 2^{n-1} n! elements for n >= 1.
template <class F>
void for_each_dn(int n, F&& f, const EnumCaps& caps = {}) {
  detail::check_cap(n, caps.bn, "enumerate_dn");
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<int> window;
  window.reserve(static_cast<size_t>(n));
  detail::signed_rec(n, used, window, 0, f, [](int negs) { return negs % 2 == 0; });
}

// T_n = {alpha in D_n | des(alpha) = 0}: ascending windows with an even
// number of negative entries; 2^{n-1} elements for n >= 1.
template <class F>
void for_each_tn(int n, F&& f, const EnumCaps& caps = {}) {
  detail::check_cap(n, caps.bn, "enumerate_tn");
  std::vector<std::vector<int>> windows;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (__builtin_popcountl(mask) % 2 != 0) continue;
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v)
      w.push_back((mask >> (v - 1)) & 1 ? -v : v);
    std::sort(w.begin(), w.end());
    windows.push_back(std::move(w));
  }
  std::sort(windows.begin(), windows.end());
  for (auto& w : windows) f(SignedPermutation(std::move(w), unchecked));
}

// Materialized variants.

inline std::vector<Permutation> all_sn(int n, const EnumCaps& caps = {}) {
  std::vector<Permutation> out;
  for_each_sn(n, [&](const Permutation& p) { out.push_back(p); }, caps);
  return out;
}

inline std::vector<MultisetWord> all_multiset(const Composition& rho,
                                              const EnumCaps& caps = {}) {
  std::vector<MultisetWord> out;
  for_each_multiset(rho, [&](const MultisetWord& w) { out.push_back(w); }, caps);
  return out;
}

inline std::vector<Permutation> all_quotient(int n, const DescentSubset& r,
                                             const EnumCaps& caps = {}) {
  std::vector<Permutation> out;
  for_each_quotient(n, r, [&](const Permutation& p) { out.push_back(p); }, caps);
  return out;
}

inline std::vector<Permutation> all_inverse_descent_class(
    int n, const DescentSubset& r, const EnumCaps& caps = {}) {
  std::vector<Permutation> out;
  for_each_inverse_descent_class(n, r, [&](const Permutation& p) { out.push_back(p); },
                                 caps);
  return out;
}

inline std::vector<Permutation> all_descent_class(int n, const DescentSubset& j,
                                                  const EnumCaps& caps = {}) {
  std::vector<Permutation> out;
  for_each_descent_class(n, j, [&](const Permutation& p) { out.push_back(p); }, caps);
  return out;
}

inline std::vector<SignedPermutation> all_bn(int n, const EnumCaps& caps = {}) {
  std::vector<SignedPermutation> out;
  for_each_bn(n, [&](const SignedPermutation& s) { out.push_back(s); }, caps);
  return out;
}

inline std::vector<SignedPermutation> all_dn(int n, const EnumCaps& caps = {}) {
  std::vector<SignedPermutation> out;
  for_each_dn(n, [&](const SignedPermutation& s) { out.push_back(s); }, caps);
  return out;
}

inline std::vector<SignedPermutation> all_tn(int n, const EnumCaps& caps = {}) {
  std::vector<SignedPermutation> out;
  for_each_tn(n, [&](const SignedPermutation& s) { out.push_back(s); }, caps);
  return out;
}

// All compositions of n in lex order on part sequences.
inline std::vector<Composition> all_compositions(int n) {
  if (n < 1) throw std::invalid_argument("all_compositions: n must be >= 1");
  std::vector<Composition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      parts.push_back(p);
      self(self, rest - p);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace mahon
