#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Core value types: permutations in one-line notation, signed permutations
// in window notation, compositions, multiset words, and descent subsets.
// All types are immutable after construction and validate their invariants.

namespace mahon {

// Thrown when an enumeration request exceeds its configured cap.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tag for constructors that skip invariant validation. Only for callers
// (enumerators, bijections) that construct windows known to be valid.
struct unchecked_t {};
inline constexpr unchecked_t unchecked{};

namespace detail {

inline bool is_permutation_window(const std::vector<int>& w) {
  std::vector<char> seen(w.size(), 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

inline bool is_signed_window(const std::vector<int>& w) {
  std::vector<char> seen(w.size(), 0);
  for (int v : w) {
    int a = std::abs(v);
    if (a < 1 || a > static_cast<int>(w.size()) || seen[a - 1]) return false;
    seen[a - 1] = 1;
  }
  return true;
}

}  // namespace detail

// A permutation of [n] in one-line notation; window values are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> window) : win_(std::move(window)) {
    if (!detail::is_permutation_window(win_))
      throw std::invalid_argument("Permutation: window is not a bijection of [n]");
  }
  Permutation(std::vector<int> window, unchecked_t) : win_(std::move(window)) {}

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), unchecked);
  }

  int size() const { return static_cast<int>(win_.size()); }
  // sigma(i) with 1 <= i <= n
  int operator()(int i) const { return win_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& window() const { return win_; }

  Permutation inverse() const {
    std::vector<int> inv(win_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(win_[i - 1]) - 1] = i;
    return Permutation(std::move(inv), unchecked);
  }

  // (sigma . tau)(i) = sigma(tau(i))
  Permutation compose(const Permutation& tau) const {
    if (tau.size() != size())
      throw std::invalid_argument("Permutation::compose: size mismatch");
    std::vector<int> w(win_.size());
    for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(tau(i));
    return Permutation(std::move(w), unchecked);
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.win_ <=> b.win_;
  }

 private:
  std::vector<int> win_;
};

// An element of the hyperoctahedral group B_n: window of nonzero integers
// whose absolute values form a permutation of [n]. sigma(-i) = -sigma(i).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window) : win_(std::move(window)) {
    if (!detail::is_signed_window(win_))
      throw std::invalid_argument(
          "SignedPermutation: |window| is not a permutation of [n]");
  }
  SignedPermutation(std::vector<int> window, unchecked_t) : win_(std::move(window)) {}

  static SignedPermutation identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w), unchecked);
  }
  static SignedPermutation from_permutation(const Permutation& p) {
    return SignedPermutation(p.window(), unchecked);
  }

  int size() const { return static_cast<int>(win_.size()); }
  // sigma(i) for i in {+-1, ..., +-n}
  int operator()(int i) const {
    return i > 0 ? win_[static_cast<size_t>(i) - 1] : -win_[static_cast<size_t>(-i) - 1];
  }
  const std::vector<int>& window() const { return win_; }

  int neg() const {
    return static_cast<int>(std::count_if(win_.begin(), win_.end(),
                                          [](int v) { return v < 0; }));
  }
  bool in_dn() const { return neg() % 2 == 0; }

  // |sigma| as an ordinary permutation
  Permutation abs() const {
    std::vector<int> w(win_.size());
    std::transform(win_.begin(), win_.end(), w.begin(),
                   [](int v) { return std::abs(v); });
    return Permutation(std::move(w), unchecked);
  }

  SignedPermutation inverse() const {
    std::vector<int> inv(win_.size());
    for (int i = 1; i <= size(); ++i) {
      int v = win_[i - 1];
      if (v > 0)
        inv[static_cast<size_t>(v) - 1] = i;
      else
        inv[static_cast<size_t>(-v) - 1] = -i;
    }
    return SignedPermutation(std::move(inv), unchecked);
  }

  SignedPermutation compose(const SignedPermutation& tau) const {
    if (tau.size() != size())
      throw std::invalid_argument("SignedPermutation::compose: size mismatch");
    std::vector<int> w(win_.size());
    for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(tau(i));
    return SignedPermutation(std::move(w), unchecked);
  }
  SignedPermutation compose(const Permutation& tau) const {
    return compose(from_permutation(tau));
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    return a.win_ <=> b.win_;
  }

 private:
  std::vector<int> win_;
};

// A composition (rho_1, ..., rho_m) of N with all parts >= 1.
class Composition {
 public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Composition: no parts");
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  int num_parts() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<size_t>(i) - 1]; }  // 1-based
  int total() const { return total_; }
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// A subset R of [N-1]; stored sorted. The bound N-1 is checked at use sites
// since the subset does not carry N.
class DescentSubset {
 public:
  DescentSubset() = default;
  explicit DescentSubset(std::vector<int> positions) : pos_(std::move(positions)) {
    std::sort(pos_.begin(), pos_.end());
    pos_.erase(std::unique(pos_.begin(), pos_.end()), pos_.end());
    if (!pos_.empty() && pos_.front() < 1)
      throw std::invalid_argument("DescentSubset: positions must be >= 1");
  }

  bool contains(int i) const {
    return std::binary_search(pos_.begin(), pos_.end(), i);
  }
  bool empty() const { return pos_.empty(); }
  int size() const { return static_cast<int>(pos_.size()); }
  int max() const { return pos_.empty() ? 0 : pos_.back(); }
  const std::vector<int>& positions() const { return pos_; }

  bool subset_of(const DescentSubset& other) const {
    return std::includes(other.pos_.begin(), other.pos_.end(), pos_.begin(),
                         pos_.end());
  }

  friend bool operator==(const DescentSubset&, const DescentSubset&) = default;

 private:
  std::vector<int> pos_;
};

// A word over [m] in which letter i occurs exactly rho_i times.
class MultisetWord {
 public:
  MultisetWord(std::vector<int> letters, Composition rho)
      : letters_(std::move(letters)), rho_(std::move(rho)) {
    std::vector<int> counts(static_cast<size_t>(rho_.num_parts()), 0);
    for (int v : letters_) {
      if (v < 1 || v > rho_.num_parts())
        throw std::invalid_argument("MultisetWord: letter out of range");
      ++counts[static_cast<size_t>(v) - 1];
    }
    if (counts != rho_.parts())
      throw std::invalid_argument("MultisetWord: letter counts do not match rho");
  }
  MultisetWord(std::vector<int> letters, Composition rho, unchecked_t)
      : letters_(std::move(letters)), rho_(std::move(rho)) {}

  int size() const { return static_cast<int>(letters_.size()); }
  int letter(int i) const { return letters_[static_cast<size_t>(i) - 1]; }  // 1-based
  const std::vector<int>& letters() const { return letters_; }
  const Composition& rho() const { return rho_; }

  friend bool operator==(const MultisetWord& a, const MultisetWord& b) {
    return a.letters_ == b.letters_ && a.rho_ == b.rho_;
  }

 private:
  std::vector<int> letters_;
  Composition rho_{std::vector<int>{1}};
};

// R = {rho_1, rho_1+rho_2, ...} intersected with [N-1]; the full sum N is
// excluded since descent positions live in [N-1].
inline DescentSubset composition_to_R(const Composition& rho) {
  std::vector<int> r;
  int s = 0;
  for (int i = 1; i < rho.num_parts(); ++i) {
    s += rho.part(i);
    r.push_back(s);
  }
  return DescentSubset(std::move(r));
}

// Block sizes cut out of [N] by R = {r_1 < ... < r_k} subset of [N-1].
inline Composition subset_to_composition(int n, const DescentSubset& r) {
  if (n < 1) throw std::invalid_argument("subset_to_composition: n must be >= 1");
  if (r.max() > n - 1)
    throw std::invalid_argument("subset_to_composition: position exceeds N-1");
  std::vector<int> parts;
  int prev = 0;
  for (int p : r.positions()) {
    parts.push_back(p - prev);
    prev = p;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

// --- window-level statistics shared by permutations and words ---

// Des(w) = {i | w_i > w_{i+1}}, strict comparison, 1-based positions.
inline std::vector<int> descent_positions(const std::vector<int>& w) {
  std::vector<int> des;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) des.push_back(static_cast<int>(i) + 1);
  return des;
}

inline long long major_index(const std::vector<int>& w) {
  long long maj = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) maj += static_cast<long long>(i) + 1;
  return maj;
}

// Pairs i < j with w_i > w_j.
inline long long inversions(const std::vector<int>& w) {
  long long inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

}  // namespace mahon
