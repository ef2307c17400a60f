#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mahon/bijections.hpp"
#include "mahon/core.hpp"

// Permutation statistics: descent/major/inversion, the Lehmer code, the
// staircase statistics sta/stc and their multiset, signed and even-signed
// extensions.

namespace mahon {

// Digit word c_1...c_N with 0 <= c_i <= N-i; digit sum equals the inversion
// number of the encoded permutation.
class LehmerCode {
 public:
  explicit LehmerCode(std::vector<int> digits) : digits_(std::move(digits)) {
    int n = static_cast<int>(digits_.size());
    for (int i = 1; i <= n; ++i) {
      int c = digits_[static_cast<size_t>(i) - 1];
      if (c < 0 || c > n - i)
        throw std::invalid_argument("LehmerCode: digit out of [0, N-i]");
    }
  }

  int size() const { return static_cast<int>(digits_.size()); }
  int digit(int i) const { return digits_[static_cast<size_t>(i) - 1]; }  // 1-based
  const std::vector<int>& digits() const { return digits_; }
  long long sum() const {
    long long s = 0;
    for (int d : digits_) s += d;
    return s;
  }

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<int> digits_;
};

// c_i = #{j > i | sigma(i) > sigma(j)}
inline LehmerCode lehmer_code(const Permutation& p) {
  int n = p.size();
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++c[static_cast<size_t>(i) - 1];
  return LehmerCode(std::move(c));
}

// Inverse of lehmer_code: sigma(i) is the (c_i+1)-th smallest unused value.
inline Permutation lehmer_decode(const LehmerCode& code) {
  int n = code.size();
  std::vector<int> items(static_cast<size_t>(n));
  std::iota(items.begin(), items.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int c = code.digit(i);
    w.push_back(items[static_cast<size_t>(c)]);
    items.erase(items.begin() + c);
  }
  return Permutation(std::move(w), unchecked);
}

// Maximal r such that some subsequence dominates the staircase
// (r-1, r-2, ..., 1, 0) strictly componentwise; 0 for the empty staircase.
// Greedy right-to-left: an entry extends the staircase built so far iff it
// strictly exceeds its current length.
inline int sta(std::span<const int> word) {
  int r = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (*it > r) ++r;
  return r;
}

inline int sta(const std::vector<int>& word) {
  return sta(std::span<const int>(word));
}

inline int stc(const Permutation& p) { return sta(lehmer_code(p).digits()); }

// For signed permutations the code compares signed window values; this
// equals stc of the sign-forgetting relative-order permutation sy(sigma).
inline int stc(const SignedPermutation& s) {
  int n = s.size();
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s(i) > s(j)) ++c[static_cast<size_t>(i) - 1];
  return sta(c);
}

struct ClassicalStats {
  std::vector<int> des_set;
  long long des = 0;
  long long maj = 0;
  long long inv = 0;
};

inline ClassicalStats classical_stats(const std::vector<int>& window) {
  ClassicalStats st;
  st.des_set = descent_positions(window);
  st.des = static_cast<long long>(st.des_set.size());
  st.maj = major_index(window);
  st.inv = inversions(window);
  return st;
}

inline ClassicalStats classical_stats(const Permutation& p) {
  return classical_stats(p.window());
}
inline ClassicalStats classical_stats(const MultisetWord& w) {
  return classical_stats(w.letters());
}

struct SignedStats {
  std::vector<int> neg_set;  // positions i with sigma(i) < 0
  long long neg = 0;
  long long nsp = 0;  // pairs i < j with sigma(i) + sigma(j) < 0
  long long inv = 0;
  long long des = 0;
  long long maj = 0;
  long long length_b = 0;  // inv + neg + nsp
  long long ndes = 0;       // des + neg
  long long nmaj = 0;       // maj - sum_{i in Neg} sigma(i)
  int stc = 0;
  int nstc = 0;  // stc + neg
};

inline SignedStats signed_stats(const SignedPermutation& s) {
  SignedStats st;
  const auto& w = s.window();
  int n = s.size();
  long long negsum = 0;
  for (int i = 1; i <= n; ++i) {
    if (s(i) < 0) {
      st.neg_set.push_back(i);
      negsum += s(i);
    }
    for (int j = i + 1; j <= n; ++j) {
      if (s(i) > s(j)) ++st.inv;
      if (s(i) + s(j) < 0) ++st.nsp;
    }
  }
  st.neg = static_cast<long long>(st.neg_set.size());
  st.des = static_cast<long long>(descent_positions(w).size());
  st.maj = major_index(w);
  st.length_b = st.inv + st.neg + st.nsp;
  st.ndes = st.des + st.neg;
  st.nmaj = st.maj - negsum;
  st.stc = stc(s);
  st.nstc = st.stc + static_cast<int>(st.neg);
  return st;
}

struct DStats {
  long long dneg = 0;  // #{i | sigma(i) < -1}
  int epsilon = 0;     // -1 iff sigma^{-1}(1) < 0, i.e. -1 occurs in the window
  long long ddes = 0;  // des + dneg
  long long dmaj = 0;  // maj - sum over positions with sigma(i) < -1 of sigma(i)
  int dstc = 0;        // stc + neg + epsilon = stc + dneg
  long long length_d = 0;  // inv + nsp
};

// Statistics specific to the even hyperoctahedral group.
inline DStats d_stats(const SignedPermutation& s) {
  if (!s.in_dn())
    throw std::domain_error("d_stats: carrier is not in D_n (odd negative count)");
  DStats st;
  int n = s.size();
  long long dnegsum = 0;
  bool minus_one = false;
  for (int i = 1; i <= n; ++i) {
    if (s(i) < -1) {
      ++st.dneg;
      dnegsum += s(i);
    }
    if (s(i) == -1) minus_one = true;
  }
  st.epsilon = minus_one ? -1 : 0;
  SignedStats b = signed_stats(s);
  st.ddes = b.des + st.dneg;
  st.dmaj = b.maj - dnegsum;
  st.dstc = b.stc + static_cast<int>(st.dneg);
  st.length_d = b.inv + b.nsp;
  return st;
}

// stc of the inverse standardization; the Eulerian companion of inv on
// multiset words.
inline int mstc(const MultisetWord& w) { return stc(istd(w)); }

// --- statistics by name, for distribution polynomials and the CLI ---

inline long long stat_value(const Permutation& p, std::string_view name) {
  if (name == "des") return static_cast<long long>(descent_positions(p.window()).size());
  if (name == "maj") return major_index(p.window());
  if (name == "inv" || name == "length") return inversions(p.window());
  if (name == "stc") return stc(p);
  if (name == "ides")
    return static_cast<long long>(descent_positions(p.inverse().window()).size());
  if (name == "imaj") return major_index(p.inverse().window());
  throw std::domain_error("unknown statistic '" + std::string(name) +
                          "' for a permutation");
}

inline long long stat_value(const MultisetWord& w, std::string_view name) {
  if (name == "des") return static_cast<long long>(descent_positions(w.letters()).size());
  if (name == "maj") return major_index(w.letters());
  if (name == "inv") return inversions(w.letters());
  if (name == "mstc") return mstc(w);
  throw std::domain_error("unknown statistic '" + std::string(name) +
                          "' for a multiset word");
}

inline long long stat_value(const SignedPermutation& s, std::string_view name) {
  if (name == "des") return static_cast<long long>(descent_positions(s.window()).size());
  if (name == "maj") return major_index(s.window());
  if (name == "inv") return inversions(s.window());
  if (name == "neg") return s.neg();
  if (name == "stc") return stc(s);
  if (name == "nsp" || name == "ndes" || name == "nmaj" || name == "nstc" ||
      name == "length_b") {
    SignedStats st = signed_stats(s);
    if (name == "nsp") return st.nsp;
    if (name == "ndes") return st.ndes;
    if (name == "nmaj") return st.nmaj;
    if (name == "nstc") return st.nstc;
    return st.length_b;
  }
  if (name == "dneg" || name == "ddes" || name == "dmaj" || name == "dstc" ||
      name == "length_d") {
    DStats st = d_stats(s);
    if (name == "dneg") return st.dneg;
    if (name == "ddes") return st.ddes;
    if (name == "dmaj") return st.dmaj;
    if (name == "dstc") return st.dstc;
    return st.length_d;
  }
  throw std::domain_error("unknown statistic '" + std::string(name) +
                          "' for a signed permutation");
}

}  // namespace mahon
