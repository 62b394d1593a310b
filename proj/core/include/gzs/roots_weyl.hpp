#pragma once

// The symmetric group S_n as the Weyl group of SL_n.
//
// Conventions used throughout the library:
//   * A permutation is stored in one-line notation: w maps position i to
//     window[i-1]. Composition is function composition, (w * u)(i) = w(u(i)).
//   * The root (i, j), i != j, pairs with an ambient weight mu as
//     mu_j - mu_i. The simple root alpha_k is (k, k+1), so a strictly
//     increasing lambda is strictly dominant and (i, j) with i < j is positive
//     for the reference Borel B+.
//   * S_n acts on weights by permuting entries: (sigma mu)_k = mu_{sigma^{-1}(k)}.
//     The reflection s_(i,j) swaps entries i and j, and on permutations acts
//     from the left (swaps the values i and j in the window).

#include "gzs/exact.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gzs {

class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless `window` is a permutation of 1..n.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  // The longest element w0: i -> n + 1 - i.
  static Permutation longest(int n);
  // The transposition (i j) in S_n.
  static Permutation transposition(int n, int i, int j);
  // Product s_{k_1} s_{k_2} ... of simple transpositions (k, k+1).
  static Permutation from_word(int n, const std::vector<int>& word);
  // Comma separated window, e.g. "2,3,1".
  static Permutation parse(std::string_view text);
  // All of S_n in lexicographic order of windows.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(window_.size()); }
  // 1-based evaluation.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& window() const { return window_; }

  Permutation inverse() const;
  // Number of inversions of the window.
  int length() const;
  bool is_identity() const;

  std::string str() const;

  friend Permutation operator*(const Permutation& w, const Permutation& u);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> window_;
};

struct Root {
  int i = 1;
  int j = 2;

  Root negated() const { return {j, i}; }
  // Positive for the reference Borel B+.
  bool is_positive() const { return i < j; }
  std::string str() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

// All n(n-1) roots, ordered by (i, j).
std::vector<Root> all_roots(int n);
// The root alpha_i + ... + alpha_{j-1} = (i, j), i < j.
inline Root root_between(int i, int j) { return {i, j}; }

struct AmbientWeight {
  std::vector<Integer> entries;

  AmbientWeight() = default;
  explicit AmbientWeight(std::vector<Integer> e) : entries(std::move(e)) {}
  AmbientWeight(std::initializer_list<long long> e);

  int size() const { return static_cast<int>(entries.size()); }
  // 1-based.
  const Integer& operator[](int k) const { return entries[static_cast<std::size_t>(k - 1)]; }

  bool is_strictly_increasing() const;
  static AmbientWeight parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const AmbientWeight&, const AmbientWeight&) = default;
};

AmbientWeight operator-(const AmbientWeight& a, const AmbientWeight& b);

// Throws NonRegularWeight unless lambda is strictly increasing, and
// InvalidArgument if it is shorter than 2 entries.
void require_regular(const AmbientWeight& lambda);

// (sigma mu)_k = mu_{sigma^{-1}(k)}.
AmbientWeight act(const Permutation& sigma, const AmbientWeight& mu);

// (mu, alpha) for alpha = (i, j): mu_j - mu_i.
Integer pairing(const AmbientWeight& mu, const Root& alpha);

// s_alpha * w (left multiplication by the transposition (i j)).
Permutation reflect(const Permutation& w, const Root& alpha);

// s_alpha mu = mu - (mu, alpha) alpha, i.e. entries i and j swapped.
AmbientWeight reflect(const AmbientWeight& mu, const Root& alpha);

inline int length(const Permutation& w) { return w.length(); }

// Coefficients of a zero-sum weight in the simple-root basis:
// mu = sum_r c_r alpha_r with c_r = -(mu_1 + ... + mu_r).
// Throws InvalidArgument if the entries do not sum to zero.
std::vector<Integer> root_coordinates(const AmbientWeight& mu);

// A reduced word (k_1, ..., k_l) with w = s_{k_1} ... s_{k_l}.
std::vector<int> reduced_word(const Permutation& w);

// Bruhat co-atoms via transpositions: { t w : l(t w) = l(w) - 1 }, sorted.
std::vector<Permutation> bruhat_coatoms(const Permutation& w);

// Bruhat co-atoms via the subword property: delete one letter of a reduced
// word of w and keep the products of length l(w) - 1. Sorted, deduplicated.
std::vector<Permutation> coatoms_by_subword(const Permutation& w);

// Bruhat order by the tableau criterion: a <= b iff for every k the sorted
// prefix a(1..k) is entrywise <= the sorted prefix b(1..k).
bool bruhat_leq(const Permutation& a, const Permutation& b);

// Chevalley formula in the left-action form:
//   H_lambda Z_w = sum (w lambda, alpha) Z_{s_alpha w}
// over roots alpha with w^{-1} alpha positive and l(s_alpha w) = l(w) - 1.
// Keys are the Bruhat co-atoms of w; every coefficient is >= 1.
// Throws NonRegularWeight unless lambda is strictly increasing.
std::map<Permutation, Integer> chevalley_classical(const Permutation& w,
                                                   const AmbientWeight& lambda);

// True iff no subsequence of w's window is order-isomorphic to a pattern.
bool avoids_patterns(const Permutation& w, const std::vector<Permutation>& patterns);

// Number of distinct simple reflections in any reduced word of w.
int support_size(const Permutation& w);

}  // namespace gzs
