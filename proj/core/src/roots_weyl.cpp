#include "gzs/roots_weyl.hpp"

#include "gzs/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace gzs {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation window: " + str());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) {
    throw InvalidArgument("transposition index out of range");
  }
  auto w = identity(n);
  std::swap(w.window_[static_cast<std::size_t>(i - 1)], w.window_[static_cast<std::size_t>(j - 1)]);
  return w;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  auto w = identity(n);
  for (int k : word) {
    if (k < 1 || k >= n) throw InvalidArgument("simple reflection index out of range");
    // w * s_k swaps positions k and k+1.
    std::swap(w.window_[static_cast<std::size_t>(k - 1)], w.window_[static_cast<std::size_t>(k)]);
  }
  return w;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  for (auto token : detail::split(detail::trim(text), ',')) {
    w.push_back(detail::parse_int(token));
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  auto w = identity(n).window_;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  Permutation out;
  out.window_ = std::move(inv);
  return out;
}

int Permutation::length() const {
  int count = 0;
  for (std::size_t a = 0; a < window_.size(); ++a) {
    for (std::size_t b = a + 1; b < window_.size(); ++b) {
      if (window_[a] > window_[b]) ++count;
    }
  }
  return count;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::string Permutation::str() const {
  return detail::join(window_, ",", [](int v) { return std::to_string(v); });
}

Permutation operator*(const Permutation& w, const Permutation& u) {
  if (w.size() != u.size()) throw InvalidArgument("composing permutations of different sizes");
  Permutation out;
  out.window_.resize(u.window_.size());
  for (int i = 1; i <= u.size(); ++i) out.window_[static_cast<std::size_t>(i - 1)] = w(u(i));
  return out;
}

std::string Root::str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<Root> all_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) out.push_back({i, j});
    }
  }
  return out;
}

AmbientWeight::AmbientWeight(std::initializer_list<long long> e) {
  entries.reserve(e.size());
  for (long long x : e) entries.emplace_back(x);
}

bool AmbientWeight::is_strictly_increasing() const {
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (!(entries[k - 1] < entries[k])) return false;
  }
  return true;
}

AmbientWeight AmbientWeight::parse(std::string_view text) {
  AmbientWeight mu;
  for (auto token : detail::split(detail::trim(text), ',')) {
    token = detail::trim(token);
    if (!detail::is_decimal_integer(token)) {
      throw InvalidArgument("not an integer: '" + std::string(token) + "'");
    }
    if (token.front() == '+') token.remove_prefix(1);
    mu.entries.emplace_back(std::string(token));
  }
  return mu;
}

std::string AmbientWeight::str() const {
  return detail::join(entries, ",", [](const Integer& x) { return x.str(); });
}

AmbientWeight operator-(const AmbientWeight& a, const AmbientWeight& b) {
  if (a.size() != b.size()) throw InvalidArgument("weights of different rank");
  AmbientWeight out;
  out.entries.reserve(a.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) out.entries.push_back(a.entries[k] - b.entries[k]);
  return out;
}

void require_regular(const AmbientWeight& lambda) {
  if (lambda.size() < 2) throw InvalidArgument("lambda needs at least two entries");
  if (!lambda.is_strictly_increasing()) {
    throw NonRegularWeight("lambda must be strictly increasing: " + lambda.str());
  }
}

AmbientWeight act(const Permutation& sigma, const AmbientWeight& mu) {
  if (sigma.size() != mu.size()) throw InvalidArgument("permutation and weight of different rank");
  AmbientWeight out;
  out.entries.resize(mu.entries.size());
  // (sigma mu)_{sigma(k)} = mu_k
  for (int k = 1; k <= mu.size(); ++k) out.entries[static_cast<std::size_t>(sigma(k) - 1)] = mu[k];
  return out;
}

Integer pairing(const AmbientWeight& mu, const Root& alpha) { return mu[alpha.j] - mu[alpha.i]; }

Permutation reflect(const Permutation& w, const Root& alpha) {
  return Permutation::transposition(w.size(), alpha.i, alpha.j) * w;
}

AmbientWeight reflect(const AmbientWeight& mu, const Root& alpha) {
  AmbientWeight out = mu;
  std::swap(out.entries[static_cast<std::size_t>(alpha.i - 1)],
            out.entries[static_cast<std::size_t>(alpha.j - 1)]);
  return out;
}

std::vector<Integer> root_coordinates(const AmbientWeight& mu) {
  Integer total = 0;
  for (const auto& x : mu.entries) total += x;
  if (total != 0) throw InvalidArgument("root coordinates need a zero-sum weight: " + mu.str());
  std::vector<Integer> c;
  Integer prefix = 0;
  for (int r = 1; r < mu.size(); ++r) {
    prefix += mu[r];
    c.push_back(-prefix);
  }
  return c;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::deque<int> word;
  auto cur = w.window();
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < cur.size() && cur[k] < cur[k + 1]) ++k;
    if (k + 1 >= cur.size()) break;
    // cur = cur' * s_{k+1}; peel the descent off the right.
    std::swap(cur[k], cur[k + 1]);
    word.push_front(static_cast<int>(k) + 1);
  }
  return {word.begin(), word.end()};
}

std::vector<Permutation> bruhat_coatoms(const Permutation& w) {
  const int n = w.size();
  const int target = w.length() - 1;
  std::vector<Permutation> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      auto candidate = reflect(w, Root{a, b});
      if (candidate.length() == target) out.push_back(std::move(candidate));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> coatoms_by_subword(const Permutation& w) {
  const auto word = reduced_word(w);
  std::set<Permutation> found;
  for (std::size_t drop = 0; drop < word.size(); ++drop) {
    std::vector<int> sub;
    sub.reserve(word.size() - 1);
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k != drop) sub.push_back(word[k]);
    }
    auto candidate = Permutation::from_word(w.size(), sub);
    if (candidate.length() + 1 == static_cast<int>(word.size())) found.insert(std::move(candidate));
  }
  return {found.begin(), found.end()};
}

bool bruhat_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("comparing permutations of different sizes");
  std::vector<int> pa, pb;
  for (int k = 1; k < a.size(); ++k) {
    pa.insert(std::upper_bound(pa.begin(), pa.end(), a(k)), a(k));
    pb.insert(std::upper_bound(pb.begin(), pb.end(), b(k)), b(k));
    for (std::size_t t = 0; t < pa.size(); ++t) {
      if (pa[t] > pb[t]) return false;
    }
  }
  return true;
}

std::map<Permutation, Integer> chevalley_classical(const Permutation& w, const AmbientWeight& lambda) {
  require_regular(lambda);
  if (w.size() != lambda.size()) throw InvalidArgument("permutation and weight of different rank");
  const auto w_lambda = act(w, lambda);
  const auto w_inv = w.inverse();
  const int target = w.length() - 1;
  std::map<Permutation, Integer> out;
  for (int a = 1; a <= w.size(); ++a) {
    for (int b = a + 1; b <= w.size(); ++b) {
      // Exactly one of +-(a,b) satisfies "w^{-1} alpha positive"; both give the same s_alpha.
      const Root alpha = w_inv(a) < w_inv(b) ? Root{a, b} : Root{b, a};
      auto lower = reflect(w, alpha);
      if (lower.length() != target) continue;
      out.emplace(std::move(lower), pairing(w_lambda, alpha));
    }
  }
  return out;
}

namespace {

bool occurs(const std::vector<int>& text, const std::vector<int>& pattern) {
  const std::size_t n = text.size();
  const std::size_t k = pattern.size();
  if (k > n) return false;
  std::vector<std::size_t> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  for (;;) {
    bool iso = true;
    for (std::size_t x = 0; x < k && iso; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        if ((text[pos[x]] < text[pos[y]]) != (pattern[x] < pattern[y])) {
          iso = false;
          break;
        }
      }
    }
    if (iso) return true;
    // next k-combination of {0..n-1}
    std::size_t t = k;
    while (t > 0 && pos[t - 1] == n - k + (t - 1)) --t;
    if (t == 0) return false;
    ++pos[t - 1];
    for (std::size_t u = t; u < k; ++u) pos[u] = pos[u - 1] + 1;
  }
}

}  // namespace

bool avoids_patterns(const Permutation& w, const std::vector<Permutation>& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return occurs(w.window(), p.window()); });
}

int support_size(const Permutation& w) {
  const auto word = reduced_word(w);
  return static_cast<int>(std::set<int>(word.begin(), word.end()).size());
}

}  // namespace gzs
