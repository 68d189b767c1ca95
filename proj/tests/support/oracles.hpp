#pragma once

// Brute-force reference implementations used only by tests. Deliberately
// naive — index-subset scans and full factorial filters — and independent of
// the library's algorithms, so they can referee them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline bool order_isomorphic(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

// Every k-subset of indices, ascending, checked for order-isomorphism.
inline std::vector<std::vector<int>> occurrences(const std::vector<int>& host,
                                                 const std::vector<int>& pat) {
  const int n = static_cast<int>(host.size());
  const int k = static_cast<int>(pat.size());
  std::vector<std::vector<int>> found;
  if (k == 0 || k > n) return found;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> sub;
    for (int i : idx) sub.push_back(host[static_cast<size_t>(i)]);
    if (order_isomorphic(sub, pat)) {
      std::vector<int> one_based;
      for (int i : idx) one_based.push_back(i + 1);
      found.push_back(std::move(one_based));
    }
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return found;
}

inline bool contains(const std::vector<int>& host, const std::vector<int>& pat) {
  return !occurrences(host, pat).empty();
}

inline bool alternating(const std::vector<int>& w) {
  for (size_t i = 1; i + 1 < w.size(); i += 2) {
    if (w[i - 1] >= w[i] || w[i] <= w[i + 1]) return false;
  }
  if (w.size() % 2 == 0 && !w.empty() && w[w.size() - 2] >= w.back()) return false;
  return true;
}

// Longest increasing subsequence by scanning every index subset. n <= ~20.
inline int lis(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int prev = 0;
    int len = 0;
    bool increasing = true;
    for (int i = 0; i < n && increasing; ++i) {
      if (!(mask & (1u << i))) continue;
      if (w[static_cast<size_t>(i)] <= prev) {
        increasing = false;
      } else {
        prev = w[static_cast<size_t>(i)];
        ++len;
      }
    }
    if (increasing) best = std::max(best, len);
  }
  return best;
}

inline std::vector<std::vector<int>> avoiders_132(int n) {
  std::vector<std::vector<int>> out;
  for (auto& w : all_perms(n)) {
    if (!contains(w, {1, 3, 2})) out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<std::vector<int>> alternating_avoiders_132(int m) {
  std::vector<std::vector<int>> out;
  for (auto& w : all_perms(m)) {
    if (alternating(w) && !contains(w, {1, 3, 2})) out.push_back(std::move(w));
  }
  return out;
}

// binom(2n, n)/(n+1) straight off Pascal's triangle.
inline long long catalan_pascal(int n) {
  std::vector<std::vector<long long>> pascal(static_cast<size_t>(2 * n) + 1);
  for (size_t r = 0; r < pascal.size(); ++r) {
    pascal[r].assign(r + 1, 1);
    for (size_t c = 1; c < r; ++c) {
      pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
    }
  }
  return pascal[static_cast<size_t>(2 * n)][static_cast<size_t>(n)] / (n + 1);
}

}  // namespace oracle
