#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/errors.hpp"

namespace sepkit {

using IntSequence = std::vector<int>;

namespace detail {

inline void require_sequence(const IntSequence& a, const char* what) {
  if (a.empty()) throw InputError(std::string(what) + ": sequence must be nonempty");
  for (int x : a) {
    if (x < 0) throw InputError(std::string(what) + ": values must be non-negative");
  }
}

// Inner window a[i+1..j-1] whose values all lie between a[i] and a[j].
inline bool removable(const IntSequence& a, std::size_t i, std::size_t j) {
  if (j < i + 2) return false;
  const int lo = std::min(a[i], a[j]), hi = std::max(a[i], a[j]);
  for (std::size_t l = i + 1; l < j; ++l) {
    if (a[l] < lo || a[l] > hi) return false;
  }
  return true;
}

inline IntSequence drop_repeats(const IntSequence& a) {
  IntSequence out;
  for (int x : a) {
    if (out.empty() || out.back() != x) out.push_back(x);
  }
  return out;
}

}  // namespace detail

inline bool is_typical(const IntSequence& a) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] == a[i - 1]) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 2; j < a.size(); ++j) {
      if (detail::removable(a, i, j)) return false;
    }
  }
  return true;
}

// Alternates repeat removal with removal of the widest inner window
// (leftmost among equals) until neither applies.
inline IntSequence typical(const IntSequence& a) {
  detail::require_sequence(a, "typical");
  IntSequence cur = detail::drop_repeats(a);
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 2; j < cur.size(); ++j) {
        if (detail::removable(cur, i, j) && (!best || j - i > best->second - best->first)) best = {i, j};
      }
    }
    if (!best) return cur;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(best->first + 1), cur.begin() + static_cast<std::ptrdiff_t>(best->second));
    cur = detail::drop_repeats(cur);
  }
}

// Same fixpoint, applying a uniformly random applicable operation each step.
// Used to check that the result does not depend on the order.
inline IntSequence typical_random_order(const IntSequence& a, std::mt19937_64& rng) {
  detail::require_sequence(a, "typical");
  IntSequence cur = a;
  for (;;) {
    // (i, i+1) marks a repeat at i+1; otherwise an inner window.
    std::vector<std::pair<std::size_t, std::size_t>> ops;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) ops.emplace_back(i, i + 1);
      for (std::size_t j = i + 2; j < cur.size(); ++j) {
        if (detail::removable(cur, i, j)) ops.emplace_back(i, j);
      }
    }
    if (ops.empty()) return cur;
    const auto [i, j] = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
    if (j == i + 1) {
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
    } else {
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i + 1), cur.begin() + static_cast<std::ptrdiff_t>(j));
    }
  }
}

// a < b: both can be stretched by repeating elements to a common length with
// a' <= b' pointwise. Equivalently, a monotone lattice path from (0,0) to
// (|a|-1, |b|-1) visits only pairs with a[i] <= b[j].
inline bool majorizes(const IntSequence& a, const IntSequence& b) {
  detail::require_sequence(a, "majorizes");
  detail::require_sequence(b, "majorizes");
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<char>> ok(n, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (a[i] > b[j]) continue;
      if (i == 0 && j == 0) {
        ok[i][j] = 1;
      } else {
        ok[i][j] = (i > 0 && ok[i - 1][j]) || (j > 0 && ok[i][j - 1]) || (i > 0 && j > 0 && ok[i - 1][j - 1]);
      }
    }
  }
  return ok[n - 1][m - 1];
}

// All typical sequences over {0, ..., k}, ordered by length then
// lexicographically. Prefixes of typical sequences are typical, so a DFS
// that only extends typical prefixes finds them all.
inline std::vector<IntSequence> enumerate_typical(int k, int limit = 6) {
  if (k < 0) throw InputError("enumerate_typical: k must be non-negative");
  if (k > limit) throw LimitError("enumerate_typical: k=" + std::to_string(k) + " exceeds limit " + std::to_string(limit));
  std::vector<IntSequence> out;
  IntSequence cur;
  std::function<void()> dfs = [&] {
    for (int x = 0; x <= k; ++x) {
      cur.push_back(x);
      if (is_typical(cur)) {
        out.push_back(cur);
        dfs();
      }
      cur.pop_back();
    }
  };
  dfs();
  std::sort(out.begin(), out.end(), [](const IntSequence& a, const IntSequence& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace sepkit
