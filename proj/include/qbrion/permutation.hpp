#pragma once

// Permutations in single-line notation and the Lehmer-code indexing
// used to store dense families over S_n.

#include <cstdint>
#include <numeric>
#include <vector>

#include "qbrion/errors.hpp"

namespace qbrion {

// sigma maps position i (1-based) to element sigma[i-1].
using Permutation = std::vector<int>;

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Index of a permutation of {1..m} in lexicographic one-line order.
inline std::uint64_t perm_index(const Permutation& sigma) {
  const int m = static_cast<int>(sigma.size());
  std::uint64_t idx = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (sigma[j] < sigma[i]) ++smaller;
    idx += static_cast<std::uint64_t>(smaller) * factorial(m - 1 - i);
  }
  return idx;
}

inline Permutation perm_at(int m, std::uint64_t index) {
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 1);
  Permutation sigma;
  sigma.reserve(m);
  for (int i = m - 1; i >= 0; --i) {
    std::uint64_t f = factorial(i);
    std::uint64_t d = index / f;
    index %= f;
    sigma.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return sigma;
}

inline std::vector<Permutation> all_perms(int m) {
  std::vector<Permutation> out;
  out.reserve(factorial(m));
  for (std::uint64_t i = 0; i < factorial(m); ++i) out.push_back(perm_at(m, i));
  return out;
}

// sigma composed with the adjacent transposition tau_i: swaps the
// entries at positions i and i+1 (1-based).
inline Permutation swap_adjacent(Permutation sigma, int i) {
  std::swap(sigma[i - 1], sigma[i]);
  return sigma;
}

// mu with `elem` inserted at position i (1-based): the paper's mu_i.
inline Permutation insert_at(const Permutation& mu, int i, int elem) {
  Permutation sigma = mu;
  sigma.insert(sigma.begin() + (i - 1), elem);
  return sigma;
}

inline bool is_bijection_of(const Permutation& sigma, int m) {
  if (static_cast<int>(sigma.size()) != m) return false;
  std::vector<bool> seen(m + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > m || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace qbrion
