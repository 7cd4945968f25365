#pragma once

// Shared fixture matroids, set functions and generators used by both
// the unit tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "qbrion/matroid.hpp"
#include "qbrion/setfunction.hpp"

namespace qbrion::fixtures {

inline GroundSubset mask_of(const std::vector<int>& elements) {
  GroundSubset s = 0;
  for (int e : elements) s |= element_mask(e);
  return s;
}

inline Matroid from_lists(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<GroundSubset> masks;
  for (const auto& b : bases) {
    GroundSubset m = 0;
    for (int e : b) m |= element_mask(e);
    masks.push_back(m);
  }
  return Matroid(n, std::move(masks));
}

// Rank-0 matroid: every element is a loop.
inline Matroid rank_zero(int n) { return Matroid(n, {0u}); }

// Graphic matroid of K4 on 6 edges: 12,13,14,23,24,34 labeled 1..6.
// Bases are the 16 spanning trees.
inline Matroid graphic_k4() {
  const std::pair<int, int> edges[6] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::vector<GroundSubset> bases;
  for (GroundSubset s = 0; s <= full_set(6); ++s) {
    if (subset_size(s) != 3) continue;
    // Union-find over 4 vertices.
    int parent[5] = {0, 1, 2, 3, 4};
    auto find = [&](auto&& self, int v) -> int {
      return parent[v] == v ? v : parent[v] = self(self, parent[v]);
    };
    bool cycle = false;
    for (int e = 1; e <= 6; ++e) {
      if (!(s & element_mask(e))) continue;
      int a = find(find, edges[e - 1].first), b = find(find, edges[e - 1].second);
      if (a == b) {
        cycle = true;
        break;
      }
      parent[a] = b;
    }
    if (!cycle) bases.push_back(s);
  }
  return Matroid(6, std::move(bases));
}

// Direct sum placing the second matroid after the first on the ground set.
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<GroundSubset> bases;
  for (GroundSubset ba : a.bases())
    for (GroundSubset bb : b.bases()) bases.push_back(ba | (bb << a.size()));
  return Matroid(a.size() + b.size(), std::move(bases));
}

// The curated matroid fixture set, loop-bearing examples included.
inline std::vector<Matroid> matroid_fixtures(int nmax) {
  std::vector<Matroid> out;
  auto add = [&](const Matroid& m) {
    if (m.size() <= nmax) out.push_back(m);
  };
  add(Matroid::boolean(1));
  add(rank_zero(1));
  add(Matroid::boolean(2));
  add(Matroid::uniform(1, 2));
  add(rank_zero(2));
  add(from_lists(2, {{1}}));  // coloop + loop
  add(Matroid::boolean(3));
  add(Matroid::uniform(1, 3));
  add(Matroid::uniform(2, 3));
  add(rank_zero(3));
  add(from_lists(3, {{1, 2}}));                    // two coloops + loop
  add(from_lists(3, {{1}, {2}}));                  // U12 + loop
  add(direct_sum(Matroid::uniform(1, 2), Matroid::boolean(1)));
  add(Matroid::uniform(2, 4));
  add(Matroid::uniform(3, 4));
  add(Matroid::uniform(1, 4));
  add(direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2)));
  add(from_lists(4, {{1, 2}, {1, 3}}));            // loop at 4
  add(direct_sum(from_lists(2, {{1}}), Matroid::boolean(2)));
  add(Matroid::uniform(2, 5));
  add(Matroid::uniform(3, 5));
  add(Matroid::uniform(4, 5));
  add(direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 2)));
  add(direct_sum(Matroid::uniform(2, 3), rank_zero(2)));
  add(direct_sum(Matroid::boolean(3), Matroid::uniform(1, 2)));
  if (nmax >= 6) {
    add(graphic_k4());
    add(Matroid::uniform(3, 6));
  }
  return out;
}

inline std::vector<Matroid> loopless_fixtures(int nmax) {
  std::vector<Matroid> out;
  for (const Matroid& m : matroid_fixtures(nmax))
    if (m.loops() == 0) out.push_back(m);
  return out;
}

// Random linear matroid over GF(p): columns are random vectors in
// GF(p)^r, bases are the r-subsets with nonzero determinant.  Always a
// matroid; zero columns give loops.
inline Matroid random_linear_matroid(int n, int r, int p, std::mt19937_64& rng) {
  std::vector<std::vector<int>> cols(n, std::vector<int>(r));
  for (auto& c : cols)
    for (int& v : c) v = static_cast<int>(rng() % p);
  std::vector<GroundSubset> bases;
  for (GroundSubset s = 0; s <= full_set(n); ++s) {
    if (subset_size(s) != r) continue;
    std::vector<std::vector<int>> mat;
    for (int e : subset_elements(s)) mat.push_back(cols[e - 1]);
    // Determinant over GF(p) by elimination.
    int det = 1;
    for (int col = 0; col < r && det != 0; ++col) {
      int pivot = -1;
      for (int row = col; row < r; ++row)
        if (mat[row][col] % p != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) {
        det = 0;
        break;
      }
      std::swap(mat[col], mat[pivot]);
      det = (det * mat[col][col]) % p;
      // Modular inverse by Fermat.
      long inv = 1, base = mat[col][col] % p, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (int row = col + 1; row < r; ++row) {
        long factor = mat[row][col] * inv % p;
        for (int c2 = col; c2 < r; ++c2)
          mat[row][c2] = static_cast<int>(((mat[row][c2] - factor * mat[col][c2]) % p + p) % p);
      }
    }
    if (det % p != 0) bases.push_back(s);
  }
  if (bases.empty()) {
    // All column sets were singular (e.g. everything zero); fall back
    // to the rank-0 matroid, still a legitimate random draw.
    bases.push_back(0u);
  }
  return Matroid(n, std::move(bases));
}

// Random matroid with a random rank, retrying until nonempty.
inline Matroid random_matroid(int n, std::mt19937_64& rng) {
  int r = 1 + static_cast<int>(rng() % n);
  int p = (rng() % 2) ? 2 : 3;
  return random_linear_matroid(n, r, p, rng);
}

// --- set functions -------------------------------------------------------

inline SetFunction set_function(int n, const std::vector<std::pair<std::vector<int>, long long>>& vals) {
  SetFunction z(n);
  for (const auto& [subset, v] : vals) {
    GroundSubset s = 0;
    for (int e : subset) s |= element_mask(e);
    z.set(s, v);
  }
  return z;
}

// z{1}=z{2}=z{12}=3: the segment conv{(3,0),(0,3)}.
inline SetFunction segment3() {
  return set_function(2, {{{1}, 3}, {{2}, 3}, {{1, 2}, 3}});
}

// Unit segment conv{(1,0),(0,1)} = base polytope of U_{1,2}.
inline SetFunction unit_segment() {
  return set_function(2, {{{1}, 1}, {{2}, 1}, {{1, 2}, 1}});
}

// The sliding-facet hexagon: singletons 6, pairs 10, full 12.
inline SetFunction hexagon() {
  return set_function(3, {{{1}, 6}, {{2}, 6}, {{3}, 6},
                          {{1, 2}, 10}, {{1, 3}, 10}, {{2, 3}, 10},
                          {{1, 2, 3}, 12}});
}

// k times the standard simplex in R^n: z(T) = k for every nonempty T.
// For n=3, k=3 this carries the 10 lattice points of the dilated
// triangle into the hyperplane x1+x2+x3 = 3.
inline SetFunction simplex_dilate(int n, long long k) {
  SetFunction z(n);
  for (GroundSubset s = 1; s <= full_set(n); ++s) z.set(s, k);
  return z;
}

// Standard permutohedron: z(T) = sum of the |T| largest of 1..n.
inline SetFunction permutohedron(int n) {
  SetFunction z(n);
  for (GroundSubset s = 1; s <= full_set(n); ++s) {
    int k = subset_size(s);
    long long v = 0;
    for (int i = 0; i < k; ++i) v += n - i;
    z.set(s, v);
  }
  return z;
}

// Weighted coverage function plus a linear part: always submodular.
inline SetFunction random_submodular(int n, std::mt19937_64& rng) {
  SetFunction z(n);
  const int groups = 2 + static_cast<int>(rng() % 3);
  std::vector<GroundSubset> cover(groups);
  std::vector<long long> weight(groups);
  for (int g = 0; g < groups; ++g) {
    cover[g] = static_cast<GroundSubset>(rng() % (full_set(n) + 1));
    weight[g] = 1 + static_cast<long long>(rng() % 4);
  }
  std::vector<long long> linear(n);
  for (auto& v : linear) v = static_cast<long long>(rng() % 5) - 2;
  for (GroundSubset s = 1; s <= full_set(n); ++s) {
    long long v = 0;
    for (int g = 0; g < groups; ++g)
      if (cover[g] & s) v += weight[g];
    for (int i = 1; i <= n; ++i)
      if (s & element_mask(i)) v += linear[i - 1];
    z.set(s, v);
  }
  return z;
}

// Arbitrary small integer delta-coefficients with a(emptyset) = 0.
inline SetFunction random_delta(int n, std::mt19937_64& rng) {
  SetFunction a(n);
  for (GroundSubset s = 1; s <= full_set(n); ++s)
    a.set(s, static_cast<long long>(rng() % 7) - 3);
  return a;
}

// Submodular fixture polytopes keyed by ground-set size.
inline std::vector<SetFunction> gp_fixtures(int n) {
  std::vector<SetFunction> out;
  switch (n) {
    case 1:
      out.push_back(set_function(1, {{{1}, 2}}));
      out.push_back(SetFunction::zero(1));
      break;
    case 2:
      out.push_back(segment3());
      out.push_back(unit_segment());
      out.push_back(SetFunction::zero(2));
      out.push_back(permutohedron(2));
      break;
    case 3:
      out.push_back(hexagon());
      out.push_back(simplex_dilate(3, 3));
      out.push_back(permutohedron(3));
      out.push_back(SetFunction::rank_function(Matroid::uniform(2, 3)));
      break;
    case 4:
      out.push_back(permutohedron(4));
      out.push_back(SetFunction::rank_function(Matroid::uniform(2, 4)));
      out.push_back(simplex_dilate(4, 2));
      break;
    case 5:
      out.push_back(permutohedron(5));
      out.push_back(SetFunction::rank_function(Matroid::uniform(2, 5)));
      break;
    default:
      break;
  }
  return out;
}

}  // namespace qbrion::fixtures
