#pragma once

// Brute-force lattice-point machinery for generalized permutohedra
// described by submodular set functions:
//   P(z) = { x : sum_{i in T} x_i <= z(T) for all T,  sum x_i = z(E) }.
// Deliberately naive; this is the oracle side of every cross-check.

#include <set>
#include <vector>

#include "qbrion/errors.hpp"
#include "qbrion/laurent.hpp"
#include "qbrion/plaur.hpp"
#include "qbrion/setfunction.hpp"

namespace qbrion {

// Vertex-monomial family {x^{v_P(sigma)}}.  For non-submodular z this
// is still the monomial family of the piecewise linear function with
// the same prefix differences.
inline PiecewiseLaurent piecewise_monomial(const SetFunction& z) { return from_delta(z); }

namespace detail {

struct LatticeScan {
  std::vector<long long> lo, hi;
};

inline LatticeScan coordinate_bounds(const SetFunction& z) {
  const int n = z.size();
  const GroundSubset full = full_set(n);
  LatticeScan scan;
  scan.lo.resize(n);
  scan.hi.resize(n);
  for (int i = 1; i <= n; ++i) {
    scan.lo[i - 1] = z.at(full) - z.at(full & ~element_mask(i));
    scan.hi[i - 1] = z.at(element_mask(i));
    if (scan.lo[i - 1] > scan.hi[i - 1])
      throw InfeasibleBox("empty bound for coordinate " + std::to_string(i) +
                          ": input is not submodular");
  }
  return scan;
}

// Walks the integer box and filters by the subset-sum inequalities.
// `strict` demands strict inequality on every proper nonempty subset.
template <typename Emit>
void scan_points(const SetFunction& z, bool strict, Emit&& emit) {
  const int n = z.size();
  const GroundSubset full = full_set(n);
  LatticeScan scan = coordinate_bounds(z);
  std::vector<long long> x(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (GroundSubset s = 1; s < full; ++s) {
        long long sum = 0;
        for (int j = 0; j < n; ++j)
          if (s & element_mask(j + 1)) sum += x[j];
        if (sum > z.at(s) || (strict && sum == z.at(s))) return;
      }
      long long total = 0;
      for (long long v : x) total += v;
      if (total != z.at(full)) return;
      emit(x);
      return;
    }
    for (long long v = scan.lo[i]; v <= scan.hi[i]; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Exact q(P): the sum of x^m over lattice points of P(z).
inline LaurentPoly enumerate_lattice_points(const SetFunction& z) {
  const int n = z.size();
  LaurentPoly q(n);
  detail::scan_points(z, /*strict=*/false, [&](const std::vector<long long>& x) {
    ExponentVector e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(x[i]);
    q.add_term(e, 1);
  });
  return q;
}

// Lattice points of the relative interior within the hyperplane
// sum x = z(E): all proper subset inequalities strict.  Meaningful for
// polytopes of full dimension n-1.
inline LaurentPoly interior_lattice_points(const SetFunction& z) {
  const int n = z.size();
  LaurentPoly q(n);
  detail::scan_points(z, /*strict=*/true, [&](const std::vector<long long>& x) {
    ExponentVector e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(x[i]);
    q.add_term(e, 1);
  });
  return q;
}

// [ |kP cap Z^n| : k = 0..kmax ] by enumerating each dilate.
inline std::vector<mpz_class> ehrhart_values(const SetFunction& z, int kmax) {
  std::vector<mpz_class> out;
  out.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    out.push_back(enumerate_lattice_points(z.dilated(k)).specialize_ones());
  return out;
}

// Dimension of P(z) as the affine dimension of its vertex set; a
// generalized permutohedron is full-dimensional when this equals n-1.
inline int polytope_dimension(const SetFunction& z) {
  const int n = z.size();
  std::set<std::vector<long long>> verts;
  for (std::uint64_t idx = 0; idx < factorial(n); ++idx)
    verts.insert(vertex(z, perm_at(n, idx)));
  auto it = verts.begin();
  std::vector<long long> base = *it;
  ++it;
  std::vector<std::vector<mpq_class>> rows;
  for (; it != verts.end(); ++it) {
    std::vector<mpq_class> d(n);
    for (int i = 0; i < n; ++i) d[i] = static_cast<long>((*it)[i] - base[i]);
    rows.push_back(std::move(d));
  }
  // Exact Gaussian elimination rank.
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      mpq_class factor = rows[r][col] / rows[rank][col];
      for (int c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace qbrion
