#pragma once

// The matroid-twisted Brion sum
//   Q_M(f) = sum_sigma f_sigma Q(C_sigma) prod_{i not in B_M(sigma)} (1 - x_i)
// computed as a Laurent polynomial by eliminating one ground-set
// element at a time, plus the exact rational-sum oracle that evaluates
// the defining formula directly at a point.

#include <optional>
#include <sstream>
#include <vector>

#include "qbrion/errors.hpp"
#include "qbrion/laurent.hpp"
#include "qbrion/matroid.hpp"
#include "qbrion/parallel.hpp"
#include "qbrion/permutation.hpp"
#include "qbrion/plaur.hpp"

namespace qbrion {

enum class ElimCase { Loop, Coloop, Neither };

// One mu-step of the elimination at a given level, kept for audit.
struct EliminationStep {
  Permutation mu;
  std::vector<LaurentPoly> g;  // g_{mu,1} .. g_{mu,m-1}
  LaurentPoly h;
  std::optional<int> k;        // threshold index; absent for loop/coloop
  ElimCase case_kind = ElimCase::Neither;
  LaurentPoly f_out;
};

struct QReport {
  LaurentPoly result;
  // trace[l] holds the steps of the elimination that removed element
  // elimination_order[l]; empty unless tracing was requested.
  std::vector<std::vector<EliminationStep>> trace;
  std::vector<int> elimination_order;
};

struct QOptions {
  bool trace = false;
  int threads = 0;  // 0: resolve from BRION_THREADS, default 1
};

// Largest i in [m-1] such that the eliminated element still belongs to
// the greedy basis B_M(mu_i); equivalently the largest i with
// rk(mu(1..i-1)) < rk(mu(1..i-1) + {top}).
inline int k_threshold(const Matroid& m, const Permutation& mu) {
  const int top = m.size();
  if (m.is_loop(top) || m.is_coloop(top))
    throw NotApplicable("k_threshold: element " + std::to_string(top) +
                        " is a loop or coloop");
  if (static_cast<int>(mu.size()) != top - 1)
    throw InternalError("k_threshold: mu must order the other elements");
  int k = 0;
  GroundSubset prefix = 0;
  for (int i = 1; i <= top - 1; ++i) {
    if (m.rank(prefix) < m.rank(prefix | element_mask(top))) k = i;
    prefix |= element_mask(mu[i - 1]);
  }
  if (k == 0) throw InternalError("k_threshold: no index found for a non-loop");
  return k;
}

namespace detail {

// Eliminates element `level` from a family indexed by S_level.  Rank
// queries go against the original matroid restricted to {1..level},
// which is the deletion of everything above.  The ambient variable set
// is untouched: x_level survives in coefficients.
inline PiecewiseLaurent eliminate_level(const PiecewiseLaurent& fam, const Matroid& matroid,
                                        int level, const QOptions& opts,
                                        std::vector<EliminationStep>* steps_out) {
  const int m = level;
  const int N = fam.ambient();
  const GroundSubset below = full_set(m - 1);
  const bool loop = matroid.rank(element_mask(m)) == 0;
  const bool coloop = !loop && matroid.rank(below) < matroid.rank(below | element_mask(m));

  PiecewiseLaurent out(m - 1, N);
  if (steps_out) steps_out->resize(factorial(m - 1));

  parallel_for(factorial(m - 1), opts.threads, [&](std::size_t idx) {
    Permutation mu = perm_at(m - 1, static_cast<std::uint64_t>(idx));

    // g_{mu,j} = (f_{mu_j} - f_{mu_{j+1}}) / (x_m - x_{mu(j)})
    std::vector<LaurentPoly> g;
    g.reserve(m - 1);
    for (int j = 1; j <= m - 1; ++j) {
      LaurentPoly diff = fam.at(insert_at(mu, j, m)) - fam.at(insert_at(mu, j + 1, m));
      g.push_back(diff.divide_binomial(m, mu[j - 1]));
    }

    // h_mu = x_m (g_1 + ... + g_{m-1}) + f_{mu_m}
    LaurentPoly gsum(N);
    for (const auto& gj : g) gsum += gj;
    LaurentPoly h = gsum.times_var(m) + fam.at(insert_at(mu, m, m));

    LaurentPoly f_out(N);
    std::optional<int> k;
    ElimCase ck;
    if (coloop) {
      ck = ElimCase::Coloop;
      f_out = h;
    } else if (loop) {
      ck = ElimCase::Loop;
      f_out = h - h.times_var(m);  // (1 - x_m) h
    } else {
      ck = ElimCase::Neither;
      int kk = 0;
      GroundSubset prefix = 0;
      for (int i = 1; i <= m - 1; ++i) {
        if (matroid.rank(prefix) < matroid.rank(prefix | element_mask(m))) kk = i;
        prefix |= element_mask(mu[i - 1]);
      }
      k = kk;
      // f_mu = h - x_m ( x_{mu(k)} (g_1+...+g_k)
      //               + x_{mu(k+1)} g_{k+1} + ... + x_{mu(m-1)} g_{m-1} )
      LaurentPoly head(N);
      for (int j = 1; j <= kk; ++j) head += g[j - 1];
      LaurentPoly bracket = head.times_var(mu[kk - 1]);
      for (int j = kk + 1; j <= m - 1; ++j) bracket += g[j - 1].times_var(mu[j - 1]);
      f_out = h - bracket.times_var(m);

      if (steps_out) {
        // Cross-check against the equivalent telescoped form
        //   f_{mu_k} + (1-x_{mu(k)}) x_m (g_1+...+g_{k-1})
        //            + (1-x_m) (x_{mu(k)} g_k + ... + x_{mu(m-1)} g_{m-1}),
        // which is how the same polynomial arises in the derivation.
        const LaurentPoly xm = LaurentPoly::variable(N, m);
        const LaurentPoly xk = LaurentPoly::variable(N, mu[kk - 1]);
        const LaurentPoly one = LaurentPoly::constant(N, 1);
        LaurentPoly low(N);
        for (int j = 1; j <= kk - 1; ++j) low += g[j - 1];
        LaurentPoly high(N);
        for (int j = kk; j <= m - 1; ++j) high += g[j - 1].times_var(mu[j - 1]);
        LaurentPoly alt = fam.at(insert_at(mu, kk, m)) + (one - xk) * xm * low +
                          (one - xm) * high;
        if (!(alt == f_out))
          throw InternalError("elimination cross-check failed: the two formulas disagree");
      }
    }

    out.at_index(static_cast<std::uint64_t>(idx)) = f_out;
    if (steps_out)
      (*steps_out)[idx] = EliminationStep{mu, std::move(g), std::move(h), k, ck, f_out};
  });

  // Proposition-level invariant: the eliminated family is piecewise
  // Laurent on the smaller fan, with x_level acting as a scalar.
  try {
    out.validate();
  } catch (const GluingViolation& e) {
    throw InternalError(std::string("eliminate: output family lost the gluing property: ") +
                        e.what());
  }
  return out;
}

}  // namespace detail

// Single elimination step exposed on its own: removes the top element
// of the matroid's ground set from the family.
inline std::pair<PiecewiseLaurent, std::vector<EliminationStep>> eliminate_top(
    const PiecewiseLaurent& f, const Matroid& m, const QOptions& opts = {}) {
  if (f.ground() != m.size())
    throw InternalError("eliminate_top: family and matroid ground sets differ");
  std::vector<EliminationStep> steps;
  PiecewiseLaurent out = detail::eliminate_level(f, m, m.size(), opts, &steps);
  return {std::move(out), std::move(steps)};
}

// Q_M(f) by repeatedly eliminating the largest remaining element.
inline QReport q_matroid(const PiecewiseLaurent& f, const Matroid& m,
                         const QOptions& opts = {}) {
  const int n = m.size();
  if (f.ground() != n || f.ambient() != n)
    throw InternalError("q_matroid: family must live on the matroid's ground set");
  QReport report;
  PiecewiseLaurent fam = f;
  for (int level = n; level >= 2; --level) {
    report.elimination_order.push_back(level);
    std::vector<EliminationStep> steps;
    fam = detail::eliminate_level(fam, m, level, opts, opts.trace ? &steps : nullptr);
    if (opts.trace) report.trace.push_back(std::move(steps));
  }
  report.elimination_order.push_back(1);
  LaurentPoly base = fam.at_index(std::uint64_t{0});
  if (m.rank(element_mask(1)) == 0) {
    // The last element is a loop: Q picks up the factor (1 - x_1).
    base = base * (LaurentPoly::constant(n, 1) - LaurentPoly::variable(n, 1));
  }
  report.result = std::move(base);
  return report;
}

// ---------------------------------------------------------------------------
// Exact rational evaluation of the defining sum.

inline void require_pole_free(const RationalPoint& pt) {
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (pt[i] == 0) throw PoleHit("evaluation point has a zero coordinate");
    for (std::size_t j = i + 1; j < pt.size(); ++j)
      if (pt[i] == pt[j])
        throw PoleHit("evaluation point has coinciding coordinates " +
                      std::to_string(i + 1) + " and " + std::to_string(j + 1));
  }
}

// Q(C_sigma) at a point: prod 1 / (1 - x_{sigma(i+1)} / x_{sigma(i)}).
inline mpq_class cone_q_eval(const Permutation& sigma, const RationalPoint& pt) {
  mpq_class q = 1;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    mpq_class den = 1 - pt[sigma[i + 1] - 1] / pt[sigma[i] - 1];
    if (den == 0) throw PoleHit("cone denominator vanished");
    q /= den;
  }
  return q;
}

inline mpq_class rational_sum_eval(const PiecewiseLaurent& f, const Matroid& m,
                                   const RationalPoint& pt) {
  const int n = m.size();
  if (f.ground() != n || static_cast<int>(pt.size()) != n)
    throw InternalError("rational_sum_eval: size mismatch");
  require_pole_free(pt);
  mpq_class total = 0;
  for (std::uint64_t idx = 0; idx < f.family_size(); ++idx) {
    Permutation sigma = perm_at(n, idx);
    mpq_class term = f.at_index(idx).eval(pt) * cone_q_eval(sigma, pt);
    GroundSubset basis = m.greedy_basis(sigma);
    for (int i = 1; i <= n; ++i)
      if (!(basis & element_mask(i))) term *= (1 - pt[i - 1]);
    total += term;
  }
  return total;
}

// Partial sums of Q(C_{mu_1}), ..., Q(C_{mu_n}) split at position i,
// evaluated exactly.  Both raw sums are checked against their closed
// forms before being returned as (lower, upper).
inline std::pair<mpq_class, mpq_class> cone_partial_sum_eval(const Permutation& mu, int i,
                                                             const RationalPoint& pt) {
  const int n = static_cast<int>(mu.size()) + 1;
  require_pole_free(pt);
  if (n == 1) return {mpq_class(0), mpq_class(1)};  // single empty-product cone
  if (i < 1 || i > n - 1) throw InternalError("cone_partial_sum_eval: index out of range");
  mpq_class lower = 0, upper = 0;
  for (int j = 1; j <= n; ++j) {
    mpq_class q = cone_q_eval(insert_at(mu, j, n), pt);
    (j <= i ? lower : upper) += q;
  }
  mpq_class chain = 1;
  for (int t = 1; t <= n - 2; ++t) {
    mpq_class den = 1 - pt[mu[t] - 1] / pt[mu[t - 1] - 1];
    if (den == 0) throw PoleHit("cone denominator vanished");
    chain *= den;
  }
  mpq_class ratio = pt[n - 1] / pt[mu[i - 1] - 1];
  mpq_class tail = 1 - ratio;
  if (tail == 0) throw PoleHit("cone denominator vanished");
  mpq_class lower_closed = -ratio / (chain * tail);
  mpq_class upper_closed = 1 / (chain * tail);
  if (lower != lower_closed || upper != upper_closed)
    throw InternalError("cone partial sums disagree with their closed forms");
  return {lower, upper};
}

// Both sides of the reciprocity identity
//   Q_M(f^dual) = (-1)^{rk(M)-1} Q_M(f * omega_M)^dual .
inline std::pair<LaurentPoly, LaurentPoly> reciprocity_pair(const PiecewiseLaurent& f,
                                                            const Matroid& m,
                                                            const QOptions& opts = {}) {
  LaurentPoly lhs = q_matroid(family_dual(f), m, opts).result;
  LaurentPoly twisted = q_matroid(family_op(f, omega(m), FamilyOp::Mul), m, opts).result;
  LaurentPoly rhs = twisted.dual();
  if (m.rank() % 2 == 0) rhs = -rhs;  // (-1)^{rk-1}
  return {std::move(lhs), std::move(rhs)};
}

// Deterministic pole-free evaluation points: coordinates are distinct
// small primes, windowed by the point index (seed 0) or sampled by a
// seeded generator.
inline std::vector<RationalPoint> default_eval_points(int n, int count,
                                                      std::uint64_t seed = 0) {
  static const int primes[] = {2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                               41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,
                               97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
                               157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223};
  constexpr int pool = sizeof(primes) / sizeof(primes[0]);
  std::vector<RationalPoint> pts;
  pts.reserve(count);
  for (int j = 0; j < count; ++j) {
    RationalPoint pt(n);
    if (seed == 0) {
      for (int i = 0; i < n; ++i) pt[i] = primes[(j + i) % pool];
      // Windows that wrap around could repeat a prime; nudge by
      // falling back to a shifted window that fits.
      if (j + n > pool)
        for (int i = 0; i < n; ++i) pt[i] = primes[(j % (pool - n)) + i];
    } else {
      std::uint64_t state = seed * 1000003ull + static_cast<std::uint64_t>(j) + 1;
      auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
      };
      std::vector<int> chosen;
      while (static_cast<int>(chosen.size()) < n) {
        int c = static_cast<int>(next() % pool);
        bool dup = false;
        for (int x : chosen) dup |= (x == c);
        if (!dup) chosen.push_back(c);
      }
      for (int i = 0; i < n; ++i) pt[i] = primes[chosen[i]];
    }
    pts.push_back(std::move(pt));
  }
  return pts;
}

}  // namespace qbrion
