#pragma once

// Matroid Euler characteristics chi*_M as the all-ones specialization
// of Q_M, together with the flat recursion axioms, Serre duality and
// h*-vector extraction from the dilation sequence.

#include <vector>

#include "qbrion/brion.hpp"
#include "qbrion/errors.hpp"
#include "qbrion/matroid.hpp"
#include "qbrion/plaur.hpp"
#include "qbrion/setfunction.hpp"

namespace qbrion {

struct EulerValue {
  mpz_class value;
  SetFunction delta;  // the input delta-coefficients
};

// chi*_M(a) = Q_M(x^a)|_{x=1}.  Vanishes identically when M has loops.
inline EulerValue chi_star(const Matroid& m, const SetFunction& a, const QOptions& opts = {}) {
  if (m.size() != a.size()) throw InternalError("chi_star: ground set mismatch");
  mpz_class v = q_matroid(from_delta(a), m, opts).result.specialize_ones();
  return {std::move(v), a};
}

struct AxiomCheckLine {
  GroundSubset flat;
  mpz_class lhs;   // chi*(a)
  mpz_class rhs;   // chi*(a - delta_F) + chi*_{M|F}(a|F) chi*_{M/F}(a/F)
  bool ok;
};

struct AxiomCheckReport {
  std::vector<AxiomCheckLine> lines;
  bool all_ok = true;
};

// Verifies the flat recursion
//   chi*(a) = chi*(a - delta_F) + chi*_{M|F}(a|F) * chi*_{M/F}(a/F)
// over every nonempty proper flat F of a loopless matroid.
inline AxiomCheckReport axiom_check(const Matroid& m, const SetFunction& a,
                                    const QOptions& opts = {}) {
  if (m.loops() != 0)
    throw ValidationError("axiom_check requires a loopless matroid");
  AxiomCheckReport report;
  const mpz_class lhs = chi_star(m, a, opts).value;
  for (GroundSubset f : m.flats()) {
    if (f == 0 || f == full_set(m.size())) continue;
    mpz_class shifted = chi_star(m, a - SetFunction::delta(a.size(), f), opts).value;
    SetFunctionSplit parts = delta_split(a, f);
    MinorResult mr = minor(m, f, MinorKind::Restrict);
    MinorResult mc = minor(m, f, MinorKind::Contract);
    mpz_class prod = chi_star(mr.matroid, parts.restrict_part, opts).value *
                     chi_star(mc.matroid, parts.contract_part, opts).value;
    mpz_class rhs = shifted + prod;
    bool ok = (lhs == rhs);
    report.all_ok &= ok;
    report.lines.push_back({f, lhs, rhs, ok});
  }
  return report;
}

struct HStarVector {
  int d = 0;
  std::vector<mpz_class> entries;  // h*_0 .. h*_d
};

namespace detail {

// Forward-difference table of an integer sequence sampled at 0..kmax:
// row j holds Delta^j applied at 0.
inline std::vector<mpz_class> finite_differences(std::vector<mpz_class> v) {
  std::vector<mpz_class> diffs;
  diffs.reserve(v.size());
  while (!v.empty()) {
    diffs.push_back(v.front());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
    v.pop_back();
  }
  return diffs;
}

// Newton evaluation sum_j Delta^j(0) * C(t, j) at an integer t.
inline mpz_class newton_eval(const std::vector<mpz_class>& diffs, long t) {
  mpz_class total = 0;
  mpz_class binom = 1;  // C(t, 0)
  for (std::size_t j = 0; j < diffs.size(); ++j) {
    total += diffs[j] * binom;
    binom *= mpz_class(t) - mpz_class(static_cast<long>(j));
    mpz_class div = mpz_class(static_cast<long>(j) + 1);
    binom /= div;
  }
  return total;
}

// Degree of the sampled sequence, demanding at least `slack` vanishing
// trailing difference orders as evidence of polynomiality.
inline int sequence_degree(const std::vector<mpz_class>& diffs, int slack,
                           const char* what) {
  int d = 0;
  for (std::size_t j = 0; j < diffs.size(); ++j)
    if (diffs[j] != 0) d = static_cast<int>(j);
  if (static_cast<int>(diffs.size()) - 1 - d < slack)
    throw NonPolynomialSequence(std::string(what) +
                                ": sequence did not stabilize; increase kmax");
  return d;
}

}  // namespace detail

// h*-vector of k -> chi*_M(f_{kP}): sample chi at k = 0..kmax, find
// the exact polynomial degree d, and read the numerator coefficients
// of sum_k chi(k) t^k = h*(t) / (1-t)^{d+1} off the convolution
//   h*_j = sum_i (-1)^i C(d+1, i) chi_{j-i}.
inline HStarVector hstar(const Matroid& m, const SetFunction& z, int kmax = -1,
                         const QOptions& opts = {}) {
  if (m.loops() != 0) throw ValidationError("hstar requires a loopless matroid");
  if (kmax < 0) kmax = m.size() + 2;
  std::vector<mpz_class> chi;
  chi.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    chi.push_back(chi_star(m, z.dilated(k), opts).value);
  std::vector<mpz_class> diffs = detail::finite_differences(chi);
  const int d = detail::sequence_degree(diffs, 2, "hstar");

  auto binom = [](int a, int b) {
    mpz_class r = 1;
    for (int i = 0; i < b; ++i) {
      r *= a - i;
      r /= i + 1;
    }
    return r;
  };
  HStarVector h;
  h.d = d;
  for (int j = 0; j <= kmax; ++j) {
    mpz_class hj = 0;
    for (int i = 0; i <= std::min(j, d + 1); ++i) {
      mpz_class term = binom(d + 1, i) * chi[j - i];
      if (i % 2) term = -term;
      hj += term;
    }
    if (j <= d) {
      h.entries.push_back(hj);
    } else if (hj != 0) {
      throw NonPolynomialSequence("hstar: numerator does not terminate at degree d");
    }
  }
  return h;
}

// Serre duality through the reciprocity theorem, specialized at 1:
// lhs = chi of the dual input, rhs = (-1)^{rk-1} chi of the
// omega-twisted input.  The theorem asserts lhs == rhs.
inline std::pair<mpz_class, mpz_class> serre_check(const Matroid& m, const SetFunction& a,
                                                   const QOptions& opts = {}) {
  mpz_class lhs =
      q_matroid(family_dual(from_delta(a)), m, opts).result.specialize_ones();
  mpz_class rhs = q_matroid(family_op(from_delta(a), omega(m), FamilyOp::Mul), m, opts)
                      .result.specialize_ones();
  if (m.rank() % 2 == 0) rhs = -rhs;
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qbrion
