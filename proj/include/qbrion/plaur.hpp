#pragma once

// Piecewise Laurent polynomials on the braid fan: a Laurent polynomial
// per maximal cone (permutation), glued by the divisibility condition
// f_sigma - f_{sigma tau_i}  divisible by  x_{sigma(i)} - x_{sigma(i+1)}.

#include <sstream>
#include <vector>

#include "qbrion/errors.hpp"
#include "qbrion/laurent.hpp"
#include "qbrion/matroid.hpp"
#include "qbrion/permutation.hpp"
#include "qbrion/setfunction.hpp"

namespace qbrion {

class PiecewiseLaurent {
 public:
  // ground: the family is indexed by permutations of {1..ground}.
  // ambient: number of variables of each entry; during elimination the
  // ambient stays at the original n while the ground shrinks.
  PiecewiseLaurent(int ground, int ambient)
      : ground_(ground), ambient_(ambient),
        entries_(factorial(ground), LaurentPoly(ambient)) {}

  static PiecewiseLaurent constant(int n, mpz_class c = 1) {
    PiecewiseLaurent f(n, n);
    for (auto& e : f.entries_) e = LaurentPoly::constant(n, c);
    return f;
  }

  int ground() const { return ground_; }
  int ambient() const { return ambient_; }
  std::size_t family_size() const { return entries_.size(); }

  const LaurentPoly& at_index(std::uint64_t index) const { return entries_[index]; }
  LaurentPoly& at_index(std::uint64_t index) { return entries_[index]; }
  const LaurentPoly& at(const Permutation& sigma) const { return entries_[perm_index(sigma)]; }
  LaurentPoly& at(const Permutation& sigma) { return entries_[perm_index(sigma)]; }

  bool operator==(const PiecewiseLaurent& o) const {
    return ground_ == o.ground_ && ambient_ == o.ambient_ && entries_ == o.entries_;
  }

  // Checks the gluing condition on every adjacent-transposition pair.
  void validate() const {
    for (std::uint64_t idx = 0; idx < entries_.size(); ++idx) {
      Permutation sigma = perm_at(ground_, idx);
      for (int i = 1; i < ground_; ++i) {
        Permutation swapped = swap_adjacent(sigma, i);
        LaurentPoly diff = entries_[idx] - at(swapped);
        if (!diff.divisible_by_binomial(sigma[i - 1], sigma[i])) {
          std::ostringstream os;
          os << "gluing fails at sigma=(";
          for (std::size_t j = 0; j < sigma.size(); ++j) os << (j ? "," : "") << sigma[j];
          os << "), i=" << i << ": difference not divisible by x" << sigma[i - 1]
             << " - x" << sigma[i];
          throw GluingViolation(os.str(), sigma, i);
        }
      }
    }
  }

  bool is_monomial_family() const {
    for (const auto& e : entries_)
      if (!e.is_unit_monomial()) return false;
    return true;
  }

 private:
  int ground_;
  int ambient_;
  std::vector<LaurentPoly> entries_;
};

enum class FamilyOp { Add, Mul };

inline PiecewiseLaurent family_op(const PiecewiseLaurent& f, const PiecewiseLaurent& g,
                                  FamilyOp kind) {
  if (f.ground() != g.ground() || f.ambient() != g.ambient())
    throw InternalError("family_op: size mismatch");
  PiecewiseLaurent out(f.ground(), f.ambient());
  for (std::uint64_t i = 0; i < f.family_size(); ++i)
    out.at_index(i) = (kind == FamilyOp::Add) ? f.at_index(i) + g.at_index(i) : f.at_index(i) * g.at_index(i);
#ifndef NDEBUG
  out.validate();
#endif
  return out;
}

inline PiecewiseLaurent family_dual(const PiecewiseLaurent& f) {
  PiecewiseLaurent out(f.ground(), f.ambient());
  for (std::uint64_t i = 0; i < f.family_size(); ++i) out.at_index(i) = f.at_index(i).dual();
  return out;
}

inline PiecewiseLaurent family_negate(const PiecewiseLaurent& f) {
  PiecewiseLaurent out(f.ground(), f.ambient());
  for (std::uint64_t i = 0; i < f.family_size(); ++i) out.at_index(i) = -f.at_index(i);
  return out;
}

inline PiecewiseLaurent family_scale(const PiecewiseLaurent& f, const mpz_class& c) {
  PiecewiseLaurent out(f.ground(), f.ambient());
  for (std::uint64_t i = 0; i < f.family_size(); ++i) out.at_index(i) = f.at_index(i) * c;
  return out;
}

// Monomial family of a set function read as delta-coefficients: the
// exponent of x_{sigma(i)} is a(prefix_i) - a(prefix_{i-1}).  For
// submodular a this is the vertex-monomial family of the polytope.
inline PiecewiseLaurent from_delta(const SetFunction& a) {
  const int n = a.size();
  PiecewiseLaurent out(n, n);
  for (std::uint64_t idx = 0; idx < out.family_size(); ++idx) {
    Permutation sigma = perm_at(n, idx);
    ExponentVector e(n, 0);
    GroundSubset prefix = 0;
    long long prev = 0;
    for (int el : sigma) {
      prefix |= element_mask(el);
      long long cur = a.at(prefix);
      e[el - 1] = static_cast<int>(cur - prev);
      prev = cur;
    }
    out.at_index(idx) = LaurentPoly::monomial(std::move(e));
  }
  return out;
}

// The reciprocity twist: (omega_M)_sigma =
// (x_{sigma(n)} / x_{sigma(1)}) * prod_{i not in B_M(sigma)} x_i^{-1}.
inline PiecewiseLaurent omega(const Matroid& m) {
  const int n = m.size();
  PiecewiseLaurent out(n, n);
  for (std::uint64_t idx = 0; idx < out.family_size(); ++idx) {
    Permutation sigma = perm_at(n, idx);
    GroundSubset basis = m.greedy_basis(sigma);
    ExponentVector e(n, 0);
    e[sigma.back() - 1] += 1;
    e[sigma.front() - 1] -= 1;
    for (int i = 1; i <= n; ++i)
      if (!(basis & element_mask(i))) e[i - 1] -= 1;
    out.at_index(idx) = LaurentPoly::monomial(std::move(e));
  }
#ifndef NDEBUG
  out.validate();
#endif
  return out;
}

// Facet slide f_T: multiply by x_{sigma(k+1)} / x_{sigma(k)} on the
// cones whose first k entries are exactly T.
inline PiecewiseLaurent family_slide(const PiecewiseLaurent& f, GroundSubset t) {
  const int n = f.ground();
  if (f.ambient() != n) throw InternalError("family_slide: relabeled family expected");
  if (t == 0 || t == full_set(n))
    throw ValidationError("family_slide needs a nonempty proper subset");
  const int k = subset_size(t);
  PiecewiseLaurent out(n, n);
  for (std::uint64_t idx = 0; idx < f.family_size(); ++idx) {
    Permutation sigma = perm_at(n, idx);
    GroundSubset head = 0;
    for (int i = 0; i < k; ++i) head |= element_mask(sigma[i]);
    if (head == t)
      out.at_index(idx) = f.at_index(idx).times_ratio(sigma[k], sigma[k - 1]);
    else
      out.at_index(idx) = f.at_index(idx);
  }
  out.validate();
  return out;
}

struct FamilySplit {
  PiecewiseLaurent restrict_part;  // on Sigma_T, relabeled to {1..k}
  PiecewiseLaurent contract_part;  // on Sigma_{T^c}, relabeled
  std::vector<int> labels_restrict;
  std::vector<int> labels_contract;
};

// Splits a monomial family along T:
//   (f|T)_{sigma|T} = f_sigma with variables outside T set to 1,
//   (f/T)_{sigma/T} = f_sigma with variables inside T set to 1,
// for sigma in S_{E,T}.  Well-definedness across all of S_{E,T} is
// verified rather than assumed.
inline FamilySplit family_split(const PiecewiseLaurent& f, GroundSubset t) {
  const int n = f.ground();
  if (f.ambient() != n) throw InternalError("family_split: relabeled family expected");
  if (t == 0 || t == full_set(n))
    throw ValidationError("family_split needs a nonempty proper subset");
  if (!f.is_monomial_family())
    throw NotAMonomialFamily("family_split is defined for unit monomial families only");

  std::vector<int> lt = subset_elements(t);
  std::vector<int> lc = subset_elements(full_set(n) & ~t);
  const int k = static_cast<int>(lt.size());
  const int nc = static_cast<int>(lc.size());
  PiecewiseLaurent fr(k, k), fc(nc, nc);
  std::vector<bool> seen_r(factorial(k), false), seen_c(factorial(nc), false);

  // sigma in S_{E,T} decomposes as a pair (alpha, beta) with alpha a
  // permutation of T and beta a permutation of T^c.
  for (std::uint64_t ia = 0; ia < factorial(k); ++ia) {
    Permutation alpha = perm_at(k, ia);
    for (std::uint64_t ib = 0; ib < factorial(nc); ++ib) {
      Permutation beta = perm_at(nc, ib);
      Permutation sigma;
      sigma.reserve(n);
      for (int j : alpha) sigma.push_back(lt[j - 1]);
      for (int j : beta) sigma.push_back(lc[j - 1]);
      const LaurentPoly& entry = f.at(sigma);
      LaurentPoly restricted = entry.set_ones(full_set(n) & ~t).project(lt);
      LaurentPoly contracted = entry.set_ones(t).project(lc);
      if (!seen_r[ia]) {
        fr.at_index(ia) = restricted;
        seen_r[ia] = true;
      } else if (!(fr.at_index(ia) == restricted)) {
        throw WellDefinednessViolation("f|T differs across S_{E,T} at " +
                                       fr.at_index(ia).to_text() + " vs " + restricted.to_text());
      }
      if (!seen_c[ib]) {
        fc.at_index(ib) = contracted;
        seen_c[ib] = true;
      } else if (!(fc.at_index(ib) == contracted)) {
        throw WellDefinednessViolation("f/T differs across S_{E,T} at " +
                                       fc.at_index(ib).to_text() + " vs " + contracted.to_text());
      }
#ifndef NDEBUG
      // The defining product identity f_sigma = (f|T)(f/T) on S_{E,T}.
      if (!(restricted.embed(lt, n) * contracted.embed(lc, n) == entry))
        throw InternalError("family_split: product identity broken");
#endif
    }
  }
  fr.validate();
  fc.validate();
  return {std::move(fr), std::move(fc), std::move(lt), std::move(lc)};
}

}  // namespace qbrion
