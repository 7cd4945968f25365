#pragma once

// Integer set functions z : 2^[n] -> Z with z(emptyset) = 0.  They
// serve both as support-function data of generalized permutohedra and
// as delta-coefficient data of piecewise linear functions.

#include <cstdint>
#include <optional>
#include <vector>

#include "qbrion/errors.hpp"
#include "qbrion/matroid.hpp"

namespace qbrion {

class SetFunction {
 public:
  explicit SetFunction(int n) : n_(n), values_(std::size_t(1) << n, 0) {}

  SetFunction(int n, std::vector<long long> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != (std::size_t(1) << n) || values_[0] != 0)
      throw ValidationError("set function needs 2^n values with z(emptyset) = 0");
  }

  static SetFunction zero(int n) { return SetFunction(n); }

  // The matroid rank function, whose polytope is the base polytope.
  static SetFunction rank_function(const Matroid& m) {
    SetFunction z(m.size());
    for (GroundSubset s = 1; s <= full_set(m.size()); ++s) z.set(s, m.rank(s));
    return z;
  }

  int size() const { return n_; }
  long long at(GroundSubset s) const { return values_[s]; }
  void set(GroundSubset s, long long v) {
    if (s == 0 && v != 0) throw ValidationError("z(emptyset) must stay 0");
    values_[s] = v;
  }

  bool operator==(const SetFunction& o) const { return n_ == o.n_ && values_ == o.values_; }

  SetFunction dilated(long long k) const {
    SetFunction z(n_);
    for (std::size_t s = 0; s < values_.size(); ++s) z.values_[s] = k * values_[s];
    return z;
  }

  SetFunction operator+(const SetFunction& o) const {
    if (n_ != o.n_) throw InternalError("set function size mismatch");
    SetFunction z(n_);
    for (std::size_t s = 0; s < values_.size(); ++s) z.values_[s] = values_[s] + o.values_[s];
    return z;
  }

  SetFunction operator-(const SetFunction& o) const {
    if (n_ != o.n_) throw InternalError("set function size mismatch");
    SetFunction z(n_);
    for (std::size_t s = 0; s < values_.size(); ++s) z.values_[s] = values_[s] - o.values_[s];
    return z;
  }

  // delta_T: value 1 at T, 0 elsewhere.
  static SetFunction delta(int n, GroundSubset t) {
    SetFunction z(n);
    if (t != 0) z.set(t, 1);
    return z;
  }

  // Exhaustive submodularity scan; returns a witnessing pair (A, B)
  // when z(A) + z(B) < z(A|B) + z(A&B).
  std::optional<std::pair<GroundSubset, GroundSubset>> submodularity_violation() const {
    const GroundSubset full = full_set(n_);
    for (GroundSubset a = 0; a <= full; ++a)
      for (GroundSubset b = 0; b <= full; ++b)
        if (values_[a] + values_[b] < values_[a | b] + values_[a & b])
          return std::make_pair(a, b);
    return std::nullopt;
  }

  bool is_submodular() const { return !submodularity_violation().has_value(); }

 private:
  int n_;
  std::vector<long long> values_;
};

// Greedy vertex of the generalized permutohedron: coordinate sigma(i)
// gets z(prefix_i) - z(prefix_{i-1}).
inline std::vector<long long> vertex(const SetFunction& z, const Permutation& sigma) {
  std::vector<long long> v(z.size(), 0);
  GroundSubset prefix = 0;
  long long prev = 0;
  for (int e : sigma) {
    prefix |= element_mask(e);
    long long cur = z.at(prefix);
    v[e - 1] = cur - prev;
    prev = cur;
  }
  return v;
}

// Slides the facet indexed by t inward one lattice step.
inline SetFunction slide_facet(const SetFunction& z, GroundSubset t) {
  if (t == 0 || t == full_set(z.size()))
    throw ValidationError("slide_facet needs a nonempty proper subset");
  SetFunction out = z;
  out.set(t, z.at(t) - 1);
  return out;
}

struct SetFunctionSplit {
  SetFunction restrict_part;   // on T, relabeled to {1..|T|}
  SetFunction contract_part;   // on T^c, relabeled
  std::vector<int> labels_restrict;
  std::vector<int> labels_contract;
};

// Support-function split: z|T(S) = z(S), z/T(S) = z(S|T) - z(T).
inline SetFunctionSplit split(const SetFunction& z, GroundSubset t) {
  const int n = z.size();
  if (t == 0 || t == full_set(n))
    throw ValidationError("split needs a nonempty proper subset");
  std::vector<int> lt = subset_elements(t);
  std::vector<int> lc = subset_elements(full_set(n) & ~t);
  SetFunction zr(static_cast<int>(lt.size()));
  SetFunction zc(static_cast<int>(lc.size()));
  for (GroundSubset s = 1; s <= full_set(zr.size()); ++s) {
    GroundSubset orig = 0;
    for (int j = 0; j < zr.size(); ++j)
      if (s & element_mask(j + 1)) orig |= element_mask(lt[j]);
    zr.set(s, z.at(orig));
  }
  for (GroundSubset s = 1; s <= full_set(zc.size()); ++s) {
    GroundSubset orig = 0;
    for (int j = 0; j < zc.size(); ++j)
      if (s & element_mask(j + 1)) orig |= element_mask(lc[j]);
    zc.set(s, z.at(orig | t) - z.at(t));
  }
  return {std::move(zr), std::move(zc), std::move(lt), std::move(lc)};
}

// Delta-coefficient split along a flat: f|F keeps the coefficients of
// subsets of F, and f/F reads the values above F, normalized so the
// contraction starts at zero: (f/F)(S) = a(F|S) - a(F).  The shift by
// a(F) is forced by compatibility with the facet-slide recursion --
// x^{f/F} must be the contraction of the monomial family x^f, whose
// first prefix difference is a(F|{s}) - a(F).  Without it the flat
// recursion fails on inputs with a(F) != 0.
inline SetFunctionSplit delta_split(const SetFunction& a, GroundSubset f) {
  const int n = a.size();
  if (f == 0 || f == full_set(n))
    throw ValidationError("delta_split needs a nonempty proper subset");
  std::vector<int> lf = subset_elements(f);
  std::vector<int> lc = subset_elements(full_set(n) & ~f);
  SetFunction ar(static_cast<int>(lf.size()));
  SetFunction ac(static_cast<int>(lc.size()));
  for (GroundSubset s = 1; s <= full_set(ar.size()); ++s) {
    GroundSubset orig = 0;
    for (int j = 0; j < ar.size(); ++j)
      if (s & element_mask(j + 1)) orig |= element_mask(lf[j]);
    ar.set(s, a.at(orig));
  }
  for (GroundSubset s = 1; s <= full_set(ac.size()); ++s) {
    GroundSubset orig = 0;
    for (int j = 0; j < ac.size(); ++j)
      if (s & element_mask(j + 1)) orig |= element_mask(lc[j]);
    ac.set(s, a.at(orig | f) - a.at(f));
  }
  return {std::move(ar), std::move(ac), std::move(lf), std::move(lc)};
}

}  // namespace qbrion
