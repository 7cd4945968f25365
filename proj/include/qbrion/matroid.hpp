#pragma once

// Matroids given by their list of bases (bitmasks over a ground set of
// size <= 31), with the rank oracle, greedy bases, minors and flats.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qbrion/errors.hpp"
#include "qbrion/permutation.hpp"

namespace qbrion {

// Subset of {1..n} as a bitmask; bit i-1 represents element i.
using GroundSubset = std::uint32_t;

inline GroundSubset full_set(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

inline GroundSubset element_mask(int i) { return 1u << (i - 1); }

inline int subset_size(GroundSubset s) { return std::popcount(s); }

inline std::vector<int> subset_elements(GroundSubset s) {
  std::vector<int> out;
  for (int i = 1; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

inline std::string subset_to_string(GroundSubset s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) os << ",";
    os << e;
    first = false;
  }
  os << "}";
  return os.str();
}

class Matroid {
 public:
  Matroid(int n, std::vector<GroundSubset> bases) : n_(n), bases_(std::move(bases)) {
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  }

  static Matroid boolean(int n) { return Matroid(n, {full_set(n)}); }

  static Matroid uniform(int r, int n) {
    std::vector<GroundSubset> bases;
    for (GroundSubset s = 0; s <= full_set(n); ++s)
      if (subset_size(s) == r) bases.push_back(s);
    return Matroid(n, std::move(bases));
  }

  int size() const { return n_; }
  const std::vector<GroundSubset>& bases() const { return bases_; }

  bool is_basis(GroundSubset b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
  }

  int rank() const { return bases_.empty() ? 0 : subset_size(bases_.front()); }

  // Exhaustive check of nonemptiness, equicardinality and the
  // basis-exchange property.  Throws NotAMatroid with a witness.
  void validate() const {
    if (bases_.empty()) throw NotAMatroid("matroid has no bases");
    const int r = subset_size(bases_.front());
    for (GroundSubset b : bases_) {
      if ((b & ~full_set(n_)) != 0)
        throw NotAMatroid("basis " + subset_to_string(b) + " is not a subset of the ground set");
      if (subset_size(b) != r)
        throw NotAMatroid("bases " + subset_to_string(bases_.front()) + " and " +
                          subset_to_string(b) + " have different cardinalities");
    }
    for (GroundSubset b1 : bases_) {
      for (GroundSubset b2 : bases_) {
        GroundSubset only1 = b1 & ~b2;
        for (int i = 1; i <= n_; ++i) {
          if (!(only1 & element_mask(i))) continue;
          bool found = false;
          GroundSubset only2 = b2 & ~b1;
          for (int j = 1; j <= n_ && !found; ++j)
            if ((only2 & element_mask(j)) && is_basis((b1 & ~element_mask(i)) | element_mask(j)))
              found = true;
          if (!found) {
            std::ostringstream os;
            os << "basis exchange fails for B1=" << subset_to_string(b1)
               << ", B2=" << subset_to_string(b2) << ", i=" << i;
            throw NotAMatroid(os.str());
          }
        }
      }
    }
  }

  // rk(S): maximum over bases of |B intersect S|.
  int rank(GroundSubset s) const {
    int best = 0;
    for (GroundSubset b : bases_) best = std::max(best, subset_size(b & s));
    return best;
  }

  GroundSubset loops() const {
    GroundSubset u = 0;
    for (GroundSubset b : bases_) u |= b;
    return full_set(n_) & ~u;
  }

  GroundSubset coloops() const {
    GroundSubset c = full_set(n_);
    for (GroundSubset b : bases_) c &= b;
    return c;
  }

  bool is_loop(int i) const { return (loops() & element_mask(i)) != 0; }
  bool is_coloop(int i) const { return (coloops() & element_mask(i)) != 0; }

  // Greedy basis B_M(sigma): scan sigma and keep elements that raise
  // the rank of the prefix.
  GroundSubset greedy_basis(const Permutation& sigma) const {
    GroundSubset prefix = 0, basis = 0;
    int rk = 0;
    for (int e : sigma) {
      prefix |= element_mask(e);
      int rk2 = rank(prefix);
      if (rk2 > rk) basis |= element_mask(e);
      rk = rk2;
    }
    return basis;
  }

  // All flats: subsets whose rank grows when any outside element is
  // added.  Sorted ascending as bitmask values; always contains E.
  std::vector<GroundSubset> flats() const {
    std::vector<GroundSubset> out;
    for (GroundSubset f = 0; f <= full_set(n_); ++f) {
      bool flat = true;
      int rf = rank(f);
      for (int i = 1; i <= n_ && flat; ++i)
        if (!(f & element_mask(i)) && rank(f | element_mask(i)) == rf) flat = false;
      if (flat) out.push_back(f);
    }
    return out;
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  int n_;
  std::vector<GroundSubset> bases_;
};

enum class MinorKind { Restrict, Contract, Delete };

// A minor together with the relabeling onto a contiguous ground set:
// element j of `matroid` is `labels[j-1]` of the parent.
struct MinorResult {
  Matroid matroid;
  std::vector<int> labels;
};

namespace detail {

inline GroundSubset relabel_down(GroundSubset s, const std::vector<int>& labels) {
  GroundSubset r = 0;
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (s & element_mask(labels[j])) r |= element_mask(static_cast<int>(j) + 1);
  return r;
}

}  // namespace detail

// Restriction M|T, contraction M/T or deletion M\T, relabeled onto
// {1..m} in the order of the surviving elements.
inline MinorResult minor(const Matroid& m, GroundSubset t, MinorKind kind) {
  if (kind == MinorKind::Delete) return minor(m, full_set(m.size()) & ~t, MinorKind::Restrict);
  const int rt = m.rank(t);
  std::set<GroundSubset> raw;
  if (kind == MinorKind::Restrict) {
    // Maximal independent subsets of T are exactly the B & T of full rank.
    for (GroundSubset b : m.bases())
      if (subset_size(b & t) == rt) raw.insert(b & t);
    std::vector<int> labels = subset_elements(t);
    std::vector<GroundSubset> bases;
    for (GroundSubset b : raw) bases.push_back(detail::relabel_down(b, labels));
    return {Matroid(static_cast<int>(labels.size()), std::move(bases)), std::move(labels)};
  }
  // Contraction: bases B \ T where B restricts to a basis of M|T.
  for (GroundSubset b : m.bases())
    if (subset_size(b & t) == rt) raw.insert(b & ~t);
  std::vector<int> labels = subset_elements(full_set(m.size()) & ~t);
  std::vector<GroundSubset> bases;
  for (GroundSubset b : raw) bases.push_back(detail::relabel_down(b, labels));
  return {Matroid(static_cast<int>(labels.size()), std::move(bases)), std::move(labels)};
}

}  // namespace qbrion
