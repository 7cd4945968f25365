#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qbrion {

// Thrown when an input file or polynomial string fails to parse.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a parsed object violates a structural invariant
// (bad matroid, bad piecewise family, non-submodular polytope input, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Exact binomial division failed: the dividend is not a multiple of
// x_a - x_b.  This is the runtime detector for broken piecewise gluing.
struct NotDivisible : ValidationError {
  NotDivisible(const std::string& what, int a_, int b_)
      : ValidationError(what), a(a_), b(b_) {}
  int a;
  int b;
};

// Basis-exchange failure, with the witnessing pair and element.
struct NotAMatroid : ValidationError {
  explicit NotAMatroid(const std::string& what) : ValidationError(what) {}
};

// A piecewise family breaks the adjacent-transposition divisibility
// condition at (sigma, i).
struct GluingViolation : ValidationError {
  GluingViolation(const std::string& what, std::vector<int> sigma_, int i_)
      : ValidationError(what), sigma(std::move(sigma_)), i(i_) {}
  std::vector<int> sigma;
  int i;
};

// family_split was handed a family that is not made of unit monomials.
struct NotAMonomialFamily : ValidationError {
  explicit NotAMonomialFamily(const std::string& what) : ValidationError(what) {}
};

// The restriction/contraction of a family disagreed across S_{E,T}.
struct WellDefinednessViolation : ValidationError {
  explicit WellDefinednessViolation(const std::string& what) : ValidationError(what) {}
};

// Evaluation point has coinciding coordinates, hitting a cone pole.
struct PoleHit : std::runtime_error {
  explicit PoleHit(const std::string& what) : std::runtime_error(what) {}
};

// A per-coordinate lattice bound came out empty; the set function is
// not submodular (or otherwise contradictory).
struct InfeasibleBox : ValidationError {
  explicit InfeasibleBox(const std::string& what) : ValidationError(what) {}
};

// Exact interpolation could not stabilize at the requested number of
// sample values.
struct NonPolynomialSequence : std::runtime_error {
  explicit NonPolynomialSequence(const std::string& what) : std::runtime_error(what) {}
};

// Requested quantity does not exist for this input (e.g. the greedy
// threshold index when the top element is a loop or coloop).
struct NotApplicable : std::logic_error {
  explicit NotApplicable(const std::string& what) : std::logic_error(what) {}
};

// Reached only through implementation bugs, never through bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qbrion
